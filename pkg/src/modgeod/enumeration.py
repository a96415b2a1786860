"""Brute-force enumeration of word classes and the structural bijections.

These generators are the oracles the closed-form counters are checked
against: they scan all 2^tau bit patterns, keep one canonical representative
per rotation orbit, and apply filters word by word.  Nothing here is clever,
which is the point.

Emission is in increasing bit order of the canonical representative, so output
is sorted and deterministic; consumers should rely on "each class exactly
once" and not on anything finer.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .binwords import (
    BinaryWord,
    Composition,
    HalfTurnWord,
    _full_from_half_bits,
    _k0_bits,
    _max_cyclic_run_bits,
    _min_rotation_bits,
    _rotate_bits,
    _smallest_period_bits,
    canonical_form,
    from_composition,
    half_turn_partner,
    runs_of,
)

__all__ = [
    "ContractViolationError",
    "classes",
    "reciprocal_classes",
    "canonical_reciprocal",
    "phi",
    "phi_inverse",
    "power_map",
    "lower_bound_witnesses",
]


class ContractViolationError(RuntimeError):
    """A structural bijection failed to round-trip on a canonical input."""


def classes(
    tau: int,
    *,
    primitive: bool = False,
    m: Optional[int] = None,
    hyperbolic: bool = False,
) -> Iterator[BinaryWord]:
    """Yield one canonical word per rotation class of tau entries.

    Filters compose: ``primitive`` drops proper powers, ``m`` keeps only
    words whose cyclic runs are at most m, and ``hyperbolic`` drops the two
    constant-sign classes (the only ones whose matrices are parabolic rather
    than hyperbolic).
    """
    if tau < 1:
        raise ValueError("tau must be >= 1")
    if m is not None and m < 1:
        raise ValueError("run bound m must be >= 1")
    mask = (1 << tau) - 1
    for bits in range(1 << tau):
        if _min_rotation_bits(bits, tau) != bits:
            continue
        if hyperbolic and (bits == 0 or bits == mask):
            continue
        if primitive and _smallest_period_bits(bits, tau) != tau:
            continue
        if m is not None and _max_cyclic_run_bits(bits, tau) > m:
            continue
        yield BinaryWord(bits, tau)


def reciprocal_classes(
    t: int,
    m: Optional[int] = None,
    *,
    primitive: bool = False,
) -> Iterator[HalfTurnWord]:
    """Yield one representative per conjugacy class of reciprocal words.

    The free first half ranges over all 2^t sign patterns; each mirrored word
    pairs with exactly one rotation partner of the same shape, and the
    lexicographically smaller of the pair is emitted, giving 2^(t-1) classes.
    With ``m`` set, only words with cyclic runs at most m survive, and the
    number of survivors equals the number of compositions of t with parts
    at most m.  ``primitive`` keeps the classes whose return shift is t.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if m is not None and m < 1:
        raise ValueError("run bound m must be >= 1")
    length = 2 * t
    for half in range(1 << t):
        full = _full_from_half_bits(half, t)
        k0 = _k0_bits(full, length)
        partner = _rotate_bits(full, k0, length)
        assert partner != full, "a rotation orbit never meets the mirrored family once"
        if partner < full:
            continue
        if primitive and k0 != t:
            continue
        if m is not None and _max_cyclic_run_bits(full, length) > m:
            continue
        yield HalfTurnWord(BinaryWord(full, length))


def canonical_reciprocal(h: HalfTurnWord) -> HalfTurnWord:
    """The lexicographically smaller of h and its rotation partner."""
    partner, _ = half_turn_partner(h)
    return h if h.word <= partner.word else partner


def phi(h: HalfTurnWord) -> Composition:
    """Run profile of the free first half of a reciprocal representative.

    Restricted to the canonical representatives emitted by
    ``reciprocal_classes`` this is a bijection onto compositions, and the run
    bound of the full word equals the largest part of the image.
    """
    return runs_of(h.half)


def phi_inverse(c: Composition) -> HalfTurnWord:
    """Canonical reciprocal representative whose half has run profile c.

    The two run-profile preimages differ by a global sign flip and land in
    mirror-image classes; the one whose canonical representative maps back to
    c is returned.
    """
    if c.total < 1:
        raise ValueError("composition must have positive total")
    for leading in (-1, 1):
        candidate = canonical_reciprocal(
            HalfTurnWord.from_half(from_composition(c, leading))
        )
        if phi(candidate) == c:
            return candidate
    raise ContractViolationError(
        f"no canonical reciprocal representative maps onto {c.parts!r}"
    )


def power_map(w: BinaryWord, n: int) -> BinaryWord:
    """Canonical form of w repeated n times; defined on primitive words only.

    Ranging over all primitive classes of each proper divisor length, these
    images partition the nonprimitive classes with no collisions; the verify
    suite checks that explicitly.
    """
    if n < 2:
        raise ValueError("exponent must be >= 2")
    if _smallest_period_bits(w.bits, w.length) != w.length:
        raise ValueError(f"word is not primitive: {w}")
    bits = 0
    for _ in range(n):
        bits = (bits << w.length) | w.bits
    return canonical_form(BinaryWord(bits, n * w.length))


def lower_bound_witnesses(t: int, m: int) -> Iterator[BinaryWord]:
    """Generate bounded-run words from the forced-slot construction.

    Slots are grouped m at a time; the first slot of every group after the
    first, plus the final slot, are forced, and the rest choose signs freely.
    For each free assignment the forced slots are set to the first value
    combination (in sign order) that keeps every cyclic run at most m; free
    patterns admitting no such combination are skipped.  The number of free
    slots is at least t - floor(t/m) - 1, which is what makes these words a
    counting witness for the lower bound on bounded-run classes.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if m < 1:
        raise ValueError("run bound m must be >= 1")
    forced = {g for g in range(m, t, m)}
    forced.add(t - 1)
    free = [j for j in range(t) if j not in forced]
    forced_list = sorted(forced)
    n_free, n_forced = len(free), len(forced_list)
    entries = [0] * t
    for free_bits in range(1 << n_free):
        for j, slot in enumerate(free):
            entries[slot] = 1 if (free_bits >> (n_free - 1 - j)) & 1 else -1
        for forced_bits in range(1 << n_forced):
            for j, slot in enumerate(forced_list):
                entries[slot] = 1 if (forced_bits >> (n_forced - 1 - j)) & 1 else -1
            word = BinaryWord.from_entries(entries)
            if _max_cyclic_run_bits(word.bits, t) <= m:
                yield word
                break
