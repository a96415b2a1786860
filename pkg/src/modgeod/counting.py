"""Exact counters for rotation classes of sign words and their subfamilies.

Length bookkeeping used throughout: ``tau`` counts sign entries, so the group
word length is 2*tau.  Reciprocal (half-turn) families are parameterised by
``t`` with 2t sign entries, i.e. group length 4t.

Every count is an exact Python integer; floating point only appears in the
growth-target formulas and in the float views of the root data.  Memoised
recursions are pure, so cached and uncached evaluation agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional

__all__ = [
    "AlphaData",
    "CountRecord",
    "PrecisionLimitError",
    "necklace_count",
    "primitive_class_count",
    "primitive_class_count_mobius",
    "reciprocal_count",
    "cumulative",
    "bounded_compositions",
    "alpha",
    "closed_form_compositions",
    "lowlying_lower_bound",
    "growth_target",
    "rnd",
]

# float ceiling above which a rounded double can no longer be trusted to name
# an exact integer
_ROUND_CEILING = 1 << 52


class PrecisionLimitError(ValueError):
    """Raised instead of silently returning an untrustworthy rounded integer."""


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _mobius(n: int) -> int:
    mu = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            mu = -mu
        p += 1
    if n > 1:
        mu = -mu
    return mu


# ---------------------------------------------------------------------------
# necklace and primitive-class counts

def necklace_count(tau: int) -> int:
    """Number of rotation classes of sign words with tau entries.

    Orbit counting for the cyclic shift action: (1/tau) * sum over shifts of
    2**gcd(shift, tau).  The sum is always divisible by tau.
    """
    if tau < 1:
        raise ValueError("tau must be >= 1")
    total = sum(1 << gcd(j, tau) for j in range(1, tau + 1))
    count, rem = divmod(total, tau)
    assert rem == 0, "orbit-count sum must be divisible by the group order"
    return count


@lru_cache(maxsize=None)
def _primitive_class_count(tau: int) -> int:
    return necklace_count(tau) - sum(
        _primitive_class_count(s) for s in _divisors(tau) if s < tau
    )


def primitive_class_count(tau: int) -> int:
    """Rotation classes with tau entries that are not proper powers.

    Divisor recursion: subtract the primitive counts of every shorter length
    dividing tau, including length 1 -- both one-entry classes are infinite
    order as group words, so their powers do occur at longer lengths.
    """
    if tau < 1:
        raise ValueError("tau must be >= 1")
    return _primitive_class_count(tau)


def primitive_class_count_mobius(tau: int) -> int:
    """Independent route to the primitive count via Mobius inversion."""
    if tau < 1:
        raise ValueError("tau must be >= 1")
    total = sum(_mobius(d) * (1 << (tau // d)) for d in _divisors(tau))
    count, rem = divmod(total, tau)
    assert rem == 0
    return count


@lru_cache(maxsize=None)
def _primitive_reciprocal_count(t: int) -> int:
    return (1 << (t - 1)) - sum(
        _primitive_reciprocal_count(s) for s in _divisors(t) if s < t
    )


def reciprocal_count(t: int, primitive: bool = False) -> int:
    """Reciprocal classes of group length 4t: 2**(t-1), or the primitive part.

    The primitive value follows the same divisor recursion as
    ``primitive_class_count`` restricted to the reciprocal family.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if primitive:
        return _primitive_reciprocal_count(t)
    return 1 << (t - 1)


# number of torsion conjugacy classes of group-word length one
_TORSION_CLASSES = 3

_CUMULATIVE_FAMILIES = ("classes", "reciprocal", "lowlying-reciprocal", "compositions")


def cumulative(
    family: str,
    t_max: int,
    *,
    m: Optional[int] = None,
    primitive: bool = False,
    include_torsion: bool = False,
) -> int:
    """Sum of per-length exact counts for lengths 1..t_max.

    ``classes`` may add the 3 torsion classes of group length one;
    ``reciprocal`` without the primitive flag collapses to 2**t_max - 1;
    ``lowlying-reciprocal`` / ``compositions`` need the run bound m.
    """
    if t_max < 1:
        raise ValueError("t_max must be >= 1")
    if family == "classes":
        if include_torsion and primitive:
            raise ValueError("torsion classes are not counted as primitive")
        count = primitive_class_count if primitive else necklace_count
        total = sum(count(tau) for tau in range(1, t_max + 1))
        return total + (_TORSION_CLASSES if include_torsion else 0)
    if family == "reciprocal":
        if include_torsion:
            raise ValueError("torsion flag applies only to the classes family")
        if primitive:
            return sum(reciprocal_count(t, primitive=True) for t in range(1, t_max + 1))
        return (1 << t_max) - 1
    if family in ("lowlying-reciprocal", "compositions"):
        if include_torsion or primitive:
            raise ValueError(f"flags not supported for family {family!r}")
        if m is None:
            raise ValueError(f"family {family!r} needs the run bound m")
        return sum(bounded_compositions(t, m) for t in range(1, t_max + 1))
    raise ValueError(f"unknown family {family!r}; expected one of {_CUMULATIVE_FAMILIES}")


# ---------------------------------------------------------------------------
# bounded compositions

def bounded_compositions(t: int, m: int) -> int:
    """Number of compositions of t with every part at most m.

    Conventions: one empty composition of 0, none of negative totals.  For
    m >= t >= 1 this is all 2**(t-1) compositions.
    """
    if m < 1:
        raise ValueError("part bound m must be >= 1")
    if t < 0:
        return 0
    counts = [1]  # counts[k] = compositions of k, built upward
    for k in range(1, t + 1):
        counts.append(sum(counts[k - i] for i in range(1, min(m, k) + 1)))
    return counts[t]


# ---------------------------------------------------------------------------
# growth-rate root and closed form

@dataclass(frozen=True)
class AlphaData:
    """Positive root of z^m - z^(m-1) - ... - z - 1 with derived coefficient.

    ``alpha_exact`` and ``d_exact`` are rational approximants sharp enough
    that the exact residual is far below the 1e-12 contract; ``alpha``, ``d``
    and ``residual`` are their float views.
    """

    m: int
    alpha: float
    d: float
    residual: float
    alpha_exact: Fraction
    d_exact: Fraction

    def __post_init__(self) -> None:
        lower = 2 * (1 - Fraction(1, 1 << self.m))
        if not lower <= self.alpha_exact < 2:
            raise ValueError("root escaped its bracket")
        if abs(self.residual) >= 1e-12:
            raise ValueError("root residual above tolerance")
        if self.d_exact <= 0:
            raise ValueError("closed-form coefficient must be positive")


def _run_polynomial(z: Fraction, m: int) -> Fraction:
    # z^m - z^(m-1) - ... - z - 1, via the equivalent quotient
    # (z^(m+1) - 2 z^m + 1) / (z - 1); exact for rational z != 1
    return (z ** (m + 1) - 2 * z ** m + 1) / (z - 1)


@lru_cache(maxsize=None)
def _alpha_cached(m: int, tol: float) -> AlphaData:
    lo = 2 * (1 - Fraction(1, 1 << m))
    hi = Fraction(2)
    # sign test uses the cleared-denominator form z^(m+1) - 2 z^m + 1, which
    # shares the root's sign for z > 1
    assert lo ** (m + 1) - 2 * lo ** m + 1 < 0

    width = float(hi - lo)
    # enough halvings for the requested width, with a floor that pins the
    # exact residual orders of magnitude below 1e-12 even at m = 40
    steps = max(130, math.ceil(math.log2(width / tol)) + 1 if tol < width else 0)
    for _ in range(steps):
        mid = (lo + hi) / 2
        if mid ** (m + 1) - 2 * mid ** m + 1 < 0:
            lo = mid
        else:
            hi = mid

    root = (lo + hi) / 2
    d_exact = (root - 1) / (2 + (m + 1) * (root - 2))
    return AlphaData(
        m=m,
        alpha=float(root),
        d=float(d_exact),
        residual=float(_run_polynomial(root, m)),
        alpha_exact=root,
        d_exact=d_exact,
    )


def alpha(m: int, tol: float = 1e-13) -> AlphaData:
    """Bisect for the unique positive root of z^m - z^(m-1) - ... - 1.

    Deterministic rational bisection on the bracket [2(1 - 2^-m), 2]; no
    floating-point transcendentals are involved.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    if not tol > 0:
        raise ValueError("tol must be positive")
    return _alpha_cached(m, tol)


def rnd(x) -> int:
    """Round half up: floor(x + 1/2).  Exact on Fractions."""
    if isinstance(x, Fraction):
        return math.floor(x + Fraction(1, 2))
    return math.floor(x + 0.5)


def closed_form_compositions(t: int, m: int) -> int:
    """Bounded-composition count via the rounded growth formula rnd(d * alpha^t).

    Must agree exactly with ``bounded_compositions`` wherever it answers;
    refuses with ``PrecisionLimitError`` once d * alpha^t reaches 2**52, where
    a rounded double could no longer be trusted.  The recursion remains the
    authority beyond that point.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    if t < 0:
        raise ValueError("t must be >= 0")
    data = alpha(m)
    x = data.d_exact * data.alpha_exact ** t
    if x >= _ROUND_CEILING:
        raise PrecisionLimitError(
            f"d * alpha^t = {float(x):.6g} at t={t}, m={m} exceeds the 2^52 "
            "rounding ceiling; use the recursion instead"
        )
    return rnd(x)


# ---------------------------------------------------------------------------
# growth laws

def lowlying_lower_bound(t: int, m: int) -> float:
    """Lower bound 2^(t - t/m - 1) / t for bounded-run classes with t entries."""
    return 2.0 ** (t - t / m - 1) / t


def growth_target(item: int, t: int, m: Optional[int] = None) -> float:
    """Right-hand side of the four headline growth laws, evaluated as printed.

    1: 2^floor(t/2)                       (reciprocal, cumulative)
    2: (alpha/(2+(m+1)(alpha-2))) * alpha^floor(t/2)   (reciprocal, run bound m >= 2)
    3: 2^(t+1) / t                        (all classes, cumulative)
    4: 2^(t(1-1/m)) / t                   (bounded-run classes, m >= 3)
    """
    if item == 1:
        return float(1 << (t // 2))
    if item == 2:
        if m is None:
            raise ValueError("growth item 2 needs m")
        if m < 2:
            raise ValueError("growth item 2 needs m >= 2")
        a = alpha(m).alpha
        return (a / (2 + (m + 1) * (a - 2))) * a ** (t // 2)
    if item == 3:
        return 2.0 ** (t + 1) / t
    if item == 4:
        if m is None:
            raise ValueError("growth item 4 needs m")
        if m < 3:
            raise ValueError("growth item 4 needs m >= 3")
        return 2.0 ** (t * (1 - 1 / m)) / t
    raise ValueError(f"unknown growth item {item!r}")


# ---------------------------------------------------------------------------
# table rows

_FAMILY_TAGS = (
    "classes",
    "primitive",
    "reciprocal",
    "reciprocal-primitive",
    "lowlying",
    "lowlying-reciprocal",
    "compositions",
)
_M_FAMILIES = frozenset({"lowlying", "lowlying-reciprocal", "compositions"})


@dataclass(frozen=True)
class CountRecord:
    """One table row: a family at one length, with optional growth target."""

    family: str
    t: int
    m: Optional[int]
    exact: int
    target: Optional[float] = None

    def __post_init__(self) -> None:
        if self.family not in _FAMILY_TAGS:
            raise ValueError(f"unknown family {self.family!r}")
        if self.exact < 0:
            raise ValueError("counts are nonnegative")
        if (self.m is not None) != (self.family in _M_FAMILIES):
            raise ValueError(
                f"family {self.family!r} and run bound m={self.m!r} are inconsistent"
            )
