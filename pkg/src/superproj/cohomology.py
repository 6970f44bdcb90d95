"""Closed-form cohomology of twisted structure sheaves on projective superspace.

Everything here rests on the split decomposition

    O(ell)  =  sum over k of  O_Pn(ell - k) ^ C(m,k),   parity k mod 2,

so dimensions reduce to classical Bott numbers on P^n.  The binomial sums are
the authoritative values; the derivative closed forms (chi/zeta) are an
independent cross-check layer evaluated by exact symbolic differentiation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import sympy

from .errors import DomainError


@dataclass(frozen=True)
class DimPair:
    """Even and odd dimensions of a Z2-graded vector space."""

    even: int
    odd: int

    def __post_init__(self):
        if self.even < 0 or self.odd < 0:
            raise ValueError("dimensions must be nonnegative")

    @property
    def total(self) -> int:
        return self.even + self.odd

    def swap(self) -> "DimPair":
        return DimPair(self.odd, self.even)

    def __add__(self, other: "DimPair") -> "DimPair":
        return DimPair(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: "DimPair") -> "DimPair":
        return DimPair(self.even - other.even, self.odd - other.odd)

    def __mul__(self, k: int) -> "DimPair":
        return DimPair(self.even * k, self.odd * k)

    __rmul__ = __mul__

    def __str__(self):
        return f"{self.even}|{self.odd}"

    def to_json(self):
        return [self.even, self.odd]


ZERO_PAIR = DimPair(0, 0)


@dataclass(frozen=True)
class SplitSheaf:
    """A direct sum of parity-shifted line bundles on P^n."""

    n: int
    m: int
    ell: int
    summands: tuple  # of (twist, parity, multiplicity)


def decompose(n: int, m: int, ell: int) -> SplitSheaf:
    """Split O(ell) on the n|m projective superspace over the reduced P^n."""
    if n < 1 or m < 0:
        raise DomainError("need n >= 1 and m >= 0")
    summands = tuple((ell - k, k & 1, comb(m, k)) for k in range(m + 1))
    return SplitSheaf(n, m, ell, summands)


def bott_dim(n: int, k: int) -> dict:
    """Per-degree cohomology dimensions of O(k) on P^n (nonzero entries only)."""
    if n < 1:
        raise DomainError("need n >= 1")
    out = {}
    if k >= 0:
        out[0] = comb(k + n, n)
    if k <= -n - 1:
        out[n] = comb(-k - 1, -k - n - 1)
    return out


def cohomology_dims(n: int, m: int, ell: int) -> dict:
    """Map degree -> DimPair for O(ell); nonzero only in degrees 0 and n."""
    dims = {i: ZERO_PAIR for i in range(n + 1)}
    for twist, parity, mult in decompose(n, m, ell).summands:
        for degree, d in bott_dim(n, twist).items():
            pair = DimPair(d * mult, 0) if parity == 0 else DimPair(0, d * mult)
            dims[degree] = dims[degree] + pair
    return dims


# -- derivative closed forms (cross-check layer) ---------------------------

_X = sympy.Symbol("x")


def _eval_nth_derivative(expr, order: int) -> int:
    val = sympy.diff(expr, _X, order).subs(_X, 0)
    val = sympy.nsimplify(sympy.together(val))
    rat = sympy.Rational(val)
    if rat.q != 1:
        raise DomainError(f"closed form evaluated to non-integer {rat}")
    return int(rat)


def chi_zeta(n: int, m: int, ell: int, which: str) -> int:
    """Evaluate one of the four derivative closed forms for h^0 / h^n totals.

    which selects the regime: 'chi_m_lt_l' (m < ell), 'chi_m_ge_l'
    (0 <= ell <= m <= ell + n), 'zeta_le' (ell + n + 1 <= 0), 'zeta_gt'
    (ell + n + 1 > 0).  A selector outside its regime raises DomainError.
    """
    if n < 1 or m < 0:
        raise DomainError("need n >= 1 and m >= 0")
    fact_n = sympy.factorial(n)
    if which == "chi_m_lt_l":
        if not m < ell:
            raise DomainError("chi_m_lt_l requires m < ell")
        expr = (_X + 1) ** (ell + n - m) * (_X + 2) ** m / fact_n
        return _eval_nth_derivative(expr, n)
    if which == "chi_m_ge_l":
        if not (0 <= ell <= m):
            raise DomainError("chi_m_ge_l requires 0 <= ell <= m")
        order = ell + n - m
        if order < 0:
            raise DomainError("chi_m_ge_l derivative order is negative for m > ell + n")
        expr = (
            sympy.factorial(m) / (fact_n * sympy.factorial(ell))
            * (_X + 1) ** n * (_X + 2) ** ell
        )
        return _eval_nth_derivative(expr, order)
    if which == "zeta_le":
        if not ell + n + 1 <= 0:
            raise DomainError("zeta_le requires ell + n + 1 <= 0")
        expr = (_X + 1) ** (-ell - 1) * (_X + 2) ** m / fact_n
        return _eval_nth_derivative(expr, n)
    if which == "zeta_gt":
        if not ell + n + 1 > 0:
            raise DomainError("zeta_gt requires ell + n + 1 > 0")
        # tail removes the k <= ell part of (x+2)^m = sum C(m,k)(x+1)^k;
        # empty for ell < 0
        tail = sum(sympy.binomial(m, k) * (_X + 1) ** k for k in range(ell + 1))
        expr = (_X + 1) ** (-ell - 1) * ((_X + 2) ** m - tail) / fact_n
        return _eval_nth_derivative(expr, n)
    raise DomainError(f"unknown regime selector {which!r}")


def chi_closed(n: int, m: int, ell: int):
    """h^0 total via the applicable chi regime, or None if neither applies."""
    if m < ell:
        return chi_zeta(n, m, ell, "chi_m_lt_l")
    if 0 <= ell <= m <= ell + n:
        return chi_zeta(n, m, ell, "chi_m_ge_l")
    return None


def zeta_closed(n: int, m: int, ell: int) -> int:
    """h^n total via the applicable zeta regime (always defined)."""
    which = "zeta_le" if ell + n + 1 <= 0 else "zeta_gt"
    return chi_zeta(n, m, ell, which)


def hn_variant_value(n: int, m: int) -> int:
    """A published variant expression for h^n(O) known to be inconsistent.

    Evaluates (1/n!) d^n/dx^n [(1 + (x+2)^m)/(x+1)] at 0.  At (n,m) = (1,2)
    this gives -1 while the correct value of h^1(O) is +1 (the sign of the
    subtracted constant differs); it is kept only so tests can flag the
    discrepancy.  Do not use for computation.
    """
    expr = (1 + (_X + 2) ** m) / (_X + 1) / sympy.factorial(n)
    return _eval_nth_derivative(expr, n)
