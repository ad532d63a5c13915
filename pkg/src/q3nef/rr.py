"""Euler characteristics on Q3: closed cubic formulas and a ch.td oracle.

The closed forms take Chern data only.  The oracle integrates ch(x(t)) td(Q3)
with the Todd class computed from c(T_Q3) = (1+h)^5 / (1+2h).  Neither path
uses the other.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .chow import A, B, ONE, ONE2, H, ChowClass2, ChowClass3, deg2, deg3, exp, inverse, line3, pair3
from .kclass import (
    ChernData3, KClass2, KClass3, NonIntegralError, ch, ch2, ch_spinor_dual_tensor, chi_q2,
    dual,
)


class ConsistencyError(AssertionError):
    """Two independent computations of the same number disagree."""


def _integral(value, what: str) -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise NonIntegralError(f"{what} is not an integer: {value}")
    return int(value)


# ---------------------------------------------------------------- Todd class

def chern_tangent_q3() -> ChowClass3:
    # 0 -> T -> T_P4|Q3 -> O(2) -> 0
    return (ONE + H) ** 5 * inverse(ONE + 2 * H)


def todd(c: ChowClass3) -> ChowClass3:
    """Todd class of a threefold from its total Chern class."""
    c1, c2 = c.part(1), c.part(2)
    return ONE + c1 / 2 + (c1 * c1 + c2) / 12 + c1 * c2 / 24


TODD_Q3 = todd(chern_tangent_q3())


@lru_cache(maxsize=None)
def _twisted_todd(t: int) -> ChowClass3:
    return exp(line3(t)) * TODD_Q3


def chi_from_ch(chx: ChowClass3, t: int = 0) -> int:
    return _integral(pair3(chx, _twisted_todd(t)), "chi")


def chi_oracle(x: KClass3, t: int = 0) -> int:
    """chi(x(t)) = deg(ch(x) e^{th} td(Q3))."""
    return chi_from_ch(ch(x), t)


def chi_spinor_oracle(x: KClass3, t: int = 0) -> int:
    """chi(S^v tensor x(t)) through the multiplicativity of ch."""
    return chi_from_ch(ch_spinor_dual_tensor(x), t)


def todd2(c: ChowClass2) -> ChowClass2:
    c1 = c.part(1)
    return ONE2 + c1 / 2 + (c1 * c1 + c.part(2)) / 12


TODD_Q2 = todd2((ONE2 + 2 * A) * (ONE2 + 2 * B))


def chi_q2_oracle(x: KClass2) -> int:
    """chi on P1 x P1 by integrating ch.td; chi_q2 is the Kunneth route."""
    return _integral(deg2(ch2(x) * TODD_Q2), "chi")


# ---------------------------------------------------------------- closed forms

def chi_q3_closed(d: ChernData3, t: int = 0) -> int:
    r = d.rank
    c1, c2 = d.c1, d.c2
    c1h2 = 2 * c1.a1
    q = pair3(c1 * c1 - 2 * c2, H)
    cubic = pair3(c1 * c1, c1) - 3 * pair3(c1, c2) + 3 * d.c3
    # 12 chi, so that only integers appear
    twelve = (
        4 * r * t ** 3
        + 6 * (c1h2 + 3 * r) * t ** 2
        + (18 * c1h2 + 6 * q + 26 * r) * t
        + 12 * r + 13 * c1h2 + 9 * q + 2 * cubic
    )
    return _integral(Fraction(twelve, 12), "chi")


def chi_q3_degree_form(d: ChernData3, t: int = 0) -> int:
    """Same polynomial written through c1 = d h."""
    r, k, c2h, c3 = d.rank, d.d, d.c2h, d.c3
    value = (
        Fraction(r, 6) * (2 * t + 3) * (t + 2) * (t + 1)
        + k * t * t + (k * k + 3 * k) * t - c2h * t
        + Fraction(k * (2 * k * k + 9 * k + 13), 6)
        + Fraction(c3 - (k + 3) * c2h, 2)
    )
    return _integral(value, "chi")


def chi_c1_two(r: int, c2h: int, c3: int, t: int = 0) -> Fraction:
    """chi(E(t)) for c1 = 2h; returned as a Fraction so callers can reason about parity."""
    return (
        Fraction(r, 6) * (2 * t + 3) * (t + 2) * (t + 1)
        + 2 * t * t + 10 * t + 13 - c2h * t + Fraction(c3 - 5 * c2h, 2)
    )


def chi_spinor_closed(d: ChernData3, t: int = 0) -> int:
    """chi(S^v tensor E(t)) from the Chern data of E."""
    r, k, c2h, c3 = d.rank, d.d, d.c2h, d.c3
    value = (
        Fraction(2 * r, 3) * t * (t + 1) * (t + 2)
        + 2 * k * t * t + 2 * k * (k + 2) * t
        + Fraction(2 * k * (k + 1) * (k + 2), 3)
        - (2 * t + k + 2) * c2h + c3
    )
    return _integral(value, "chi")


def chi_spinor_c1_two(r: int, c2h: int, c3: int, t: int = 0) -> Fraction:
    return Fraction(2 * r, 3) * t * (t + 1) * (t + 2) + 4 * (t + 2) ** 2 - 2 * (t + 2) * c2h + c3


# ---------------------------------------------------------------- duality, bounds

def serre_dual_chi(x: KClass3, t: int = 0) -> int:
    """-chi(x^v(-3-t)), checked against chi(x(t)); omega = O(-3)."""
    if x.has_torsion():
        raise ValueError("Serre duality check needs a class without torsion atoms")
    value = -chi_oracle(dual(x), -3 - t)
    direct = chi_oracle(x, t)
    if value != direct:
        raise ConsistencyError(f"Serre duality fails for {x} at t={t}: {value} != {direct}")
    return value


def nef_c3_bound_basic(d: ChernData3) -> int:
    """2 c1 c2 - c1^3; a nef bundle has c3 at least this."""
    return deg3(2 * d.c1 * d.c2 - d.c1 * d.c1 * d.c1)


def nef_c3_bound_section(d: ChernData3, line: ChernData3) -> int:
    """Lower bound for c3 when E(-D) has a section, D = c1(line)."""
    if line.rank != 1 or not line.c2.is_zero() or line.c3 != 0:
        raise ValueError("second argument must be the Chern data of a line bundle")
    return nef_c3_bound_basic(d) + deg3((d.c1 * d.c1 - d.c2) * line.c1)


def chi_polynomial(d: ChernData3) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Coefficients (t^0, t^1, t^2, t^3) of chi(E(t)), by interpolation at t = 0..3."""
    ys = [Fraction(chi_q3_closed(d, t)) for t in range(4)]
    # forward differences -> Newton form -> monomial
    d1 = [ys[i + 1] - ys[i] for i in range(3)]
    d2 = [d1[i + 1] - d1[i] for i in range(2)]
    d3 = d2[1] - d2[0]
    a3 = d3 / 6
    a2 = d2[0] / 2 - 3 * a3
    a1 = d1[0] - a2 - a3
    a0 = ys[0]
    return (a0, a1, a2, a3)
