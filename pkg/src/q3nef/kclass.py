"""Bundle expressions on Q3 and Q2 as formal sums of atoms.

Every sheaf in play is either an atom or is rewritten into atoms through an
exact sequence, so two classes can always be compared exactly.  Atoms on Q3:

    O(t)    line bundle                      c = 1 + t h
    S(t)    twisted spinor bundle, rank 2    c(S) = 1 + h + l
    T4      T_P4(-2)|Q3, rank 4              0 -> O(-2) -> O(-1)^5 -> T4 -> 0
    Om4     Omega_P4(1)|Q3, rank 4           0 -> Om4 -> O^5 -> O(1) -> 0
    O_H     structure sheaf of a hyperplane  c = 1 + h + 2l + 2pt
    O_L     structure sheaf of a line        c = 1 - l - pt
    k(p)    skyscraper                       c = 1 + 2pt

Atoms on Q2 are the line bundles O(a,b) and the skyscraper k(p).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction

from .chow import (
    ONE, ONE2, PT, PT2, H, L,
    ChowClass2, ChowClass3, deg2, deg3, exp, inverse, line2, line3,
)


class NonIntegralError(ValueError):
    """A Chern class or Euler characteristic came out non-integral."""


# ---------------------------------------------------------------- atoms (Q3)

@dataclass(frozen=True)
class Line:
    t: int = 0

    def __str__(self):
        return "O" if self.t == 0 else f"O({self.t})"


@dataclass(frozen=True)
class Spinor:
    t: int = 0

    def __str__(self):
        return "S" if self.t == 0 else f"S({self.t})"


@dataclass(frozen=True)
class TangentP4:
    def __str__(self):
        return "T4"


@dataclass(frozen=True)
class CotangentP4:
    def __str__(self):
        return "Om4"


@dataclass(frozen=True)
class TorsionH:
    def __str__(self):
        return "O_H"


@dataclass(frozen=True)
class TorsionL:
    def __str__(self):
        return "O_L"


@dataclass(frozen=True)
class Skyscraper:
    def __str__(self):
        return "k(p)"


TORSION_ATOMS = (TorsionH, TorsionL, Skyscraper)

# ---------------------------------------------------------------- atoms (Q2)

@dataclass(frozen=True)
class Line2:
    a: int = 0
    b: int = 0

    def __str__(self):
        return f"O({self.a},{self.b})"


@dataclass(frozen=True)
class Point2:
    def __str__(self):
        return "k(p)"


def _atom_key(atom):
    order = [Line, Spinor, TangentP4, CotangentP4, TorsionH, TorsionL, Skyscraper, Line2, Point2]
    i = order.index(type(atom))
    if isinstance(atom, Line):
        return (i, -atom.t, 0)
    if isinstance(atom, Spinor):
        return (i, -atom.t, 0)
    if isinstance(atom, Line2):
        return (i, -(atom.a + atom.b), -atom.a)
    return (i, 0, 0)


# ---------------------------------------------------------------- formal sums

class _KClass:
    """Immutable formal Z-combination of atoms."""

    __slots__ = ("_c",)
    _atom_types: tuple = ()

    def __init__(self, coeffs=None):
        c = Counter()
        for atom, n in dict(coeffs or {}).items():
            if not isinstance(atom, self._atom_types):
                raise TypeError(f"{atom!r} is not an atom of {type(self).__name__}")
            c[atom] += int(n)
        self._c = {a: n for a, n in c.items() if n != 0}

    @classmethod
    def of(cls, atom, n: int = 1):
        return cls({atom: n})

    def items(self):
        return sorted(self._c.items(), key=lambda kv: _atom_key(kv[0]))

    def atoms(self):
        return [a for a, _ in self.items()]

    def coeff(self, atom) -> int:
        return self._c.get(atom, 0)

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self._c.items())))

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        c = Counter(self._c)
        c.update(other._c)
        return type(self)(c)

    def __neg__(self):
        return type(self)({a: -n for a, n in self._c.items()})

    def __sub__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self + (-other)

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return type(self)({a: n * m for a, m in self._c.items()})

    __rmul__ = __mul__

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"

    def __str__(self):
        if not self._c:
            return "0"
        out = ""
        for atom, n in self.items():
            term = str(atom) if abs(n) == 1 else f"{abs(n)}*{atom}"
            if not out:
                out = ("-" if n < 0 else "") + term
            else:
                out += (" - " if n < 0 else " + ") + term
        return out


class KClass3(_KClass):
    __slots__ = ()
    _atom_types = (Line, Spinor, TangentP4, CotangentP4, TorsionH, TorsionL, Skyscraper)

    @property
    def rank(self) -> int:
        return sum(n * atom_rank(a) for a, n in self._c.items())

    def has_torsion(self) -> bool:
        return any(isinstance(a, TORSION_ATOMS) for a in self._c)


class KClass2(_KClass):
    __slots__ = ()
    _atom_types = (Line2, Point2)

    @property
    def rank(self) -> int:
        return sum(n for a, n in self._c.items() if isinstance(a, Line2))


def O(t: int = 0, n: int = 1) -> KClass3:
    return KClass3.of(Line(t), n)


def S(t: int = 0, n: int = 1) -> KClass3:
    return KClass3.of(Spinor(t), n)


def O2(a: int = 0, b: int = 0, n: int = 1) -> KClass2:
    return KClass2.of(Line2(a, b), n)


ZERO3 = KClass3()
ZERO2 = KClass2()

# ---------------------------------------------------------------- atom data

_RANKS = {TangentP4: 4, CotangentP4: 4, TorsionH: 0, TorsionL: 0, Skyscraper: 0}


def atom_rank(atom) -> int:
    if isinstance(atom, Line):
        return 1
    if isinstance(atom, Spinor):
        return 2
    return _RANKS[type(atom)]


def _chern_tangent_p4() -> ChowClass3:
    # 0 -> O(-2) -> O(-1)^5 -> T4 -> 0
    return (ONE - H) ** 5 * inverse(ONE - 2 * H)


@lru_cache(maxsize=None)
def atom_chern(atom) -> ChowClass3:
    """Total Chern class of an atom."""
    if isinstance(atom, Line):
        return ONE + atom.t * H
    if isinstance(atom, Spinor):
        t = atom.t
        return ONE + (1 + 2 * t) * H + (1 + 2 * t + 2 * t * t) * L
    if isinstance(atom, TangentP4):
        return _chern_tangent_p4()
    if isinstance(atom, CotangentP4):
        # 0 -> Om4 -> O^5 -> O(1) -> 0
        return inverse(ONE + H)
    if isinstance(atom, TorsionH):
        return ONE + H + 2 * L + 2 * PT
    if isinstance(atom, TorsionL):
        return ONE - L - PT
    if isinstance(atom, Skyscraper):
        return ONE + 2 * PT
    raise TypeError(atom)


def ch_from_chern(rank, c: ChowClass3 | ChowClass2):
    """Chern character from rank and total Chern class (Newton's identities)."""
    c1, c2, c3 = c.part(1), c.part(2), c.part(3)
    return type(c).scalar(rank) + c1 + (c1 * c1 - 2 * c2) / 2 + (c1 * c1 * c1 - 3 * c1 * c2 + 3 * c3) / 6


def chern_from_ch(ch):
    """Inverse of ch_from_chern; returns (rank, total Chern class)."""
    rank = ch.coeffs()[0]
    c1 = ch.part(1)
    c2 = (c1 * c1 - 2 * ch.part(2)) / 2
    c3 = 2 * ch.part(3) - c1 * c1 * c1 / 3 + c1 * c2
    one = ONE if isinstance(ch, ChowClass3) else ONE2
    return rank, one + c1 + c2 + c3


@lru_cache(maxsize=None)
def atom_ch(atom):
    if isinstance(atom, Line):
        return exp(line3(atom.t))
    if isinstance(atom, Spinor):
        return ch_from_chern(2, atom_chern(Spinor(0))) * exp(line3(atom.t))
    if isinstance(atom, TangentP4):
        return 5 * exp(line3(-1)) - exp(line3(-2))
    if isinstance(atom, CotangentP4):
        return 5 * ONE - exp(H)
    if isinstance(atom, Line2):
        return exp(line2(atom.a, atom.b))
    if isinstance(atom, Point2):
        return PT2
    return ch_from_chern(0, atom_chern(atom))


@lru_cache(maxsize=None)
def atom_chern2(atom) -> ChowClass2:
    if isinstance(atom, Line2):
        return ONE2 + line2(atom.a, atom.b)
    if isinstance(atom, Point2):
        return ONE2 - PT2
    raise TypeError(atom)


# ---------------------------------------------------------------- Chern data

@dataclass(frozen=True)
class ChernData3:
    rank: int
    c1: ChowClass3
    c2: ChowClass3
    c3: int

    @classmethod
    def make(cls, rank: int, d: int, c2h: int, c3: int) -> ChernData3:
        """Build from the scalar invariants c1 = d h, c2 = c2h * l, c3."""
        return cls(rank, d * H, c2h * L, c3)

    @property
    def d(self) -> int:
        return self.c1.a1

    @property
    def c2h(self) -> int:
        return deg3(self.c2 * H)

    def total(self) -> ChowClass3:
        return ONE + self.c1 + self.c2 + self.c3 * PT

    def ch(self) -> ChowClass3:
        return ch_from_chern(self.rank, self.total())

    def as_tuple(self) -> tuple:
        return (self.rank, self.d, self.c2h, self.c3)

    def __str__(self):
        return f"rank {self.rank}, c1={self.c1}, c2={self.c2} (c2h={self.c2h}), c3={self.c3}"


@dataclass(frozen=True)
class ChernData2:
    rank: int
    c1: tuple
    c2: int

    def as_tuple(self) -> tuple:
        return (self.rank, self.c1, self.c2)

    def __str__(self):
        return f"rank {self.rank}, c1={self.c1}, deg c2={self.c2}"


def chern_polynomial(x: KClass3) -> ChowClass3:
    """Whitney product of the atoms' Chern classes (formal inverses for negative terms)."""
    out = ONE
    for atom, n in x:
        out = out * _chern_power(atom, n)
    return out


@lru_cache(maxsize=None)
def _chern_power(atom, n: int) -> ChowClass3:
    return atom_chern(atom) ** n


def chern_of(x: KClass3) -> ChernData3:
    c = chern_polynomial(x)
    if not c.is_integral():
        raise NonIntegralError(f"non-integral Chern class {c} for {x}")
    return ChernData3(x.rank, c.part(1), c.part(2), deg3(c))


def ch(x: KClass3) -> ChowClass3:
    acc = [0, 0, 0, 0]
    for atom, n in x:
        for i, v in enumerate(atom_ch(atom).coeffs()):
            acc[i] += n * v
    return ChowClass3._make(acc)


def chern_polynomial2(x: KClass2) -> ChowClass2:
    out = ONE2
    for atom, n in x:
        out = out * atom_chern2(atom) ** n
    return out


def chern_of2(x: KClass2) -> ChernData2:
    c = chern_polynomial2(x)
    if not c.is_integral():
        raise NonIntegralError(f"non-integral Chern class {c} for {x}")
    return ChernData2(x.rank, c.bidegree, deg2(c))


def ch2(x: KClass2) -> ChowClass2:
    out = ChowClass2()
    for atom, n in x:
        out = out + n * atom_ch(atom)
    return out


def k_equal(x: KClass3, y: KClass3) -> bool:
    """Equality in K(Q3); ch is injective there since K(Q3) is torsion-free."""
    return ch(x) == ch(y)


# ---------------------------------------------------------------- rewriting

def _rewrite_tangent(t: int) -> KClass3:
    return O(t - 1, 5) - O(t - 2)


def _rewrite_cotangent(t: int) -> KClass3:
    return O(t, 5) - O(t + 1)


def _rewrite_oh(t: int) -> KClass3:
    # 0 -> O(-1) -> O -> O_H -> 0
    return O(t) - O(t - 1)


def _rewrite_ol(t: int) -> KClass3:
    # Koszul: 0 -> O(-1) -> S(-1) -> O -> O_L -> 0
    return O(t) - S(t - 1) + O(t - 1)


def twist(x: KClass3, t: int) -> KClass3:
    """x tensor O(t)."""
    if t == 0:
        return x
    out = ZERO3
    for atom, n in x:
        if isinstance(atom, Line):
            term = O(atom.t + t)
        elif isinstance(atom, Spinor):
            term = S(atom.t + t)
        elif isinstance(atom, TangentP4):
            term = _rewrite_tangent(t)
        elif isinstance(atom, CotangentP4):
            term = _rewrite_cotangent(t)
        elif isinstance(atom, TorsionH):
            term = _rewrite_oh(t)
        elif isinstance(atom, TorsionL):
            term = _rewrite_ol(t)
        else:
            term = KClass3.of(atom)
        out = out + n * term
    return out


def dual(x: KClass3) -> KClass3:
    out = ZERO3
    for atom, n in x:
        if isinstance(atom, TORSION_ATOMS):
            raise ValueError("dual undefined for torsion atom in this vocabulary")
        if isinstance(atom, Line):
            term = O(-atom.t)
        elif isinstance(atom, Spinor):
            # S^v = S(-1)
            term = S(-1 - atom.t)
        elif isinstance(atom, TangentP4):
            term = O(1, 5) - O(2)
        else:
            term = O(0, 5) - O(-1)
        out = out + n * term
    return out


def expand(x: KClass3) -> KClass3:
    """Rewrite T4 and Om4 through their defining sequences."""
    out = ZERO3
    for atom, n in x:
        if isinstance(atom, TangentP4):
            term = _rewrite_tangent(0)
        elif isinstance(atom, CotangentP4):
            term = _rewrite_cotangent(0)
        else:
            term = KClass3.of(atom)
        out = out + n * term
    return out


def spinor_dual_tensor(x: KClass3) -> KClass3:
    """S^v tensor x at K-level, for classes built from line bundles.

    S^v tensor S is outside the vocabulary; use ch_spinor_dual_tensor there.
    """
    out = ZERO3
    for atom, n in expand(x):
        if not isinstance(atom, Line):
            raise ValueError(f"S^v tensor {atom} is not representable in the atom vocabulary")
        out = out + n * S(atom.t - 1)
    return out


def ch_spinor_dual_tensor(x: KClass3) -> ChowClass3:
    return atom_ch(Spinor(-1)) * ch(x)


def tensor_spinor_dual(d: ChernData3) -> ChernData3:
    """Chern data of S^v tensor E from those of E, by closed formulas."""
    r, c1, c2, c3 = d.rank, d.c1, d.c2, d.c3
    c2s = L
    rank = 2 * r
    n1 = 2 * c1 - r * H
    n2 = 2 * c2 - (2 * r - 1) * c1 * H + c1 * c1 + comb2(r) * H * H + r * c2s
    n3 = (
        2 * c3
        - 2 * (r - 1) * deg3(c2 * H)
        + (r - 1) ** 2 * deg3(c1 * H * H)
        + 2 * (r - 1) * deg3(c1 * c2s)
        + 2 * deg3(c1 * c2)
        - (r - 1) * deg3(c1 * c1 * H)
        - Fraction(r * (r * r - 1), 3)
    )
    if Fraction(n3).denominator != 1:
        raise NonIntegralError(f"non-integral c3 {n3}")
    return ChernData3(rank, n1, n2, int(n3))


def comb2(r: int) -> int:
    return r * (r - 1) // 2


# ---------------------------------------------------------------- Q2

def restrict_to_q2(x: KClass3) -> KClass2:
    out = ZERO2
    for atom, n in expand(x):
        if isinstance(atom, TORSION_ATOMS):
            raise ValueError(f"restriction of torsion atom {atom} is not supported")
        if isinstance(atom, Line):
            term = O2(atom.t, atom.t)
        else:
            # S|Q2 = O(1,0) + O(0,1)
            term = O2(1 + atom.t, atom.t) + O2(atom.t, 1 + atom.t)
        out = out + n * term
    return out


def twist2(x: KClass2, a: int, b: int) -> KClass2:
    out = ZERO2
    for atom, n in x:
        if isinstance(atom, Line2):
            out = out + O2(atom.a + a, atom.b + b, n)
        else:
            out = out + KClass2.of(atom, n)
    return out


def chi_q2(x: KClass2) -> int:
    """Euler characteristic on P1 x P1 by Kunneth."""
    total = 0
    for atom, n in x:
        if isinstance(atom, Line2):
            total += n * (atom.a + 1) * (atom.b + 1)
        else:
            total += n
    return total


def invariants2(x: KClass2) -> tuple:
    d = chern_of2(x)
    return (d.rank, d.c1, d.c2, chi_q2(x))


def kclass2_equal(x: KClass2, y: KClass2) -> bool:
    return invariants2(x) == invariants2(y)
