"""Cohomology tables, Ext(G, E) dimension vectors and a long-exact-sequence chase."""

from __future__ import annotations

from dataclasses import dataclass
from math import inf
from typing import Iterable, Sequence

from .kclass import O, S
from .rr import chi_oracle

UNKNOWN = None


class ChaseError(ValueError):
    """The data given to les_chase is inconsistent with exactness."""

    def __init__(self, message: str, position: tuple[int, int] | None = None):
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class CohTable:
    """Dimensions h^0, h^1, ...; an entry is an int or UNKNOWN (None)."""

    entries: tuple

    def __init__(self, entries: Iterable):
        entries = tuple(entries)
        for e in entries:
            if e is not None and (not isinstance(e, int) or e < 0):
                raise ValueError(f"cohomology dimension must be a natural number, got {e!r}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def unknown(cls, length: int = 4) -> CohTable:
        return cls([UNKNOWN] * length)

    @classmethod
    def zero(cls, length: int = 4) -> CohTable:
        return cls([0] * length)

    def __getitem__(self, q: int):
        return self.entries[q] if q < len(self.entries) else 0

    def __len__(self):
        return len(self.entries)

    def is_known(self) -> bool:
        return all(e is not None for e in self.entries)

    def chi(self) -> int:
        if not self.is_known():
            raise ValueError("chi of a table with unknown entries")
        return sum((-1) ** q * e for q, e in enumerate(self.entries))

    def reversed(self) -> CohTable:
        return CohTable(self.entries[::-1])

    def __add__(self, other: CohTable) -> CohTable:
        n = max(len(self), len(other))
        vals = []
        for q in range(n):
            a, b = self[q], other[q]
            vals.append(None if a is None or b is None else a + b)
        return CohTable(vals)

    def __mul__(self, n: int) -> CohTable:
        return CohTable(None if e is None else n * e for e in self.entries)

    __rmul__ = __mul__

    def __str__(self):
        return "(" + ", ".join("?" if e is None else str(e) for e in self.entries) + ")"


def table_line_q3(t: int) -> CohTable:
    """h^q(Q3, O(t)): no intermediate cohomology; h^3 through Serre duality."""
    if t >= 0:
        return CohTable([chi_oracle(O(t)), 0, 0, 0])
    if t <= -3:
        return CohTable([0, 0, 0, chi_oracle(O(-3 - t))])
    return CohTable.zero()


def table_spinor_q3(t: int) -> CohTable:
    """h^q(Q3, S(t)).  S(t) is acyclic for t >= 0 and has no cohomology for -3 <= t <= -1."""
    if t >= 0:
        return CohTable([chi_oracle(S(t)), 0, 0, 0])
    if t <= -4:
        # S(t)^v (-3) = S(-4-t)
        return CohTable([0, 0, 0, chi_oracle(S(-4 - t))])
    return CohTable.zero()


def _p1(a: int) -> tuple[int, int]:
    return (a + 1, 0) if a >= 0 else (0, max(-a - 1, 0))


def table_line_q2(a: int, b: int) -> CohTable:
    """Kunneth on P1 x P1."""
    x, y = _p1(a), _p1(b)
    return CohTable([
        x[0] * y[0],
        x[0] * y[1] + x[1] * y[0],
        x[1] * y[1],
    ])


# ---------------------------------------------------------------- Ext(G, E)

@dataclass(frozen=True)
class ExtGDims:
    """rows[q][i] = dim Gr^i Ext^q(G, E) = dim Ext^q(G_i, E), G = O + S + O(1) + O(2)."""

    rows: tuple

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(m) for m in row) for row in rows)
        if len(rows) != 4 or any(len(row) != 4 for row in rows):
            raise ValueError("ExtGDims needs a 4x4 array")
        if any(m < 0 for row in rows for m in row):
            raise ValueError("dimensions must be non-negative")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_sparse(cls, entries: dict[tuple[int, int], int]) -> ExtGDims:
        """entries maps (q, i) to m_i of Ext^q."""
        rows = [[0] * 4 for _ in range(4)]
        for (q, i), m in entries.items():
            rows[q][i] = m
        return cls(rows)

    def __add__(self, other: ExtGDims) -> ExtGDims:
        return ExtGDims([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __getitem__(self, qi: tuple[int, int]) -> int:
        q, i = qi
        return self.rows[q][i]


def ext_g_dims(e: CohTable, sdual_e: CohTable, e_minus1: CohTable, e_minus2: CohTable) -> ExtGDims:
    """Assemble Ext^q(G, E) from the tables of E, S^v(x)E, E(-1), E(-2)."""
    tables = (e, sdual_e, e_minus1, e_minus2)
    for i, tab in enumerate(tables):
        if not tab.is_known():
            raise ValueError(f"table {i} has unknown entries: {tab}")
    return ExtGDims([[tab[q] for tab in tables] for q in range(4)])


# ---------------------------------------------------------------- chase

def les_chase(
    seq: Sequence[CohTable],
    zero_connecting: Iterable[int] = (),
) -> list[CohTable]:
    """Fill in what exactness forces in the long exact sequence of 0 -> A -> B -> C -> 0.

    ``zero_connecting`` lists the q with H^q(C) -> H^{q+1}(A) declared zero.
    The long exact sequence is a chain of spaces V_k with dim V_k = rho_{k-1} + rho_k
    (rho_k the rank of the k-th map); interval propagation along this chain is
    exact, so an entry is filled exactly when it has a single admissible value.
    """
    a, b, c = seq
    n = max(len(a), len(b), len(c))
    tables = (a, b, c)
    nv = 3 * n
    dims = []
    for k in range(nv):
        q, j = divmod(k, 3)
        e = tables[j][q]
        dims.append([0, inf] if e is None else [e, e])
    # rank of V_k -> V_{k+1}; the last map goes to 0
    ranks = [[0, inf] for _ in range(nv)]
    ranks[nv - 1] = [0, 0]
    for q in zero_connecting:
        if not 0 <= q < n - 1:
            raise ValueError(f"no connecting map at degree {q}")
        ranks[3 * q + 2] = [0, 0]

    def rank_at(k):
        return [0, 0] if k < 0 else ranks[k]

    def tighten(var, lo, hi, where):
        changed = False
        if lo > var[0]:
            var[0] = lo
            changed = True
        if hi < var[1]:
            var[1] = hi
            changed = True
        if var[0] > var[1]:
            q, j = divmod(where, 3)
            raise ChaseError(
                f"inconsistent dimensions at h^{q} of term {j} of the sequence",
                position=(j, q),
            )
        return changed

    changed = True
    while changed:
        changed = False
        for k in range(nv):
            d, x, y = dims[k], rank_at(k - 1), ranks[k]
            changed |= tighten(d, x[0] + y[0], x[1] + y[1], k)
            if k > 0:
                changed |= tighten(x, d[0] - y[1], d[1] - y[0], k)
            changed |= tighten(y, d[0] - x[1], d[1] - x[0], k)

    out = []
    for j, tab in enumerate(tables):
        vals = []
        for q in range(len(tab)):
            lo, hi = dims[3 * q + j]
            vals.append(int(lo) if lo == hi else None)
        out.append(CohTable(vals))
    return out
