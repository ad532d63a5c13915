"""K-level bookkeeping for the Bondal spectral sequence on Q3.

E_2^{p,q} = Tor_{-p}^A(Ext^q(G, F), G) => F in degree 0.  Filtering Ext^q(G, F)
by its graded pieces Gr^i = S_i^{m_i} and using

    S_0 (x) G = O,  S_1 (x) G = S(-1)[1],  S_2 (x) G = T4[2],  S_3 (x) G = O(-1)[3]

places m_i copies of the i-th sheaf at (p, q) = (-i, q).  Differentials are not
modelled; only the signed sum, which they preserve, is used.
"""

from __future__ import annotations

from .cohom import ExtGDims
from .kclass import KClass3, Line, Spinor, TangentP4, ZERO3, k_equal

SIMPLE_SHEAVES = {
    0: KClass3.of(Line(0)),
    1: KClass3.of(Spinor(-1)),
    2: KClass3.of(TangentP4()),
    3: KClass3.of(Line(-1)),
}

E2Page = dict  # (p, q) -> KClass3, zero entries omitted


def e2_page(dims: ExtGDims) -> E2Page:
    page = {}
    for q in range(4):
        for i in range(4):
            m = dims[q, i]
            if m:
                page[(-i, q)] = m * SIMPLE_SHEAVES[i]
    return page


def abutment_sum(page: E2Page) -> KClass3:
    total = ZERO3
    for (p, q), x in sorted(page.items()):
        total = total + (1 if (p + q) % 2 == 0 else -1) * x
    return total


def abutment_check(page: E2Page, target: KClass3) -> bool:
    """Whether the signed sum of the page equals target in K(Q3)."""
    return k_equal(abutment_sum(page), target)


def format_page(page: E2Page) -> str:
    if not page:
        return "(empty page)"
    lines = []
    for (p, q) in sorted(page, key=lambda pq: (-pq[1], pq[0])):
        lines.append(f"E2^{{{p},{q}}} = {page[(p, q)]}")
    return "\n".join(lines)
