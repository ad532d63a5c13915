"""Acceptance criteria, one check each; every line of the summary is PASS or FAIL.

Run ``python tests/test_acceptance.py`` for the summary alone, or pytest for the
same checks as tests (the summary is also printed at the end of a pytest run).
"""

import io
import json
import random
from fractions import Fraction

import pytest

from q3nef.bondal import abutment_check, e2_page
from q3nef.chow import ONE, ChowClass3, inverse
from q3nef.cli import run
from q3nef.classify import bondal_record, catalog_q3, get_case, restriction_map, wedge_span_check
from q3nef.cohom import CohTable, les_chase, table_line_q3, table_spinor_q3
from q3nef.kclass import (
    CotangentP4, KClass3, Line, Skyscraper, Spinor, TangentP4, TorsionH, TorsionL, O, S, ch,
    chern_of, chern_polynomial, chi_q2, dual, k_equal, kclass2_equal, restrict_to_q2, twist,
)
from q3nef.rr import (
    chi_c1_two, chi_oracle, chi_q3_closed, chi_spinor_c1_two, chi_spinor_closed,
    chi_spinor_oracle, nef_c3_bound_basic, nef_c3_bound_section,
)

GOLDEN = {"1": (0, 0), "2": (2, 0), "3": (3, 1), "4": (4, 4), "5": (4, 2),
          "6": (5, 5), "7": (6, 8), "8": (8, 16), "9": (4, 0)}

RESULTS: dict[int, tuple[bool, str]] = {}


def _ranks(spec):
    return [(spec.min_rank(a) + k, a) for a in spec.a_values for k in range(3)]


def _random_class(rng, torsion=True):
    atoms = [lambda: Line(rng.randint(-4, 4)), lambda: Spinor(rng.randint(-4, 4)),
             TangentP4, CotangentP4]
    if torsion:
        atoms += [TorsionH, TorsionL, Skyscraper]
    x = KClass3()
    for _ in range(rng.randint(1, 5)):
        x = x + KClass3.of(rng.choice(atoms)(), rng.randint(-3, 3))
    return x


def criterion_1():
    out, err = io.StringIO(), io.StringIO()
    code = run(["verify-cases", "--theorem", "q3", "--count", "3", "--all-a", "--format", "json"], out, err)
    reports = json.loads(out.getvalue())
    seen = set()
    ok = code == 0 and len(reports) == 30
    for rep in reports:
        label = rep["case_id"][3:-1]
        seen.add((label, rep["params"]["r"], rep["params"]["a"]))
        c = rep["computed"]
        ok &= rep["pass"] and c["c1"] == "2h" and (c["c2h"], c["c3"]) == GOLDEN[label]
    expected = {(s.label, r, a) for s in catalog_q3() for r, a in _ranks(s)}
    ok &= seen == expected
    return ok, f"{len(reports)} reports over r_min..r_min+2, exit {code}"


def criterion_2():
    rng = random.Random(20261016)
    mismatches = 0
    for _ in range(1000):
        x = _random_class(rng)
        d = chern_of(x)
        for t in range(-4, 5):
            mismatches += chi_q3_closed(d, t) != chi_oracle(x, t)
    for spec in catalog_q3():
        a = spec.a_values[0]
        e = spec.kclass(spec.min_rank(a), a)
        for t in (-2, -1, 0, 1):
            mismatches += chi_spinor_closed(chern_of(e), t) != chi_spinor_oracle(e, t)
    return mismatches == 0, f"1000 classes x 9 twists + 9 cases x 4 twists, {mismatches} mismatches"


def criterion_3():
    ok = all(chi_c1_two(r, 2, c3, -1) == 2 + Fraction(c3, 2) for r in (2, 3) for c3 in range(0, 9))
    ok &= chi_c1_two(1, 8, 16, -2) == 5
    ok &= chi_spinor_c1_two(2, 4, 4, -1) == 0 and chi_spinor_c1_two(3, 5, 5, -1) == -1
    ok &= table_spinor_q3(1)[0] == 16 and table_spinor_q3(0)[0] == 4
    return ok, "chi(E(-1)) = 2 + c3/2 at c2h = 2; chi(E(-2)) = 5 at (8,16); spinor 0 and -1; h0 S(1) = 16, h0 S = 4"


def criterion_4():
    equality = set()
    ok = True
    for spec in catalog_q3():
        for r, a in _ranks(spec):
            d = chern_of(spec.kclass(r, a))
            bound = nef_c3_bound_basic(d)
            ok &= d.c3 >= max(0, bound) and bound == 4 * d.c2h - 16
            if d.c3 == bound:
                equality.add(spec.label)
    case4 = chern_of(get_case("q3", "4").kclass(2))
    section = nef_c3_bound_section(case4, chern_of(O(1)))
    ok &= section == 4
    ok &= equality == {"7", "8"}
    return ok, f"equality in c3 >= 4c2h - 16 for cases {sorted(equality)} (stated: ['7', '8']); section bound {section}"


def criterion_5():
    ok = True
    for case in ("2", "6", "8"):
        rec, spec = bondal_record(case), get_case("q3", case)
        for r, _ in _ranks(spec):
            e = spec.kclass(r)
            page = e2_page(rec.dims(r, None))
            ok &= abutment_check(page, rec.target(e, r, None))
    r = 3
    ok &= abutment_check(e2_page(bondal_record("8").dims(r, None)), O(0, r + 1) - O(-2))
    ok &= abutment_check(e2_page(bondal_record("6").dims(r, None)), O(0, r + 3) - S(-1) - O(-1))
    ok &= abutment_check(e2_page(bondal_record("2").dims(r, None)), twist(O(1, 2) + O(0, r - 2), -1))
    return ok, "cases (2), (6), (8) E2 pages abut to their resolutions at three ranks"


def criterion_6():
    rmap = restriction_map()
    ok = True
    for spec in catalog_q3():
        for r, a in _ranks(spec):
            e = spec.kclass(r, a)
            y = restrict_to_q2(e)
            targets = rmap[spec.label]["q2"]
            ok &= len(targets) == (2 if spec.label == "9" else 1)
            ok &= all(kclass2_equal(y, get_case("q2", t).kclass(r)) for t in targets)
            ok &= chi_oracle(e) - chi_oracle(e, -1) == chi_q2(y)
    return ok, "restrictions match the stated Q2 cases; chi(E) - chi(E(-1)) = chi(E|Q2)"


def criterion_7():
    got = wedge_span_check()
    return got == (6, 5), f"wedge_span_check = {got}"


def criterion_8():
    rng = random.Random(7)
    ok = True
    for _ in range(150):
        x, y = _random_class(rng, False), _random_class(rng, False)
        s, t = rng.randint(-4, 4), rng.randint(-4, 4)
        ok &= chern_polynomial(x + y) == chern_polynomial(x) * chern_polynomial(y)
        c, cd = chern_polynomial(x), chern_polynomial(dual(x))
        ok &= all(cd.part(i) == (-1) ** i * c.part(i) for i in range(4))
        ok &= k_equal(twist(twist(x, s), t), twist(x, s + t))
        ok &= c * inverse(c) == ONE
        ok &= chi_oracle(x) == -chi_oracle(twist(dual(x), -3))
    ok &= ch(S(-1)) + ch(S()) == 4 * ch(O())
    for t in range(-6, 4):
        ok &= table_line_q3(t).chi() == chi_oracle(O(t)) and table_spinor_q3(t).chi() == chi_oracle(S(t))
    for r in (2, 3, 4):
        seq = [CohTable.unknown(), CohTable.zero(), CohTable([0, 0, r - 2])]
        out = les_chase(seq)
        ok &= les_chase(out) == out
        ok &= all(out[0][q] == out[2][q - 1] for q in range(1, 4))
    return ok, "Whitney, dual signs, twist action, inverse, Serre, spinor sequence, tables, les_chase"


CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 9)}


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    ok, detail = CRITERIA[n]()
    RESULTS[n] = (ok, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


if __name__ == "__main__":
    for n, fn in CRITERIA.items():
        ok, detail = fn()
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
