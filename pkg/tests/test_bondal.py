import pytest

from q3nef.bondal import SIMPLE_SHEAVES, abutment_check, abutment_sum, e2_page, format_page
from q3nef.cohom import ExtGDims
from q3nef.expr import parse3
from q3nef.kclass import KClass3, k_equal


def dims(**kw):
    return ExtGDims.from_sparse({(int(k[1]), int(k[3])): m for k, m in kw.items()})


def test_simple_sheaves():
    assert [str(SIMPLE_SHEAVES[i]) for i in range(4)] == ["O", "S(-1)", "T4", "O(-1)"]


@pytest.mark.parametrize("r", [1, 2, 4])
def test_case8_page(r):
    page = e2_page(dims(q0i0=r + 1, q2i2=1, q2i3=5))
    assert set(page) == {(0, 0), (-2, 2), (-3, 2)}
    assert abutment_check(page, parse3(f"{r + 1}*O - O(-2)"))
    assert not abutment_check(page, parse3(f"{r + 1}*O - O(-1)"))


@pytest.mark.parametrize("r", [3, 5])
def test_case6_page(r):
    page = e2_page(dims(q0i0=r + 3, q0i1=1, q2i3=1))
    assert abutment_check(page, parse3(f"{r + 3}*O - S(-1) - O(-1)"))


@pytest.mark.parametrize("r", [3, 4])
def test_case2_page(r):
    # F = E(-1) with E = O(1)^2 + O^(r-2)
    page = e2_page(dims(q0i0=2, q3i3=r - 2))
    assert page[(-3, 3)] == (r - 2) * SIMPLE_SHEAVES[3]
    assert abutment_check(page, parse3(f"2*O + {r - 2}*O(-1)"))


def test_empty_page():
    page = e2_page(ExtGDims.from_sparse({}))
    assert page == {} and abutment_sum(page) == KClass3()
    assert format_page(page) == "(empty page)"


def test_signs():
    # each simple sheaf alone in degree (q, i) contributes (-1)^(q - i)
    for q in range(4):
        for i in range(4):
            total = abutment_sum(e2_page(dims(**{f"q{q}i{i}": 1})))
            assert k_equal(total, (-1) ** (q + i) * SIMPLE_SHEAVES[i])


def test_format():
    text = format_page(e2_page(dims(q0i0=2, q2i3=1)))
    assert text.splitlines() == ["E2^{-3,2} = O(-1)", "E2^{0,0} = 2*O"]
