from hypothesis import settings, strategies as st

from q3nef.chow import ChowClass2, ChowClass3
from q3nef.kclass import (
    CotangentP4, KClass2, KClass3, Line, Line2, Point2, Skyscraper, Spinor, TangentP4,
    TorsionH, TorsionL,
)

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")

coef = st.integers(-6, 6)
twists = st.integers(-4, 4)

chow3 = st.builds(ChowClass3, coef, coef, coef, coef)
chow2 = st.builds(ChowClass2, coef, coef, coef, coef)
unit3 = st.builds(lambda a, b, c: ChowClass3(1, a, b, c), coef, coef, coef)
unit2 = st.builds(lambda a, b, c: ChowClass2(1, a, b, c), coef, coef, coef)

bundle_atoms = st.one_of(
    st.builds(Line, twists),
    st.builds(Spinor, twists),
    st.just(TangentP4()),
    st.just(CotangentP4()),
)
any_atoms = st.one_of(bundle_atoms, st.sampled_from([TorsionH(), TorsionL(), Skyscraper()]))
line_atoms = st.builds(Line, twists)


def classes(atoms=bundle_atoms, max_size=4):
    return st.lists(st.tuples(atoms, st.integers(-3, 3)), min_size=1, max_size=max_size).map(
        lambda terms: sum((KClass3.of(a, n) for a, n in terms), KClass3())
    )


bundle_classes = classes()
any_classes = classes(any_atoms)
line_classes = classes(line_atoms)

q2_classes = st.lists(
    st.tuples(st.one_of(st.builds(Line2, twists, twists), st.just(Point2())), st.integers(-3, 3)),
    min_size=1, max_size=4,
).map(lambda terms: sum((KClass2.of(a, n) for a, n in terms), KClass2()))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            ok, detail = RESULTS[n]
            terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
