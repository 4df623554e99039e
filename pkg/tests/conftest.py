import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from symeigen.exact import GaussianRational, PolyMatrix  # noqa: E402

settings.register_profile(
    "default", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

small_int = st.integers(-4, 4)
rationals = st.builds(lambda p, q: GaussianRational(p) / q, st.integers(-9, 9), st.integers(1, 5))
scalars = st.builds(lambda a, b: a + b * GaussianRational(0, 1), rationals, rationals)


@st.composite
def poly_matrices(draw, max_m=3, max_n=3, max_grade=2, symmetric=False, gaussian=False, m=None, n=None):
    m = draw(st.integers(1, max_m)) if m is None else m
    n = (m if symmetric else draw(st.integers(1, max_n))) if n is None else n
    grade = draw(st.integers(0, max_grade))
    elem = scalars if gaussian else small_int.map(GaussianRational)
    mats = []
    for _ in range(grade + 1):
        A = [[draw(elem) for _ in range(n)] for _ in range(m)]
        if symmetric:
            A = [[A[min(i, j)][max(i, j)] for j in range(n)] for i in range(m)]
        mats.append(A)
    return PolyMatrix(mats, m, n, grade)


@st.composite
def low_rank_products(draw, max_m=3, max_n=4, max_grade=2):
    """``A(x) B(x)`` with an inner dimension below both sides, so the rank drops."""
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(0, max(0, min(m, n) - 1)))
    if k == 0:
        return PolyMatrix.zeros(m, n, draw(st.integers(0, max_grade)))
    ga = draw(st.integers(0, 1))
    gb = draw(st.integers(0, max(0, max_grade - ga)))
    A = draw(poly_matrices(m=m, n=k, max_grade=ga))
    B = draw(poly_matrices(m=k, n=n, max_grade=gb))
    return A @ B


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.write_sep("=", "acceptance criteria")
        for k in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[k])
