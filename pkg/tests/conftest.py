import itertools
import math

import pytest
from hypothesis import strategies as st

from rigidity import _fallback
from rigidity.ring import RingSpec, reduce


def naive_product(a, b):
    """Untruncated convolution of two term mappings (no reduction)."""
    out = {}
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return out


def naive_linear_power(coeffs, k):
    """Full multinomial expansion of (sum a_j x_j)^k as a raw mapping."""
    m = len(coeffs)
    out = {}
    for e in itertools.product(range(k + 1), repeat=m):
        if sum(e) != k:
            continue
        coeff = math.factorial(k)
        for ej, aj in zip(e, coeffs):
            coeff = coeff // math.factorial(ej) * aj**ej
        out[e] = coeff
    return out


def brute_force_automorphisms(spec, bound):
    """Every matrix of the box tested with the generic ring-arithmetic predicate."""
    from rigidity.morphism import LinearSubstitution, is_graded_automorphism

    m = spec.m
    found = []
    for flat in itertools.product(range(-bound, bound + 1), repeat=m * m):
        rows = tuple(tuple(flat[i * m:(i + 1) * m]) for i in range(m))
        if is_graded_automorphism(LinearSubstitution(rows, spec)):
            found.append(rows)
    return found


@st.composite
def specs(draw, max_m=3, max_n=3):
    m = draw(st.integers(1, max_m))
    return RingSpec(tuple(draw(st.lists(st.integers(1, max_n), min_size=m, max_size=m))))


@st.composite
def elements(draw, spec, max_terms=5, coeff=9):
    raw = draw(st.lists(
        st.tuples(
            st.tuples(*[st.integers(0, n) for n in spec.exponents]),
            st.integers(-coeff, coeff),
        ),
        max_size=max_terms,
    ))
    return reduce(raw, spec)


@pytest.fixture(scope="session", params=["python", "cython"])
def kernel(request):
    """Both kernel backends; the compiled one is skipped when not built."""
    if request.param == "python":
        return _fallback
    return pytest.importorskip("rigidity._kernels")


ACCEPTANCE_RESULTS = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion's outcome for the terminal summary."""
    def record(label):
        ACCEPTANCE_RESULTS[label] = None
        request.node.user_properties.append(("criterion", label))
        return label
    return record


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    for key, label in report.user_properties:
        if key == "criterion":
            ACCEPTANCE_RESULTS[label] = report.passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in ACCEPTANCE_RESULTS.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")
