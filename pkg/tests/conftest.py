import random
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

from ternary_roberts.parsing import parse_polynomial
from ternary_roberts.ring import Polynomial, RingConfig, avar, monomial, uvar, xvar

DATA = Path(__file__).parent / "data"

SEED_22 = "a[0,0]*a[2,0]-a[1,0]^2"


@pytest.fixture(scope="session")
def ring3():
    return RingConfig(3)


@pytest.fixture(scope="session")
def ring2():
    return RingConfig(2)


@pytest.fixture(scope="session")
def seed22(ring3):
    return parse_polynomial(SEED_22, ring3)


@pytest.fixture(scope="session")
def golden_mixed(ring3):
    return parse_polynomial((DATA / "mixed_n3_class22.txt").read_text(), ring3)


def _vars(n, with_xu):
    vs = RingConfig(n).a_variables
    if with_xu:
        vs = vs + [xvar(k) for k in (1, 2, 3)] + [uvar(k) for k in (1, 2, 3)]
    return vs


def random_polynomial(rng: random.Random, n: int = 3, max_a_degree: int = 2,
                      with_xu: bool = True, max_terms: int = 5) -> Polynomial:
    """Random polynomial with A-degree <= max_a_degree and X/U degree <= 1 each."""
    a_vars = RingConfig(n).a_variables
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        pairs = [(rng.choice(a_vars), 1) for _ in range(rng.randint(0, max_a_degree))]
        if with_xu and rng.random() < 0.6:
            pairs.append((xvar(rng.randint(1, 3)), 1))
        if with_xu and rng.random() < 0.6:
            pairs.append((uvar(rng.randint(1, 3)), 1))
        terms[monomial(*pairs)] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return Polynomial(terms)


@st.composite
def polynomials(draw, n=3, max_a_degree=2, with_xu=True, max_terms=4):
    vs = _vars(n, with_xu)
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        k = draw(st.integers(0, max_a_degree + 1))
        pairs = [(draw(st.sampled_from(vs)), 1) for _ in range(k)]
        coeff = Fraction(draw(st.integers(-6, 6)), draw(st.integers(1, 4)))
        terms[monomial(*pairs)] = coeff
    return Polynomial(terms)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance
    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(test_acceptance.RESULTS):
        ok, title = test_acceptance.RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}")
