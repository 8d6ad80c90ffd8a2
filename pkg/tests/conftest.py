import random

import pytest

from z22osc.algebra import Generator, Polynomial, normal_form
from z22osc.algebra.coefficients import Gaussian


@pytest.fixture
def rng():
    return random.Random(1234)


def random_poly(rng, max_len=3, n_terms=3, homogeneous=True):
    """Small random polynomial with Gaussian-integer coefficients."""
    gens = list(Generator)
    out = Polynomial.zero()
    target = None
    for _ in range(rng.randint(1, n_terms)):
        w = tuple(rng.choice(gens) for _ in range(rng.randint(0, max_len)))
        if homogeneous:
            from z22osc.algebra import word_degree

            d = word_degree(w)
            if target is None:
                target = d
            elif d is not target:
                continue
        c = Gaussian(rng.randint(-2, 2), rng.randint(-2, 2))
        out = out + normal_form(w, c)
    return out


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS, key=lambda l: int(l.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
