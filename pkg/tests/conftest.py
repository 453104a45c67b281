"""Shared fixtures.  Heavy pipeline runs are computed once per session."""

import pytest

from theta_loci.groebner import saturate
from theta_loci.multilinear import pfaffian_ideal, random_section, w39_matrix
from theta_loci.pipeline import run_case

_W39_CACHE = {}
_W39_IDEALS = {}


@pytest.fixture(scope="session")
def w39_report():
    """One w39 report per seed, shared across test modules."""

    def get(seed, prime=101):
        key = (prime, seed)
        if key not in _W39_CACHE:
            _W39_CACHE[key] = run_case("w39", prime=prime, seed=seed)
        return _W39_CACHE[key]

    return get


@pytest.fixture(scope="session")
def w39_ideals():
    """(ring, matrix, I, J) for one seed, for geometric cross-checks."""

    def get(seed=1, prime=101):
        key = (prime, seed)
        if key not in _W39_IDEALS:
            section = random_section("w39", seed, prime)
            M = w39_matrix(section)
            z9 = M.ring.variable(8)
            I = saturate(pfaffian_ideal(M, 8), z9)
            J = saturate(pfaffian_ideal(M, 6), z9)
            _W39_IDEALS[key] = (M.ring, M, I, J)
        return _W39_IDEALS[key]

    return get
