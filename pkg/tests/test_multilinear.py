"""Pfaffians, Pfaffian ideals, section-to-matrix builders, PRNG determinism."""

import random

import pytest

from theta_loci.errors import UsageError
from theta_loci.multilinear import (AlternatingVector, SkewMatrix, SplitMix64,
                                    c5w25_matrix, pfaffian, pfaffian_ideal,
                                    random_section, section_from_json,
                                    section_to_json, w39_matrix, w39_ring)
from theta_loci.poly import PolynomialRing


def test_skew_construction_validated():
    ring = PolynomialRing(prime=101, variables=("a",))
    a = ring.gens()[0]
    zero = ring.zero()
    SkewMatrix(ring, [[zero, a], [-a, zero]])
    with pytest.raises(UsageError):
        SkewMatrix(ring, [[zero, a], [a, zero]])
    with pytest.raises(UsageError):
        SkewMatrix(ring, [[a, a], [-a, zero]])


def test_pfaffian_convention_anchor():
    ring = PolynomialRing(prime=101, variables=("a",))
    a = ring.gens()[0]
    zero = ring.zero()
    m = SkewMatrix(ring, [[zero, a], [-a, zero]])
    assert pfaffian(m) == a


def test_pfaffian_generic_4x4():
    names = [f"x_{i}{j}" for i in range(1, 5) for j in range(i + 1, 5)]
    ring = PolynomialRing(prime=101, variables=names)
    x = dict(zip([(i, j) for i in range(1, 5) for j in range(i + 1, 5)],
                 ring.gens()))
    m = SkewMatrix.from_upper(ring, 4, {(i - 1, j - 1): x[(i, j)]
                                        for (i, j) in x})
    # brute-force sum over the 3 perfect matchings of 4 points
    expect = x[(1, 2)] * x[(3, 4)] - x[(1, 3)] * x[(2, 4)] + x[(1, 4)] * x[(2, 3)]
    assert pfaffian(m) == expect


def test_odd_size_pfaffian_is_zero():
    ring = PolynomialRing(prime=101, variables=("a", "b", "c"))
    a, b, c = ring.gens()
    zero = ring.zero()
    m = SkewMatrix(ring, [[zero, a, b], [-a, zero, c], [-b, -c, zero]])
    assert pfaffian(m).is_zero()


def _random_skew(ring, n, rng):
    upper = {}
    for i in range(n):
        for j in range(i + 1, n):
            d = {}
            for _ in range(2):
                exps = [0] * ring.nvars
                exps[rng.randrange(ring.nvars)] = 1
                d[tuple(exps)] = rng.randrange(101)
            upper[(i, j)] = ring.from_exponent_dict(d)
    return SkewMatrix.from_upper(ring, n, upper)


def test_pfaffian_squared_is_determinant():
    rng = random.Random(42)
    ring = PolynomialRing(prime=101, nvars=3)
    for n in (4, 6):
        for _ in range(3):
            m = _random_skew(ring, n, rng)
            assert pfaffian(m) * pfaffian(m) == m.determinant()


def test_pfaffian_permutation_sign():
    rng = random.Random(43)
    ring = PolynomialRing(prime=101, nvars=3)
    m = _random_skew(ring, 4, rng)
    base = pfaffian(m)
    for _ in range(10):
        sigma = list(range(4))
        rng.shuffle(sigma)
        inv = sum(1 for i in range(4) for j in range(i + 1, 4)
                  if sigma[i] > sigma[j])
        got = pfaffian(m.permuted(sigma))
        assert got == (base if inv % 2 == 0 else -base)


def test_pfaffian_ideal_counts():
    names = [f"x_{i}{j}" for i in range(1, 6) for j in range(i + 1, 6)]
    ring = PolynomialRing(prime=101, variables=names)
    gens = iter(ring.gens())
    upper = {(i, j): next(gens) for i in range(5) for j in range(i + 1, 5)}
    m = SkewMatrix.from_upper(ring, 5, upper)
    ideal = pfaffian_ideal(m, 4)
    assert len(ideal.generators) == 5
    assert all(g.degree == 2 for g in ideal.generators)
    with pytest.raises(UsageError):
        pfaffian_ideal(m, 3)
    m4 = m.submatrix((0, 1, 2, 3))
    principal = pfaffian_ideal(m4, 4)
    assert principal.generators == (pfaffian(m4),)


def test_pfaffian_ideal_cubic_count_on_8x8():
    v = random_section("w39", 99, 101)
    m = w39_matrix(v)
    ideal = pfaffian_ideal(m, 6)
    assert len(ideal.generators) == 28
    assert all(g.degree == 3 for g in ideal.generators)


def test_w39_matrix_single_triples():
    ring = w39_ring(101)
    z = ring.gens()
    v = AlternatingVector(9, 3, 101, {(5, 6, 7): 1})
    m = w39_matrix(v)
    assert m.entries[4][5] == -z[6]
    assert m.entries[4][6] == z[5]
    assert m.entries[5][6] == -z[4]
    nonzero = [(i, j) for i in range(8) for j in range(8)
               if not m.entries[i][j].is_zero()]
    assert sorted(nonzero) == [(4, 5), (4, 6), (5, 4), (5, 6), (6, 4), (6, 5)]

    v = AlternatingVector(9, 3, 101, {(1, 2, 9): 1})
    m = w39_matrix(v)
    assert m.entries[0][1] == -z[8]
    assert m.entries[1][0] == z[8]
    nonzero = [(i, j) for i in range(8) for j in range(8)
               if not m.entries[i][j].is_zero()]
    assert sorted(nonzero) == [(0, 1), (1, 0)]

    zero_v = AlternatingVector(9, 3, 101, {})
    assert all(e.is_zero() for row in w39_matrix(zero_v).entries for e in row)


def test_w39_matrix_matches_literal_transcription():
    """Chart 9 agrees with the literal per-triple matrix builder."""
    ring = w39_ring(101)
    z = ring.gens()

    def basic_mat(s):
        upper = {}
        i, j, k = s
        upper[(i - 1, j - 1)] = -z[k - 1]
        if 9 not in s:
            upper[(i - 1, k - 1)] = z[j - 1]
            upper[(j - 1, k - 1)] = -z[i - 1]
        return SkewMatrix.from_upper(ring, 8, upper)

    v = random_section("w39", 17, 101)
    total = SkewMatrix.from_upper(ring, 8, {})
    for triple, c in sorted(v.coefficients.items()):
        contrib = basic_mat(triple)
        scaled = SkewMatrix(ring, [[e.scale(c) for e in row]
                                   for row in contrib.entries])
        total = total + scaled
    assert w39_matrix(v).entries == total.entries


def test_w39_linearity():
    u = random_section("w39", 1, 101)
    v = random_section("w39", 2, 101)
    s = u + v
    ring = w39_ring(101)
    left = w39_matrix(s, ring=ring)
    mu, mv = w39_matrix(u, ring=ring), w39_matrix(v, ring=ring)
    assert left.entries == (mu + mv).entries


def test_c5w25_matrix_single_term():
    from theta_loci.multilinear import TensorSection

    section = TensorSection.from_dict(101, {(1, 1, 2): 1})
    m = c5w25_matrix(section)
    z1 = m.ring.gens()[0]
    assert m.entries[0][1] == z1
    assert m.entries[1][0] == -z1
    zero_section = TensorSection.from_dict(101, {})
    assert all(e.is_zero() for row in c5w25_matrix(zero_section).entries
               for e in row)


def test_c5w25_pentagon_matrix_reproduced():
    """The pipeline's pentagon matrix comes from an explicit section."""
    from theta_loci.multilinear import TensorSection
    from theta_loci.pipeline import _gallery_matrices

    ring = PolynomialRing(prime=101, nvars=5)
    # pentagon matrix entries: (1,2)=z1, (1,3)=z2, (2,4)=z3, (3,5)=z4, (4,5)=z5
    section = TensorSection.from_dict(101, {
        (1, 1, 2): 1, (2, 1, 3): 1, (3, 2, 4): 1, (4, 3, 5): 1, (5, 4, 5): 1})
    assert c5w25_matrix(section, ring).entries == \
        _gallery_matrices(ring)["pentagon"].entries


def test_random_section_counts_and_determinism():
    w = random_section("w39", 5, 101)
    assert len(w.coefficients) <= 84
    rng = SplitMix64(5)
    draws = [rng.next64() % 101 for _ in range(84)]
    from itertools import combinations
    expected = {t: d for t, d in zip(combinations(range(1, 10), 3), draws) if d}
    assert w.coefficients == expected

    c = random_section("c3c3c3", 5, 101)
    assert all(t[0] in (1, 2, 3) and t[1] in (4, 5, 6) and t[2] in (7, 8, 9)
               for t in c.coefficients)
    assert len(c.coefficients) <= 27

    assert random_section("w39", 5, 101) == random_section("w39", 5, 101)
    t1 = random_section("c5w25", 5, 101)
    t2 = random_section("c5w25", 5, 101)
    assert t1 == t2
    with pytest.raises(UsageError):
        random_section("nope", 1, 101)


def test_splitmix64_reference_values():
    # published reference stream for seed 1234567
    rng = SplitMix64(1234567)
    assert [rng.next64() for _ in range(3)] == [
        6457827717110365317, 3203168211198807973, 9817491932198370423]


def test_section_json_roundtrip():
    for case in ("w39", "c3c3c3", "c5w25"):
        section = random_section(case, 77, 101)
        text = section_to_json(section, case)
        again = section_from_json(text)
        assert again == section or again.terms == section.terms


def test_section_json_errors():
    from theta_loci.errors import InputError

    with pytest.raises(InputError, match="prime"):
        section_from_json('{"case": "w39", "terms": []}')
    with pytest.raises(InputError, match="case"):
        section_from_json('{"prime": 101, "case": "zzz", "terms": []}')
    with pytest.raises(InputError, match="terms"):
        section_from_json('{"prime": 101, "case": "w39", "terms": [{"coeff": 1}]}')
