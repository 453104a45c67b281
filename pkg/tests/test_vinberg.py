"""Triple pairings, support enumeration, orbit dimensions, the ten-orbit table."""

import random

import pytest

from theta_loci.errors import UsageError
from theta_loci.multilinear import AlternatingVector
from theta_loci.vinberg import (ORBITS, RANK_PRIME, SUPPORT_TYPES,
                                enumerate_supports, four_a1_completion_count,
                                orbit_dimension, orbit_table,
                                parse_bracket_terms, triple_pairing)


def test_triple_pairing_examples():
    assert triple_pairing((1, 2, 3), (4, 5, 6)) == -1
    assert triple_pairing((1, 2, 3), (1, 2, 3)) == 2
    assert triple_pairing((1, 2, 3), (1, 4, 5)) == 0


def test_pairing_s7_invariant():
    rng = random.Random(21)
    for _ in range(100):
        sigma = list(range(1, 8))
        rng.shuffle(sigma)
        s = tuple(sorted(rng.sample(range(1, 8), 3)))
        t = tuple(sorted(rng.sample(range(1, 8), 3)))
        ss = tuple(sorted(sigma[i - 1] for i in s))
        tt = tuple(sorted(sigma[i - 1] for i in t))
        assert triple_pairing(ss, tt) == triple_pairing(s, t)


def test_enumerate_counts():
    assert enumerate_supports("3A1")[0] == 2
    assert enumerate_supports("4A1")[0] == 1
    assert enumerate_supports("A2")[0] == 1
    assert enumerate_supports("A1")[0] == 1
    assert enumerate_supports("2A1")[0] == 1
    assert enumerate_supports("A2+A1")[0] == 1
    assert enumerate_supports("A2+2A1")[0] == 1
    assert enumerate_supports("A2+3A1")[0] == 1
    with pytest.raises(UsageError):
        enumerate_supports("E8")


def test_enumerate_representatives():
    _, reps = enumerate_supports("3A1")
    assert [r.triples() for r in reps] == [
        ((1, 2, 3), (1, 4, 5), (1, 6, 7)),
        ((1, 2, 3), (1, 4, 5), (2, 4, 6)),
    ]
    _, reps = enumerate_supports("A2")
    assert reps[0].triples() == ((1, 2, 3), (4, 5, 6))


def test_enumerate_closed_under_permutation():
    """Permuted representatives re-canonicalize onto a listed class."""
    from theta_loci.vinberg import (_TRIPLE_INDEX, _canonical_key)

    rng = random.Random(22)
    for typ in SUPPORT_TYPES:
        _, reps = enumerate_supports(typ)
        keys = set()
        for r in reps:
            keys.add(_canonical_key(
                tuple(_TRIPLE_INDEX[t] for t in r.a2_pair),
                tuple(_TRIPLE_INDEX[t] for t in r.a1_triples)))
        for r in reps:
            for _ in range(50):
                sigma = list(range(1, 8))
                rng.shuffle(sigma)
                a2 = tuple(sorted(
                    _TRIPLE_INDEX[tuple(sorted(sigma[i - 1] for i in t))]
                    for t in r.a2_pair))
                a1 = tuple(sorted(
                    _TRIPLE_INDEX[tuple(sorted(sigma[i - 1] for i in t))]
                    for t in r.a1_triples))
                assert _canonical_key(a2, a1) in keys


def test_gram_condition_of_representatives():
    """Every representative realizes the simple-root pairing matrix."""
    for typ in SUPPORT_TYPES:
        _, reps = enumerate_supports(typ)
        for rep in reps:
            a2, a1 = rep.a2_pair, rep.a1_triples
            for i, s in enumerate(a2):
                for j, t in enumerate(a2):
                    expect = 2 if i == j else -1
                    assert triple_pairing(s, t) == expect
            for s in a2:
                for t in a1:
                    assert triple_pairing(s, t) == 0
            for i, s in enumerate(a1):
                for j, t in enumerate(a1):
                    expect = 2 if i == j else 0
                    assert triple_pairing(s, t) == expect


def test_four_a1_completion_counts():
    assert four_a1_completion_count(((1, 2, 3), (1, 4, 5), (1, 6, 7))) == 8
    assert four_a1_completion_count(((1, 2, 3), (1, 4, 5), (2, 4, 6))) == 3


def test_orbit_dimension_examples():
    zero = AlternatingVector(7, 3, RANK_PRIME, {})
    assert orbit_dimension(zero) == 0
    single = AlternatingVector(7, 3, RANK_PRIME, {(1, 2, 3): 1})
    assert orbit_dimension(single) == 13
    dense = AlternatingVector(7, 3, RANK_PRIME, {
        (1, 2, 3): 1, (4, 5, 6): 1, (1, 4, 7): 1, (2, 5, 7): 1, (3, 6, 7): 1})
    assert orbit_dimension(dense) == 35


def test_orbit_table_rows():
    table = orbit_table()
    assert [rec.expected_dimension for rec in table] == \
        [0, 13, 20, 21, 25, 26, 28, 31, 34, 35]
    assert table[4].representative_triples == ((1, 2, 3), (1, 4, 5), (2, 4, 6))
    assert table[6].representative_triples == \
        ((1, 2, 3), (1, 4, 5), (1, 6, 7), (3, 5, 7))
    labels = [rec.label for rec in table]
    assert labels == list(range(10))


def test_dims_strictly_increase():
    dims = [rec.expected_dimension for rec in ORBITS]
    assert all(a < b for a, b in zip(dims, dims[1:]))


def test_orbit_dimension_constant_on_orbits():
    """g . v has the same tangent rank for random invertible g."""
    rng = random.Random(23)
    p = RANK_PRIME

    def random_invertible():
        while True:
            g = [[rng.randrange(p) for _ in range(7)] for _ in range(7)]
            # det via Gaussian elimination mod p
            m = [row[:] for row in g]
            det = 1
            for c in range(7):
                piv = next((r for r in range(c, 7) if m[r][c]), None)
                if piv is None:
                    det = 0
                    break
                if piv != c:
                    m[c], m[piv] = m[piv], m[c]
                    det = -det
                det = det * m[c][c] % p
                inv = pow(m[c][c], p - 2, p)
                m[c] = [x * inv % p for x in m[c]]
                for r in range(c + 1, 7):
                    f = m[r][c]
                    if f:
                        m[r] = [(x - f * y) % p for x, y in zip(m[r], m[c])]
            if det:
                return g

    def act(g, v):
        out = {}
        for (i, j, k), c in v.coefficients.items():
            # g.e_i ^ g.e_j ^ g.e_k expanded into basis triples
            for a in range(1, 8):
                for b in range(1, 8):
                    if b == a:
                        continue
                    for d in range(1, 8):
                        if d in (a, b):
                            continue
                        coeff = (g[a - 1][i - 1] * g[b - 1][j - 1] *
                                 g[d - 1][k - 1]) % p
                        if not coeff:
                            continue
                        key = tuple(sorted((a, b, d)))
                        perm = sorted(range(3), key=lambda r: (a, b, d)[r])
                        inv = sum(1 for r in range(3) for s in range(r + 1, 3)
                                  if perm[r] > perm[s])
                        sign = -1 if inv % 2 else 1
                        out[key] = (out.get(key, 0) + sign * c * coeff) % p
        return AlternatingVector(7, 3, p, out)

    for rec in ORBITS:
        v = rec.representative()
        base = orbit_dimension(v)
        for _ in range(20):
            g = random_invertible()
            assert orbit_dimension(act(g, v)) == base


def test_support_config_validates_gram():
    from theta_loci.vinberg import SupportConfig

    SupportConfig("2A1", (), ((1, 2, 3), (1, 4, 5)))
    with pytest.raises(UsageError):
        SupportConfig("2A1", (), ((1, 2, 3), (4, 5, 6)))  # pairs to -1, not 0
    with pytest.raises(UsageError):
        SupportConfig("A2", ((1, 2, 3), (1, 4, 5)), ())  # pairs to 0, not -1
    with pytest.raises(UsageError):
        SupportConfig("3A1", (), ((1, 2, 3), (1, 4, 5)))  # wrong shape


def test_table_representatives_are_valid_supports():
    """Rows 1..9 carry representatives realizing their type's Gram matrix."""
    from theta_loci.vinberg import SupportConfig

    for rec in ORBITS[1:]:
        triples = rec.representative_triples
        if rec.support_type.startswith("A2"):
            SupportConfig(rec.support_type, triples[:2], triples[2:])
        else:
            SupportConfig(rec.support_type, (), triples)


def test_alternating_vector_invariants():
    with pytest.raises(UsageError):
        AlternatingVector(7, 3, 101, {(2, 1, 3): 1})  # not increasing
    with pytest.raises(UsageError):
        AlternatingVector(7, 3, 101, {(1, 2, 8): 1})  # out of range
    v = AlternatingVector(7, 3, 101, {(1, 2, 3): 101})  # zero mod p dropped
    assert v.coefficients == {}


def test_parse_bracket_terms():
    v = parse_bracket_terms("[1,2,3]+[4,5,6]")
    assert v.coefficients == {(1, 2, 3): 1, (4, 5, 6): 1}
    v = parse_bracket_terms("2*[1,2,3] - [4,5,6]")
    assert v.coefficients[(1, 2, 3)] == 2
    assert v.coefficients[(4, 5, 6)] == RANK_PRIME - 1
    with pytest.raises(UsageError):
        parse_bracket_terms("[1,2]")
    with pytest.raises(UsageError):
        parse_bracket_terms("[1,1,2]")
