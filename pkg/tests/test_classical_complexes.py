"""The classical resolution data verified against live Groebner computations
of the corresponding generic ideals: the predicted alternating-sum numerator
must equal the computed Hilbert numerator and the codimension must match the
resolution length (perfection)."""

from itertools import combinations

from theta_loci.complexes import (buchsbaum_eisenbud_numerator_terms,
                                  goto_jozefiak_tachibana_numerator_terms,
                                  jozefiak_pragacz_numerator_terms,
                                  koszul_numerator_terms)
from theta_loci.groebner import Ideal, hilbert, resolution_hilbert_numerator
from theta_loci.multilinear import SkewMatrix, pfaffian_ideal
from theta_loci.poly import PolynomialRing


def _generic_skew(n: int) -> SkewMatrix:
    ring = PolynomialRing(prime=101, nvars=n * (n - 1) // 2)
    gens = iter(ring.gens())
    upper = {(i, j): next(gens) for i in range(n) for j in range(i + 1, n)}
    return SkewMatrix.from_upper(ring, n, upper)


def test_koszul_is_variable_ideal_numerator():
    ring = PolynomialRing(prime=101, nvars=3)
    hd = hilbert(Ideal(ring, list(ring.gens())))
    assert hd.numerator == resolution_hilbert_numerator(koszul_numerator_terms(3))
    assert hd.krull_dimension == 0


def test_buchsbaum_eisenbud_generic():
    """4x4 Pfaffians of the generic skew 5x5: Gorenstein of codimension 3."""
    M = _generic_skew(5)
    hd = hilbert(pfaffian_ideal(M, 4))
    pred = resolution_hilbert_numerator(buchsbaum_eisenbud_numerator_terms(2))
    assert hd.numerator == pred
    assert M.ring.nvars - hd.krull_dimension == 3
    # Gorenstein symmetry: palindromic numerator up to sign
    c = pred.coeffs
    assert c == tuple(-x for x in reversed(c)) or c == tuple(reversed(c))


def test_goto_jozefiak_tachibana_generic():
    """2x2 minors of the generic symmetric 3x3: codimension 3."""
    ring = PolynomialRing(prime=101, nvars=6)
    g = ring.gens()
    sym = [[None] * 3 for _ in range(3)]
    k = 0
    for i in range(3):
        for j in range(i, 3):
            sym[i][j] = sym[j][i] = g[k]
            k += 1
    minors = []
    for rows in combinations(range(3), 2):
        for cols in combinations(range(3), 2):
            minors.append(sym[rows[0]][cols[0]] * sym[rows[1]][cols[1]]
                          - sym[rows[0]][cols[1]] * sym[rows[1]][cols[0]])
    hd = hilbert(Ideal(ring, minors))
    pred = resolution_hilbert_numerator(
        goto_jozefiak_tachibana_numerator_terms(3))
    assert hd.numerator == pred
    assert 6 - hd.krull_dimension == 3


def test_jozefiak_pragacz_generic():
    """4x4 Pfaffians of the generic skew 6x6: codimension 6."""
    M = _generic_skew(6)
    hd = hilbert(pfaffian_ideal(M, 4))
    pred = resolution_hilbert_numerator(jozefiak_pragacz_numerator_terms(3))
    assert hd.numerator == pred
    assert M.ring.nvars - hd.krull_dimension == 6
