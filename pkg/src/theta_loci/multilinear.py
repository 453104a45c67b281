"""Skew-symmetric matrices of linear forms, Pfaffians, and section builders.

Two section-to-matrix constructions are provided:

* ``w39_matrix``: a degree-3 alternating tensor in 9 variables is comultiplied
  into a skew 9x9 matrix of linear forms; deleting the chart row/column gives
  the 8x8 matrix whose Pfaffian ideals cut out the degeneracy loci.  The chart
  variable stays live in the entries; the pipeline saturates by it afterwards.
* ``c5w25_matrix``: an element of C^5 tensor (wedge^2 C^5), presented as five
  constant skew matrices M_a, becomes sum_a z_a * M_a.

Sections are drawn deterministically with splitmix64: coefficient = next64
mod p, index tuples consumed in lexicographic order.  This is bit-exact
across implementations and is part of the JSON interchange contract.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .errors import InputError, UsageError
from .groebner import Ideal
from .poly import Polynomial, PolynomialRing

_M64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64 stream; next64() yields the standard 64-bit outputs."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _M64

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _M64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
        return z ^ (z >> 31)


def worker_count() -> int:
    """Parallelism cap from THETA_LOCI_THREADS (default 1: fully sequential)."""
    try:
        return max(1, int(os.environ.get("THETA_LOCI_THREADS", "1")))
    except ValueError:
        return 1


class SkewMatrix:
    """Square antisymmetric matrix of polynomials; diagonal zero enforced."""

    __slots__ = ("ring", "size", "entries")

    def __init__(self, ring: PolynomialRing, entries):
        n = len(entries)
        for row in entries:
            if len(row) != n:
                raise UsageError("matrix is not square")
        for i in range(n):
            if not entries[i][i].is_zero():
                raise UsageError(f"nonzero diagonal entry at {i}")
            for j in range(i + 1, n):
                if entries[i][j] != -entries[j][i]:
                    raise UsageError(f"entries ({i},{j}) and ({j},{i}) are not antisymmetric")
        self.ring = ring
        self.size = n
        self.entries = tuple(tuple(row) for row in entries)

    @classmethod
    def from_upper(cls, ring: PolynomialRing, size: int, upper) -> "SkewMatrix":
        """Build from a dict {(i, j): polynomial} with 0 <= i < j < size."""
        zero = ring.zero()
        rows = [[zero] * size for _ in range(size)]
        for (i, j), f in upper.items():
            if not 0 <= i < j < size:
                raise UsageError(f"bad upper-triangle index ({i},{j})")
            rows[i][j] = rows[i][j] + f
            rows[j][i] = rows[j][i] - f
        return cls(ring, rows)

    def __add__(self, other: "SkewMatrix") -> "SkewMatrix":
        if self.ring != other.ring or self.size != other.size:
            raise UsageError("matrix shape/ring mismatch")
        return SkewMatrix(self.ring, [[a + b for a, b in zip(r1, r2)]
                                      for r1, r2 in zip(self.entries, other.entries)])

    def submatrix(self, rows) -> "SkewMatrix":
        rows = tuple(rows)
        return SkewMatrix(self.ring, [[self.entries[i][j] for j in rows] for i in rows])

    def permuted(self, sigma) -> "SkewMatrix":
        """Simultaneous row/column permutation by sigma (new index -> old index)."""
        return self.submatrix(sigma)

    def pfaffian(self) -> Polynomial:
        return pfaffian(self)

    def determinant(self) -> Polynomial:
        """Cofactor expansion along the first row (independent of the Pfaffian path)."""
        return _det_cofactor(self.ring, self.entries)


def _det_cofactor(ring, rows) -> Polynomial:
    n = len(rows)
    if n == 0:
        return ring.one()
    if n == 1:
        return rows[0][0]
    total = ring.zero()
    for j in range(n):
        a = rows[0][j]
        if a.is_zero():
            continue
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        cof = _det_cofactor(ring, minor)
        total = total + (a * cof if j % 2 == 0 else -(a * cof))
    return total


def pfaffian(matrix: SkewMatrix) -> Polynomial:
    """Pfaffian; odd sizes give 0.  Convention: Pf([[0,a],[-a,0]]) = a.

    Recursive expansion along the smallest live index, memoized on the set of
    live indices.
    """
    ring = matrix.ring
    n = matrix.size
    if n % 2:
        return ring.zero()
    if n == 0:
        return ring.one()
    entries = matrix.entries
    memo: dict[int, Polynomial] = {}

    def rec(mask: int) -> Polynomial:
        if mask == 0:
            return ring.one()
        got = memo.get(mask)
        if got is not None:
            return got
        idx = [i for i in range(n) if mask & (1 << i)]
        first = idx[0]
        total = ring.zero()
        sign = 1  # position 2 in the sorted index list carries +
        for j in idx[1:]:
            a = entries[first][j]
            if not a.is_zero():
                rest = mask & ~(1 << first) & ~(1 << j)
                term = a * rec(rest)
                total = total + (term if sign > 0 else -term)
            sign = -sign
        memo[mask] = total
        return total

    return rec((1 << n) - 1)


def pfaffian_ideal(matrix: SkewMatrix, size: int) -> Ideal:
    """Ideal of Pfaffians of all principal size x size submatrices."""
    if size % 2:
        raise UsageError("Pfaffian ideal size must be even")
    if size > matrix.size:
        raise UsageError("submatrix size exceeds matrix size")
    subsets = list(combinations(range(matrix.size), size))
    threads = worker_count()
    if threads > 1 and len(subsets) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            pfs = list(pool.map(lambda s: pfaffian(matrix.submatrix(s)), subsets))
    else:
        pfs = [pfaffian(matrix.submatrix(s)) for s in subsets]
    return Ideal(matrix.ring, [f for f in pfs if not f.is_zero()])


# ---------------------------------------------------------------------------
# sections


class AlternatingVector:
    """Element of wedge^k C^n: strictly increasing index tuples -> F_p scalars."""

    __slots__ = ("ambient", "degree", "prime", "coefficients")

    def __init__(self, ambient: int, degree: int, prime: int, coefficients):
        coeffs = {}
        for key, c in coefficients.items():
            key = tuple(key)
            if len(key) != degree or list(key) != sorted(set(key)):
                raise UsageError(f"index tuple {key} is not strictly increasing")
            if not all(1 <= i <= ambient for i in key):
                raise UsageError(f"index tuple {key} out of range 1..{ambient}")
            c %= prime
            if c:
                coeffs[key] = c
        self.ambient = ambient
        self.degree = degree
        self.prime = prime
        self.coefficients = coeffs

    def __add__(self, other: "AlternatingVector") -> "AlternatingVector":
        if (self.ambient, self.degree, self.prime) != (other.ambient, other.degree, other.prime):
            raise UsageError("alternating vectors are incompatible")
        d = dict(self.coefficients)
        for k, c in other.coefficients.items():
            d[k] = (d.get(k, 0) + c) % self.prime
        return AlternatingVector(self.ambient, self.degree, self.prime, d)

    def __eq__(self, other):
        return (isinstance(other, AlternatingVector)
                and (self.ambient, self.degree, self.prime) ==
                    (other.ambient, other.degree, other.prime)
                and self.coefficients == other.coefficients)

    def __repr__(self):
        return (f"AlternatingVector(wedge^{self.degree} C^{self.ambient}, "
                f"{len(self.coefficients)} terms)")


@dataclass(frozen=True)
class TensorSection:
    """Element of C^5 tensor wedge^2 C^5: keys (a, i, j) with i < j."""

    prime: int
    terms: tuple[tuple[tuple[int, int, int], int], ...]

    @classmethod
    def from_dict(cls, prime: int, d) -> "TensorSection":
        items = []
        for key, c in sorted(d.items()):
            a, i, j = key
            if not (1 <= a <= 5 and 1 <= i < j <= 5):
                raise UsageError(f"bad tensor index {key}")
            c %= prime
            if c:
                items.append(((a, i, j), c))
        return cls(prime, tuple(items))


def w39_ring(prime: int = 101) -> PolynomialRing:
    return PolynomialRing(prime=prime, nvars=9)


def w39_matrix(v: AlternatingVector, chart: int = 9,
               ring: PolynomialRing | None = None) -> SkewMatrix:
    """8x8 comultiplication matrix of a degree-3 tensor in the given chart.

    Each basis tensor e_i ^ e_j ^ e_k (i<j<k) contributes the antisymmetric
    placements (i,j) -> -z_k, (i,k) -> +z_j, (j,k) -> -z_i to the full 9x9
    matrix; the chart row and column are then deleted.  For chart 9 this is
    the literal transcription of the matrix builder used for these loci.
    """
    if v.ambient != 9 or v.degree != 3:
        raise UsageError("w39_matrix needs a degree-3 tensor on C^9")
    if not 1 <= chart <= 9:
        raise UsageError("chart must be in 1..9")
    if ring is None:
        ring = w39_ring(v.prime)
    if ring.prime != v.prime:
        raise UsageError("ring prime does not match section prime")
    z = ring.gens()
    full: dict[tuple[int, int], Polynomial] = {}

    def put(a: int, b: int, f: Polynomial) -> None:
        # (a, b) 1-based with a < b expected by from_upper after shift
        key = (a - 1, b - 1)
        full[key] = full.get(key, ring.zero()) + f

    for (i, j, k), c in sorted(v.coefficients.items()):
        put(i, j, -z[k - 1].scale(c))
        put(i, k, z[j - 1].scale(c))
        put(j, k, -z[i - 1].scale(c))
    big = SkewMatrix.from_upper(ring, 9, full)
    keep = [i for i in range(9) if i != chart - 1]
    return big.submatrix(keep)


def c5w25_ring(prime: int = 101) -> PolynomialRing:
    return PolynomialRing(prime=prime, nvars=5)


def c5w25_matrix(v: TensorSection, ring: PolynomialRing | None = None) -> SkewMatrix:
    """5x5 matrix sum_a z_a * M_a; term e_a (x) (e_i ^ e_j) puts z_a at (i, j)."""
    if ring is None:
        ring = c5w25_ring(v.prime)
    if ring.prime != v.prime:
        raise UsageError("ring prime does not match section prime")
    z = ring.gens()
    upper: dict[tuple[int, int], Polynomial] = {}
    for (a, i, j), c in v.terms:
        key = (i - 1, j - 1)
        upper[key] = upper.get(key, ring.zero()) + z[a - 1].scale(c)
    return SkewMatrix.from_upper(ring, 5, upper)


_CASE_INDICES = {
    "w39": lambda: list(combinations(range(1, 10), 3)),
    "c3c3c3": lambda: [(i, j, k) for i in range(1, 4)
                       for j in range(4, 7) for k in range(7, 10)],
    "c5w25": lambda: [(a, i, j) for a in range(1, 6)
                      for (i, j) in combinations(range(1, 6), 2)],
}


def random_section(case: str, seed: int, prime: int = 101):
    """Deterministic pseudo-random section for a named pipeline case.

    Coefficients are next64 mod p with index tuples consumed in lexicographic
    order; identical (case, seed, prime) always gives identical output.
    """
    if case not in _CASE_INDICES:
        raise UsageError(f"unknown case {case!r}")
    rng = SplitMix64(seed)
    coeffs = {idx: rng.next64() % prime for idx in _CASE_INDICES[case]()}
    if case == "c5w25":
        return TensorSection.from_dict(prime, coeffs)
    return AlternatingVector(9, 3, prime, coeffs)


# ---------------------------------------------------------------------------
# JSON interchange for sections


def section_to_json(section, case: str) -> str:
    if isinstance(section, AlternatingVector):
        terms = [{"indices": list(k), "coeff": c}
                 for k, c in sorted(section.coefficients.items())]
        prime = section.prime
    elif isinstance(section, TensorSection):
        terms = [{"indices": list(k), "coeff": c} for k, c in section.terms]
        prime = section.prime
    else:
        raise UsageError("unsupported section type")
    return json.dumps({"prime": prime, "case": case, "terms": terms},
                      sort_keys=True, indent=2)


def section_from_json(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"section JSON is not valid JSON: {exc}") from exc
    for field_name in ("prime", "case", "terms"):
        if field_name not in data:
            raise InputError(f"section JSON missing field {field_name!r}")
    prime = data["prime"]
    case = data["case"]
    if case not in _CASE_INDICES:
        raise InputError(f"section JSON field 'case' has unknown value {case!r}")
    coeffs = {}
    for i, term in enumerate(data["terms"]):
        if "indices" not in term or "coeff" not in term:
            raise InputError(f"section JSON terms[{i}] missing 'indices' or 'coeff'")
        coeffs[tuple(term["indices"])] = term["coeff"]
    try:
        if case == "c5w25":
            return TensorSection.from_dict(prime, coeffs)
        return AlternatingVector(9, 3, prime, coeffs)
    except UsageError as exc:
        raise InputError(f"section JSON field 'terms' invalid: {exc}") from exc
