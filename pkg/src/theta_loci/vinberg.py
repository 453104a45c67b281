"""Combinatorial orbit classification for degree-3 alternating tensors on C^7.

Weight vectors e_i ^ e_j ^ e_k pair by (S, T) = |S cap T| - 1, which matches
the restriction of the invariant form.  A support configuration is a tuple of
triples realizing the simple-root Gram matrix of a target type built from A_1
and A_2 components (all roots here have the same length, so the Gram condition
reduces to matching pairings):

* components of type A_1 are mutually orthogonal: pairwise intersections of
  size 1, also with the A_2 triples;
* the two simple roots of an A_2 pair to -1: disjoint triples.

Configurations are classified up to the S_7 action on indices by exact
canonical-form minimization over all 5040 permutations.  Orbit dimensions are
ranks of the infinitesimal gl_7 action, computed over a large prime field.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import UsageError
from .multilinear import AlternatingVector

RANK_PRIME = (1 << 31) - 1  # Mersenne prime, comfortably above 1e9

TRIPLES = tuple(combinations(range(1, 8), 3))
_TRIPLE_INDEX = {t: i for i, t in enumerate(TRIPLES)}

SUPPORT_TYPES = ("A1", "2A1", "3A1", "4A1", "A2", "A2+A1", "A2+2A1", "A2+3A1")

_TYPE_SHAPE = {
    "A1": (0, 1), "2A1": (0, 2), "3A1": (0, 3), "4A1": (0, 4),
    "A2": (1, 0), "A2+A1": (1, 1), "A2+2A1": (1, 2), "A2+3A1": (1, 3),
}


def triple_pairing(s, t) -> int:
    """Invariant pairing of weight vectors: |S cap T| - 1."""
    return len(set(s) & set(t)) - 1


def _perm_triple_table():
    """For each of the 5040 permutations, the induced map on triple indices."""
    table = []
    for sigma in permutations(range(1, 8)):
        row = [0] * len(TRIPLES)
        for i, t in enumerate(TRIPLES):
            row[i] = _TRIPLE_INDEX[tuple(sorted(sigma[x - 1] for x in t))]
        table.append(tuple(row))
    return tuple(table)


_PERM_TABLE: tuple[tuple[int, ...], ...] | None = None


def _perm_table():
    global _PERM_TABLE
    if _PERM_TABLE is None:
        _PERM_TABLE = _perm_triple_table()
    return _PERM_TABLE


@dataclass(frozen=True)
class SupportConfig:
    """A realized support: A_2 pair (possibly empty) plus orthogonal A_1 triples.

    Construction validates the Gram condition: the A_2 roots pair to -1
    (disjoint triples), everything else pairs to 0 (one-element meets).
    """

    target_type: str
    a2_pair: tuple[tuple[int, ...], ...]  # () or a sorted pair of triples
    a1_triples: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        shape = _TYPE_SHAPE.get(self.target_type)
        if shape is None:
            raise UsageError(f"unknown support type {self.target_type!r}")
        if (len(self.a2_pair) // 2, len(self.a1_triples)) != shape:
            raise UsageError("configuration shape does not match its type")
        roots = self.triples()
        for i, s in enumerate(roots):
            for j, t in enumerate(roots):
                both_a2 = i < len(self.a2_pair) and j < len(self.a2_pair)
                expect = 2 if i == j else (-1 if both_a2 else 0)
                if triple_pairing(s, t) != expect:
                    raise UsageError(
                        f"pairing ({s},{t}) = {triple_pairing(s, t)}, "
                        f"expected {expect}")

    def triples(self) -> tuple[tuple[int, ...], ...]:
        return self.a2_pair + self.a1_triples

    def vector(self, prime: int = RANK_PRIME) -> AlternatingVector:
        return AlternatingVector(7, 3, prime, {t: 1 for t in self.triples()})


def _config_key(a2_idx, a1_idx):
    return (tuple(sorted(a2_idx)), tuple(sorted(a1_idx)))


def _canonical_key(a2_idx, a1_idx):
    best = None
    for row in _perm_table():
        key = (tuple(sorted(row[i] for i in a2_idx)),
               tuple(sorted(row[i] for i in a1_idx)))
        if best is None or key < best:
            best = key
    return best


def _a1_extensions(base_idx, count):
    """All sorted index tuples of `count` extra triples pairwise meeting in
    one element, each also meeting every base triple in one element."""
    candidates = [i for i in range(len(TRIPLES))
                  if all(triple_pairing(TRIPLES[i], TRIPLES[b]) == 0
                         for b in base_idx)]
    out = []

    def rec(start, chosen):
        if len(chosen) == count:
            out.append(tuple(chosen))
            return
        for i in range(start, len(candidates)):
            c = candidates[i]
            if all(triple_pairing(TRIPLES[c], TRIPLES[j]) == 0 for j in chosen):
                chosen.append(c)
                rec(i + 1, chosen)
                chosen.pop()

    rec(0, [])
    return out


def _gram_classes(target_type: str):
    """Gram-compatible configurations of one type, up to S_7 (no completeness).

    Classes are found by orbit walking: each unvisited configuration is
    expanded through all 5040 permutations at once, so the canonical
    minimization runs once per class rather than once per raw tuple.
    """
    n_a2, n_a1 = _TYPE_SHAPE[target_type]
    raw = []
    if n_a2:
        for i, j in combinations(range(len(TRIPLES)), 2):
            if triple_pairing(TRIPLES[i], TRIPLES[j]) == -1:
                for ext in _a1_extensions((i, j), n_a1):
                    raw.append(_config_key((i, j), ext))
    else:
        for ext in _a1_extensions((), n_a1):
            raw.append(_config_key((), ext))
    raw_set = set(raw)
    visited: set[tuple] = set()
    classes = {}
    for key0 in raw:
        if key0 in visited:
            continue
        best = key0
        a2_idx, a1_idx = key0
        for row in _perm_table():
            img = (tuple(sorted(row[i] for i in a2_idx)),
                   tuple(sorted(row[i] for i in a1_idx)))
            visited.add(img)
            if img < best:
                best = img
        if best not in raw_set:
            raise UsageError("orbit walk left the candidate set")  # unreachable
        classes[best] = SupportConfig(
            target_type,
            tuple(TRIPLES[i] for i in best[0]),
            tuple(TRIPLES[i] for i in best[1]))
    return [classes[k] for k in sorted(classes)]


def _generic_dimension(config: SupportConfig) -> int:
    """Orbit dimension of a deterministic generic element of the span."""
    from .multilinear import SplitMix64

    rng = SplitMix64(0x5EED_0001)
    coeffs = {t: 1 + rng.next64() % (RANK_PRIME - 1) for t in config.triples()}
    return orbit_dimension(AlternatingVector(7, 3, RANK_PRIME, coeffs))


_GENUINE: dict[str, list[SupportConfig]] | None = None


def _genuine_classes() -> dict[str, list[SupportConfig]]:
    """Gram classes of every type, filtered by the dimension certificate.

    A completeness check is not implemented; instead a class is discarded
    when its generic element's orbit dimension already arises from a kept
    class with fewer simple roots (equal dimension means equal orbit here,
    since the ten orbit dimensions are pairwise distinct).  The one casualty
    is the 4A_1-shaped configuration with all pairwise intersections
    distinct, whose generic element lies in the dimension-26 orbit already
    produced by A_2.
    """
    global _GENUINE
    if _GENUINE is not None:
        return _GENUINE
    order = sorted(SUPPORT_TYPES, key=lambda t: sum(_TYPE_SHAPE[t]) + _TYPE_SHAPE[t][0])
    kept: dict[str, list[SupportConfig]] = {}
    dims_by_roots: list[tuple[int, int]] = []  # (root count, dimension)
    for typ in order:
        n_roots = 2 * _TYPE_SHAPE[typ][0] + _TYPE_SHAPE[typ][1]
        kept[typ] = []
        for config in _gram_classes(typ):
            dim = _generic_dimension(config)
            if any(r < n_roots and d == dim for r, d in dims_by_roots):
                continue
            kept[typ].append(config)
            dims_by_roots.append((n_roots, dim))
    _GENUINE = kept
    return kept


def enumerate_supports(target_type: str):
    """Support configurations of the target type up to the S_7 action.

    Returns (class_count, representatives) from canonical-form minimization
    over all 5040 permutations, with non-supports removed by the dimension
    certificate (see _genuine_classes).
    """
    if target_type not in _TYPE_SHAPE:
        raise UsageError(f"unknown support type {target_type!r}")
    reps = _genuine_classes()[target_type]
    return len(reps), reps


def four_a1_completion_count(base) -> int:
    """Number of triples completing a 3A_1 base to a genuine 4A_1 support.

    Counted before S_7 dedup; a completion is discarded when the completed
    configuration fails the dimension certificate (generic orbit dimension
    not equal to that of the kept 4A_1 class).
    """
    base_idx = tuple(_TRIPLE_INDEX[tuple(t)] for t in base)
    kept = enumerate_supports("4A1")[1]
    target_dims = {_generic_dimension(c) for c in kept}
    count = 0
    for (ext,) in _a1_extensions(base_idx, 1):
        config = SupportConfig("4A1", (),
                               tuple(TRIPLES[i] for i in base_idx) + (TRIPLES[ext],))
        if _generic_dimension(config) in target_dims:
            count += 1
    return count


# ---------------------------------------------------------------------------
# orbit dimensions


def _apply_elementary(a: int, b: int, triple, coeff: int, prime: int, acc):
    """Accumulate E_{ab} . (coeff * e_triple) into acc (dict on sorted triples)."""
    for slot, x in enumerate(triple):
        if x != b:
            continue
        replaced = list(triple)
        replaced[slot] = a
        if len(set(replaced)) < 3:
            continue
        sign = 1
        arranged = sorted(replaced)
        # sign of the permutation sorting the replaced slot into position
        perm = sorted(range(3), key=lambda r: replaced[r])
        inv = sum(1 for r in range(3) for s in range(r + 1, 3)
                  if perm[r] > perm[s])
        if inv % 2:
            sign = -1
        key = tuple(arranged)
        acc[key] = (acc.get(key, 0) + sign * coeff) % prime


def orbit_dimension(v: AlternatingVector) -> int:
    """Dimension of the GL_7 orbit of v: rank of the 49 x 35 tangent matrix.

    Computed over a prime field of size >= 1e9; table representatives have
    0/1 coefficients, so the mod-p rank certifies the rational rank.
    """
    if v.ambient != 7 or v.degree != 3:
        raise UsageError("orbit_dimension needs a degree-3 tensor on C^7")
    prime = v.prime
    rows = []
    for a in range(1, 8):
        for b in range(1, 8):
            acc: dict[tuple[int, ...], int] = {}
            for triple, c in v.coefficients.items():
                _apply_elementary(a, b, triple, c, prime, acc)
            if acc:
                rows.append([acc.get(t, 0) for t in TRIPLES])
    return _rank_mod_p(rows, prime)


def _rank_mod_p(rows, p: int) -> int:
    """Gaussian elimination rank of a small dense matrix mod p."""
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    rank = 0
    col = 0
    r = 0
    while r < len(rows) and col < ncols:
        piv = next((i for i in range(r, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            col += 1
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        rank += 1
        r += 1
        col += 1
    return rank


# ---------------------------------------------------------------------------
# the ten orbits


@dataclass(frozen=True)
class OrbitRecord:
    label: int
    support_type: str
    representative_triples: tuple[tuple[int, ...], ...]
    expected_dimension: int

    def representative(self, prime: int = RANK_PRIME) -> AlternatingVector:
        return AlternatingVector(7, 3, prime,
                                 {t: 1 for t in self.representative_triples})


ORBITS = (
    OrbitRecord(0, "0", (), 0),
    OrbitRecord(1, "A1", ((1, 2, 3),), 13),
    OrbitRecord(2, "2A1", ((1, 2, 3), (1, 4, 5)), 20),
    OrbitRecord(3, "3A1", ((1, 2, 3), (1, 4, 5), (1, 6, 7)), 21),
    OrbitRecord(4, "3A1", ((1, 2, 3), (1, 4, 5), (2, 4, 6)), 25),
    OrbitRecord(5, "A2", ((1, 2, 3), (4, 5, 6)), 26),
    OrbitRecord(6, "4A1", ((1, 2, 3), (1, 4, 5), (1, 6, 7), (3, 5, 7)), 28),
    OrbitRecord(7, "A2+A1", ((1, 2, 3), (4, 5, 6), (1, 4, 7)), 31),
    OrbitRecord(8, "A2+2A1", ((1, 2, 3), (4, 5, 6), (1, 4, 7), (2, 5, 7)), 34),
    OrbitRecord(9, "A2+3A1",
                ((1, 2, 3), (4, 5, 6), (1, 4, 7), (2, 5, 7), (3, 6, 7)), 35),
)


def orbit_table():
    """The ten orbit records with dimensions verified by the tangent rank.

    Raises if any computed dimension disagrees with the stored table.
    """
    out = []
    for rec in ORBITS:
        dim = orbit_dimension(rec.representative())
        if dim != rec.expected_dimension:
            raise UsageError(
                f"orbit {rec.label}: computed dimension {dim} != "
                f"expected {rec.expected_dimension}")
        out.append(rec)
    return out


def parse_bracket_terms(text: str, prime: int = RANK_PRIME) -> AlternatingVector:
    """Parse `[1,2,3]+[4,5,6]` (optional integer multipliers, `-` allowed)."""
    import re

    pattern = re.compile(
        r"\s*([+-])?\s*(?:(\d+)\s*\*\s*)?\[\s*(\d+)\s*,?\s*(\d+)\s*,?\s*(\d+)\s*\]")
    pos = 0
    coeffs: dict[tuple[int, int, int], int] = {}
    found = False
    while pos < len(text):
        m = pattern.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise UsageError(f"cannot parse terms near {text[pos:pos + 12]!r}")
            break
        found = True
        sign, mult, i, j, k = m.groups()
        c = int(mult) if mult else 1
        if sign == "-":
            c = -c
        key = tuple(sorted((int(i), int(j), int(k))))
        if len(set(key)) != 3:
            raise UsageError(f"repeated index in [{i},{j},{k}]")
        coeffs[key] = (coeffs.get(key, 0) + c) % prime
        pos = m.end()
    if not found:
        raise UsageError("no bracket terms found")
    return AlternatingVector(7, 3, prime, coeffs)
