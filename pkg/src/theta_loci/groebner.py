"""Groebner engine and derived ideal invariants.

Buchberger with the Gebauer-Moeller pair criteria and normal (minimal lcm
degree) selection.  Monomials are packed into single integers so that integer
comparison realizes the term order and integer addition realizes monomial
multiplication; divisibility uses a SWAR check on a parallel plain packing.

Saturation by a single polynomial uses the auxiliary-variable method
(adjoin t, add t*f - 1, eliminate t).  For a homogeneous ideal and a plain
variable there is an equivalent fast path exploiting the degrevlex fact that
a homogeneous polynomial is divisible by the last variable exactly when its
leading monomial is; the two paths agree and both are tested.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import UsageError
from .poly import Polynomial, PolynomialRing

_BITS = 16
_MASK = (1 << _BITS) - 1
_MAXEXP = 1 << (_BITS - 1)  # exponents must stay below this for SWAR guards


class MonomialOrder:
    """Degrevlex, or a block elimination order with a dominant drop block.

    key(): packed integer; larger key == larger monomial, key(ab) = key(a)+key(b).
    packed(): plain per-variable packing used for SWAR divisibility tests.
    """

    def __init__(self, nvars: int, drop: tuple[int, ...] = ()):
        self.nvars = nvars
        self.drop = tuple(sorted(drop))
        self.keep = tuple(i for i in range(nvars) if i not in set(self.drop))
        self.descriptor = ("degrevlex" if not self.drop
                           else f"eliminate[{','.join(map(str, self.drop))}]")
        self._guard = 0
        for i in range(nvars):
            self._guard |= 1 << (_BITS * i + _BITS - 1)

    def _revkey(self, exps, positions) -> int:
        # deg * B^k - sum(e_i * B^slot), most significant slot = last variable
        deg = 0
        n = 0
        for slot, i in enumerate(positions):
            e = exps[i]
            if e >= _MAXEXP:
                raise UsageError("exponent too large for packed order")
            deg += e
            n += e << (_BITS * slot)
        return (deg << (_BITS * len(positions))) - n

    def key(self, exps) -> int:
        if not self.drop:
            return self._revkey(exps, range(self.nvars))
        kk = self._revkey(exps, self.keep)
        kd = self._revkey(exps, self.drop)
        return (kd << (_BITS * (len(self.keep) + 4))) + kk

    def _unrev(self, key: int, k: int) -> tuple[int, ...]:
        deg = (key + (1 << (_BITS * k)) - 1) >> (_BITS * k)
        n = (deg << (_BITS * k)) - key
        return tuple((n >> (_BITS * slot)) & _MASK for slot in range(k))

    def exps(self, key: int) -> tuple[int, ...]:
        if not self.drop:
            return self._unrev(key, self.nvars)
        shift = _BITS * (len(self.keep) + 4)
        kd, kk = key >> shift, key & ((1 << shift) - 1)
        ed = self._unrev(kd, len(self.drop))
        ek = self._unrev(kk, len(self.keep))
        out = [0] * self.nvars
        for slot, i in enumerate(self.drop):
            out[i] = ed[slot]
        for slot, i in enumerate(self.keep):
            out[i] = ek[slot]
        return tuple(out)

    def packed(self, exps) -> tuple[int, int]:
        """(plain packing, variable-support bitmask) for divisibility tests."""
        pk = 0
        mask = 0
        for i, e in enumerate(exps):
            if e:
                pk += e << (_BITS * i)
                mask |= 1 << i
        return pk, mask

    def divides(self, pk_small: int, pk_big: int) -> bool:
        return ((pk_big | self._guard) - pk_small) & self._guard == self._guard

    def total_degree(self, key: int) -> int:
        return sum(self.exps(key))


# ---------------------------------------------------------------------------
# engine: polynomials as {order key: coeff} dicts, monic basis elements


class _Basis:
    """Reducer list with parallel arrays for the hot divisibility loop."""

    def __init__(self, order: MonomialOrder, p: int):
        self.order = order
        self.p = p
        self.lead_key: list[int] = []
        self.lead_pk: list[int] = []
        self.lead_mask: list[int] = []
        self.lead_exps: list[tuple[int, ...]] = []
        self.tail: list[list[tuple[int, int]]] = []   # without the (monic) lead
        self.alive: list[bool] = []

    def add(self, d: dict[int, int]) -> int:
        """Add a monic polynomial dict; returns its index."""
        k = max(d)
        exps = self.order.exps(k)
        pk, mask = self.order.packed(exps)
        self.lead_key.append(k)
        self.lead_pk.append(pk)
        self.lead_mask.append(mask)
        self.lead_exps.append(exps)
        self.tail.append(sorted((kk, c) for kk, c in d.items() if kk != k))
        self.alive.append(True)
        return len(self.lead_key) - 1

    def find_reducer(self, pk: int, mask: int) -> int:
        order = self.order
        lead_mask = self.lead_mask
        lead_pk = self.lead_pk
        alive = self.alive
        guard = order._guard
        for i in range(len(lead_pk)):
            if not alive[i]:
                continue
            if lead_mask[i] & ~mask:
                continue
            if ((pk | guard) - lead_pk[i]) & guard == guard:
                return i
        return -1


def _normal_form_dict(f: dict[int, int], basis: _Basis) -> dict[int, int]:
    """Remainder of f on division by the (monic) basis elements."""
    p = basis.p
    order = basis.order
    cur = dict(f)
    out: dict[int, int] = {}
    heap = [-k for k in cur]
    heapq.heapify(heap)
    while heap:
        k = -heapq.heappop(heap)
        c = cur.get(k)
        if not c:
            continue
        pk, mask = order.packed(order.exps(k))
        i = basis.find_reducer(pk, mask)
        if i < 0:
            out[k] = c
            del cur[k]
            continue
        del cur[k]
        shift = k - basis.lead_key[i]
        for tk, tc in basis.tail[i]:
            nk = tk + shift
            prev = cur.get(nk)
            if prev is None:
                nc = (-c * tc) % p
                if nc:
                    cur[nk] = nc
                    heapq.heappush(heap, -nk)
            else:
                nc = (prev - c * tc) % p
                if nc:
                    cur[nk] = nc
                else:
                    del cur[nk]
    return out


def _spoly(basis: _Basis, i: int, j: int, lcm_key: int) -> dict[int, int]:
    p = basis.p
    si = lcm_key - basis.lead_key[i]
    sj = lcm_key - basis.lead_key[j]
    d: dict[int, int] = {}
    for tk, tc in basis.tail[i]:
        d[tk + si] = tc
    for tk, tc in basis.tail[j]:
        k = tk + sj
        c = (d.get(k, 0) - tc) % p
        if c:
            d[k] = c
        elif k in d:
            del d[k]
    return d


def _lcm_key(order: MonomialOrder, e1, e2) -> int:
    return order.key(tuple(max(a, b) for a, b in zip(e1, e2)))


def _buchberger_dicts(inputs: list[dict[int, int]], p: int,
                      order: MonomialOrder) -> list[dict[int, int]]:
    """Reduced Groebner basis of the given polynomial dicts."""
    basis = _Basis(order, p)
    pairs: list[tuple[int, int, int, int]] = []  # (lcm degree, lcm key, i, j)

    def update(d: dict[int, int]) -> None:
        # Gebauer-Moeller installation of the Buchberger criteria.
        t = basis.add(d)
        et = basis.lead_exps[t]
        maskt = basis.lead_mask[t]
        pkt = basis.lead_pk[t]
        # old pairs: keep (i,j) unless lm_t | lcm(i,j) strictly refines it
        kept = []
        for deg, lk, i, j in pairs:
            lexps = order.exps(lk)
            lpk, lmask = order.packed(lexps)
            if not ((maskt & ~lmask) == 0 and order.divides(pkt, lpk)):
                kept.append((deg, lk, i, j))
                continue
            if _lcm_key(order, basis.lead_exps[i], et) == lk or \
               _lcm_key(order, basis.lead_exps[j], et) == lk:
                kept.append((deg, lk, i, j))
        # new pairs, grouped by lcm and minimalized by divisibility
        groups: dict[int, list[int]] = {}
        for i in range(t):
            if not basis.alive[i]:
                continue
            groups.setdefault(_lcm_key(order, basis.lead_exps[i], et), []).append(i)
        minimal: list[tuple[int, int, int]] = []  # (lcm key, lcm pk, member)
        for lk in sorted(groups):
            lexps = order.exps(lk)
            lpk, _ = order.packed(lexps)
            if any(order.divides(mpk, lpk) for _, mpk, _ in minimal):
                continue
            # Buchberger's product criterion kills the whole lcm class
            if any((basis.lead_mask[i] & maskt) == 0 for i in groups[lk]):
                continue
            minimal.append((lk, lpk, groups[lk][0]))
            kept.append((sum(lexps), lk, groups[lk][0], t))
        heapq.heapify(kept)
        pairs[:] = kept
        # prune now-redundant reducers
        for i in range(t):
            if basis.alive[i] and (maskt & ~basis.lead_mask[i]) == 0 \
                    and order.divides(pkt, basis.lead_pk[i]):
                basis.alive[i] = False

    seeds = [d for d in inputs if d]
    seeds.sort(key=lambda d: max(d))
    for d in seeds:
        r = _normal_form_dict(d, basis)
        if r:
            lc = r[max(r)]
            if lc != 1:
                inv = pow(lc, p - 2, p)
                r = {k: (c * inv) % p for k, c in r.items()}
            update(r)

    while pairs:
        _, lk, i, j = heapq.heappop(pairs)
        r = _normal_form_dict(_spoly(basis, i, j, lk), basis)
        if r:
            lc = r[max(r)]
            if lc != 1:
                inv = pow(lc, p - 2, p)
                r = {k: (c * inv) % p for k, c in r.items()}
            update(r)

    # minimalize + tail-reduce (classical interreduction to the reduced basis)
    live = [i for i in range(len(basis.lead_key)) if basis.alive[i]]
    live.sort(key=lambda i: basis.lead_key[i])
    minimal_idx: list[int] = []
    for i in live:
        if not any((basis.lead_mask[j] & ~basis.lead_mask[i]) == 0 and
                   order.divides(basis.lead_pk[j], basis.lead_pk[i])
                   for j in minimal_idx):
            minimal_idx.append(i)
    reduced: list[dict[int, int]] = []
    for i in minimal_idx:
        sub = _Basis(order, p)
        for j in minimal_idx:
            if j != i:
                d = dict(basis.tail[j])
                d[basis.lead_key[j]] = 1
                sub.add(d)
        d = dict(basis.tail[i])
        d[basis.lead_key[i]] = 1
        reduced.append(_normal_form_dict(d, sub))
    reduced.sort(key=max)
    return reduced


# ---------------------------------------------------------------------------
# public types


class Ideal:
    """An ideal presented by generators; nonzero generators only.

    Instances are immutable apart from an internal per-order cache of
    computed reduced bases (idempotent writes of immutable values, so
    concurrent use needs no coordination).
    """

    def __init__(self, ring: PolynomialRing, generators, saturated: bool = False):
        gens = tuple(g for g in generators if not g.is_zero())
        for g in gens:
            if g.ring != ring:
                raise UsageError("generator from a different ring")
        self.ring = ring
        self.generators = gens
        self.saturated = saturated
        self._gb_cache: dict[str, GroebnerBasis] = {}

    @property
    def homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def groebner_basis(self, order: MonomialOrder | None = None) -> "GroebnerBasis":
        if order is None:
            order = MonomialOrder(self.ring.nvars)
        cached = self._gb_cache.get(order.descriptor)
        if cached is not None:
            return cached
        gb = buchberger_reduced(self, order)
        self._gb_cache[order.descriptor] = gb
        return gb

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, list(self.groebner_basis().elements)).is_zero()

    def is_unit(self) -> bool:
        els = self.groebner_basis().elements
        return len(els) == 1 and els[0].is_constant() and not els[0].is_zero()

    def is_zero(self) -> bool:
        return not self.generators

    def __eq__(self, other):
        if not isinstance(other, Ideal) or self.ring != other.ring:
            return False
        return self.groebner_basis().elements == other.groebner_basis().elements

    def __hash__(self):
        return hash((self.ring, self.groebner_basis().elements))

    def __repr__(self):
        return f"Ideal({len(self.generators)} generators over {self.ring!r})"


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced, monic, canonically sorted Groebner basis."""

    ring: PolynomialRing
    order: str
    elements: tuple[Polynomial, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _to_dict(f: Polynomial, order: MonomialOrder) -> dict[int, int]:
    return {order.key(m.exponents): c for m, c in f.terms}

def _from_dict(d: dict[int, int], ring: PolynomialRing,
               order: MonomialOrder) -> Polynomial:
    return ring.from_exponent_dict({order.exps(k): c for k, c in d.items()})


def normal_form(f: Polynomial, divisors, order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of f modulo the given divisor list (need not be a basis).

    No term of the result is divisible by any divisor leading term, and
    f minus the result lies in the ideal the divisors generate.
    """
    ring = f.ring
    if order is None:
        order = MonomialOrder(ring.nvars)
    basis = _Basis(order, ring.prime)
    for g in divisors:
        if g.ring != ring:
            raise UsageError("divisor from a different ring")
        if not g.is_zero():
            basis.add(_to_dict(g.monic(), order))
    return _from_dict(_normal_form_dict(_to_dict(f, order), basis), ring, order)


def buchberger_reduced(ideal_or_polys, order: MonomialOrder | None = None) -> GroebnerBasis:
    """Reduced Groebner basis; the zero ideal yields an empty basis."""
    if isinstance(ideal_or_polys, Ideal):
        ring = ideal_or_polys.ring
        gens = ideal_or_polys.generators
    else:
        gens = tuple(g for g in ideal_or_polys if not g.is_zero())
        if not gens:
            raise UsageError("cannot infer ring from an empty polynomial list")
        ring = gens[0].ring
    if order is None:
        order = MonomialOrder(ring.nvars)
    dicts = [_to_dict(g, order) for g in gens]
    out = _buchberger_dicts(dicts, ring.prime, order)
    return GroebnerBasis(ring, order.descriptor,
                         tuple(_from_dict(d, ring, order) for d in out))


# ---------------------------------------------------------------------------
# elimination, saturation, intersection, quotient


def _extend_ring(ring: PolynomialRing, extra: str) -> PolynomialRing:
    name = extra
    while name in ring.variables:
        name = "_" + name
    return PolynomialRing(prime=ring.prime, variables=ring.variables + (name,))

def _lift(f: Polynomial, big: PolynomialRing) -> Polynomial:
    return big.from_exponent_dict(
        {m.exponents + (0,) * (big.nvars - f.ring.nvars): c for m, c in f.terms})

def _drop_last(f: Polynomial, small: PolynomialRing) -> Polynomial:
    d = {}
    for m, c in f.terms:
        if any(m.exponents[small.nvars:]):
            raise UsageError("polynomial still involves an eliminated variable")
        d[m.exponents[:small.nvars]] = c
    return small.from_exponent_dict(d)


def eliminate(ideal: Ideal, drop_vars) -> Ideal:
    """Generators of the contraction to the subring without drop_vars.

    drop_vars may hold variable names or 0-based indices; the result lives in
    the same ring, its generators simply avoid the dropped variables.
    """
    ring = ideal.ring
    drop: set[int] = set()
    for v in drop_vars:
        if isinstance(v, str):
            if v not in ring.variables:
                raise UsageError(f"unknown variable {v!r}")
            drop.add(ring.variables.index(v))
        else:
            if not 0 <= v < ring.nvars:
                raise UsageError(f"variable index {v} out of range")
            drop.add(int(v))
    if not drop:
        return Ideal(ring, ideal.generators)
    order = MonomialOrder(ring.nvars, tuple(sorted(drop)))
    gb = buchberger_reduced(ideal, order)
    kept = []
    for g in gb.elements:
        lead = g.leading_monomial().exponents
        if all(lead[i] == 0 for i in drop):
            if any(m.exponents[i] for m, _ in g.terms for i in drop):
                raise UsageError("elimination order violated")  # unreachable
            kept.append(g)
    return Ideal(ring, kept)


def _saturate_last_variable(ideal: Ideal) -> Ideal:
    """I : z_n^infty for homogeneous I, by dividing degrevlex basis elements.

    In degrevlex with z_n last, a homogeneous polynomial is divisible by z_n
    exactly when its leading monomial is; dividing out and recomputing until
    no basis element is divisible yields the saturation.
    """
    ring = ideal.ring
    last = ring.nvars - 1
    gens = list(ideal.generators)
    while True:
        gb = buchberger_reduced(Ideal(ring, gens)) if gens else None
        if gb is None:
            return Ideal(ring, (), saturated=True)
        changed = False
        new_gens = []
        for g in gb.elements:
            e = min(m.exponents[last] for m, _ in g.terms)
            if e > 0:
                changed = True
                d = {m.exponents[:last] + (m.exponents[last] - e,): c
                     for m, c in g.terms}
                g = ring.from_exponent_dict(d)
            new_gens.append(g)
        if not changed:
            out = Ideal(ring, new_gens, saturated=True)
            out._gb_cache["degrevlex"] = GroebnerBasis(ring, "degrevlex",
                                                       tuple(new_gens))
            return out
        gens = new_gens


def _permute_ring(ring: PolynomialRing, perm) -> PolynomialRing:
    return PolynomialRing(prime=ring.prime,
                          variables=tuple(ring.variables[i] for i in perm))

def _permute_poly(f: Polynomial, perm, target: PolynomialRing) -> Polynomial:
    return target.from_exponent_dict(
        {tuple(m.exponents[i] for i in perm): c for m, c in f.terms})


def saturate(ideal: Ideal, f: Polynomial) -> Ideal:
    """I : f^infty.  Auxiliary-variable method; fast path for plain variables."""
    if f.is_zero():
        raise UsageError("cannot saturate by the zero polynomial")
    ring = ideal.ring
    if f.ring != ring:
        raise UsageError("saturating polynomial from a different ring")
    if f.is_constant():
        gb = ideal.groebner_basis()
        return Ideal(ring, gb.elements, saturated=True)
    if ideal.is_zero():
        return Ideal(ring, (), saturated=True)
    # fast path: f is a single variable and I is homogeneous
    if (ideal.homogeneous and len(f.terms) == 1
            and f.terms[0][0].total_degree == 1):
        idx = next(i for i, e in enumerate(f.terms[0][0].exponents) if e)
        if idx == ring.nvars - 1:
            return _saturate_last_variable(ideal)
        perm = [i for i in range(ring.nvars) if i != idx] + [idx]
        inv = [0] * ring.nvars
        for pos, i in enumerate(perm):
            inv[i] = pos
        pring = _permute_ring(ring, perm)
        moved = Ideal(pring, [_permute_poly(g, perm, pring) for g in ideal.generators])
        sat = _saturate_last_variable(moved)
        return Ideal(ring, [_permute_poly(g, inv, ring) for g in sat.generators],
                     saturated=True)
    big = _extend_ring(ring, "t")
    t = big.variable(big.nvars - 1)
    gens = [_lift(g, big) for g in ideal.generators]
    gens.append(t * _lift(f, big) - 1)
    elim = buchberger_reduced(Ideal(big, gens),
                              MonomialOrder(big.nvars, (big.nvars - 1,)))
    kept = [g for g in elim.elements
            if g.leading_monomial().exponents[big.nvars - 1] == 0]
    return Ideal(ring, [_drop_last(g, ring) for g in kept], saturated=True)


def ideal_intersection(a: Ideal, b: Ideal) -> Ideal:
    """I cap J via the t-homogenization trick (t*I + (1-t)*J, eliminate t)."""
    if a.ring != b.ring:
        raise UsageError("ideals from different rings")
    ring = a.ring
    if a.is_zero() or b.is_zero():
        return Ideal(ring, ())
    big = _extend_ring(ring, "t")
    t = big.variable(big.nvars - 1)
    one_minus_t = big.one() - t
    gens = [t * _lift(g, big) for g in a.generators]
    gens += [one_minus_t * _lift(g, big) for g in b.generators]
    elim = buchberger_reduced(Ideal(big, gens),
                              MonomialOrder(big.nvars, (big.nvars - 1,)))
    kept = [g for g in elim.elements
            if g.leading_monomial().exponents[big.nvars - 1] == 0]
    return Ideal(ring, [_drop_last(g, ring) for g in kept])


def _exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g, asserting exact divisibility."""
    ring = f.ring
    p = ring.prime
    q = ring.zero()
    r = f
    ginv = ring.field.inverse(g.leading_coefficient())
    glead = g.leading_monomial()
    while not r.is_zero():
        m = r.leading_monomial()
        if not glead.divides(m):
            raise UsageError("division is not exact")
        c = (r.leading_coefficient() * ginv) % p
        term = ring.monomial((m / glead).exponents, c)
        q = q + term
        r = r - term * g
    return q


def ideal_quotient(a: Ideal, b: Ideal) -> Ideal:
    """I : J, as the intersection of I : g over the generators g of J."""
    if a.ring != b.ring:
        raise UsageError("ideals from different rings")
    ring = a.ring
    if b.is_zero():
        return Ideal(ring, (ring.one(),))
    out: Ideal | None = None
    for g in b.generators:
        if g.is_constant():
            part = Ideal(ring, a.groebner_basis().elements)
        else:
            meet = ideal_intersection(a, Ideal(ring, (g,)))
            part = Ideal(ring, [_exact_divide(h, g) for h in meet.generators])
        out = part if out is None else ideal_intersection(out, part)
    assert out is not None
    return Ideal(ring, out.groebner_basis().elements)


def _variable_indices(ideal: Ideal) -> list[int] | None:
    """If every generator is a plain variable, their indices; else None."""
    out = []
    for g in ideal.generators:
        if len(g.terms) != 1 or g.terms[0][0].total_degree != 1:
            return None
        out.append(next(i for i, e in enumerate(g.terms[0][0].exponents) if e))
    return out


def saturate_by_ideal(a: Ideal, b: Ideal) -> Ideal:
    """I : J^infty, as a stabilized iterated quotient.

    When J is generated by plain variables and I is homogeneous, the
    saturation equals the intersection of the single-variable saturations
    (pigeonhole on monomials of J^N), which is much cheaper.
    """
    if a.ring != b.ring:
        raise UsageError("ideals from different rings")
    ring = a.ring
    if b.is_zero():
        return Ideal(ring, (ring.one(),), saturated=True)
    var_idx = _variable_indices(b)
    if var_idx is not None and a.homogeneous and var_idx:
        out: Ideal | None = None
        for i in var_idx:
            part = saturate(a, ring.variable(i))
            out = part if out is None else ideal_intersection(out, part)
        assert out is not None
        gb = out.groebner_basis()
        return Ideal(ring, gb.elements, saturated=True)
    cur = Ideal(ring, a.groebner_basis().elements)
    while True:
        nxt = ideal_quotient(cur, b)
        if nxt.groebner_basis().elements == cur.groebner_basis().elements:
            return Ideal(ring, cur.groebner_basis().elements, saturated=True)
        cur = nxt


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    if a.ring != b.ring:
        raise UsageError("ideals from different rings")
    return Ideal(a.ring, a.generators + b.generators)


# ---------------------------------------------------------------------------
# Hilbert series


class UnivariatePolynomial:
    """Small dense polynomial in t with int or Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePolynomial([self[i] + other[i] for i in range(n)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePolynomial([self[i] - other[i] for i in range(n)])

    def __mul__(self, other):
        if isinstance(other, int):
            return UnivariatePolynomial([c * other for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UnivariatePolynomial(out)

    def shift(self, k):
        if self.is_zero():
            return self
        return UnivariatePolynomial((0,) * k + self.coeffs)

    def __call__(self, x):
        v = 0
        for c in reversed(self.coeffs):
            v = v * x + c
        return v

    def divide_one_minus_t(self):
        """Exact division by (1 - t); requires self(1) == 0."""
        if self(1) != 0:
            raise UsageError("not divisible by 1 - t")
        out = []
        acc = 0
        for c in self.coeffs[:-1] if self.coeffs else ():
            acc += c
            out.append(acc)
        return UnivariatePolynomial(out)

    def __eq__(self, other):
        return isinstance(other, UnivariatePolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                tpow = "t" if i == 1 else f"t^{i}"
                body = tpow if mag == 1 else f"{mag}*{tpow}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"UnivariatePolynomial({self})"


@dataclass(frozen=True)
class HilbertData:
    """Numerator over the full ring, Krull dimension, degree, Hilbert polynomial."""

    numerator: UnivariatePolynomial
    krull_dimension: int
    degree: int
    hilbert_polynomial: UnivariatePolynomial
    nvars: int = field(compare=False, default=0)

    def hilbert_function(self, d: int) -> int:
        """Actual Hilbert function value from the numerator (valid for all d)."""
        n = self.nvars
        total = 0
        for j, c in enumerate(self.numerator.coeffs):
            if d - j >= 0:
                total += c * comb(d - j + n - 1, n - 1)
        return total


def _minimalize_monomials(gens: frozenset[tuple[int, ...]]) -> frozenset[tuple[int, ...]]:
    out = []
    for g in sorted(gens, key=sum):
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return frozenset(out)


def _monomial_numerator(gens: frozenset[tuple[int, ...]], nvars: int,
                        memo: dict) -> UnivariatePolynomial:
    """Hilbert numerator of R/(monomial ideal), pivot-variable recursion."""
    if not gens:
        return UnivariatePolynomial.one()
    cached = memo.get(gens)
    if cached is not None:
        return cached
    if any(sum(g) == 0 for g in gens):
        return UnivariatePolynomial.zero()
    counts = [0] * nvars
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    best = max(range(nvars), key=lambda i: counts[i])
    if counts[best] <= 1:
        # pairwise coprime supports: product of (1 - t^deg)
        out = UnivariatePolynomial.one()
        for g in gens:
            out = out * (UnivariatePolynomial.one()
                         - UnivariatePolynomial.one().shift(sum(g)))
        memo[gens] = out
        return out
    # 0 -> R/(I:x) (-1) -> R/I -> R/(I + x) -> 0
    plus = _minimalize_monomials(frozenset(
        [tuple(1 if i == best else 0 for i in range(nvars))]
        + [g for g in gens if g[best] == 0]))
    colon = _minimalize_monomials(frozenset(
        tuple(e - 1 if i == best and e > 0 else e for i, e in enumerate(g))
        for g in gens))
    out = _monomial_numerator(plus, nvars, memo) \
        + _monomial_numerator(colon, nvars, memo).shift(1)
    memo[gens] = out
    return out


def hilbert(ideal: Ideal) -> HilbertData:
    """Hilbert data of R/I for homogeneous I (usage error otherwise)."""
    for idx, g in enumerate(ideal.generators):
        if not g.is_homogeneous():
            raise UsageError(f"generator {idx} is not homogeneous: {g}")
    n = ideal.ring.nvars
    gb = ideal.groebner_basis()
    leads = frozenset(g.leading_monomial().exponents for g in gb.elements)
    leads = _minimalize_monomials(leads)
    numerator = _monomial_numerator(leads, n, {})
    if numerator.is_zero():  # unit ideal
        return HilbertData(numerator, -1, 0, UnivariatePolynomial.zero(), n)
    codim = 0
    q = numerator
    while q(1) == 0:
        q = q.divide_one_minus_t()
        codim += 1
    dim = n - codim
    degree = q(1)
    if dim <= 0:
        hp = UnivariatePolynomial.zero()
    else:
        # HF(d) = sum_j q_j * C(d - j + dim - 1, dim - 1), expanded in d
        # HF(d) = sum_j q_j * C(d - j + dim - 1, dim - 1)
        #       = sum_j q_j * prod_{k=1}^{dim-1} (d - j + k) / (dim - 1)!
        hp = UnivariatePolynomial.zero()
        denom = 1
        for k in range(1, dim):
            denom *= k
        for j, c in enumerate(q.coeffs):
            if c == 0:
                continue
            term = UnivariatePolynomial((Fraction(1),))
            for k in range(1, dim):
                term = term * UnivariatePolynomial((Fraction(k - j), Fraction(1)))
            term = UnivariatePolynomial([Fraction(x, denom) * c for x in term.coeffs])
            hp = hp + term
        hp = UnivariatePolynomial([Fraction(x) for x in hp.coeffs])
    return HilbertData(numerator, dim, degree, hp, n)


def resolution_hilbert_numerator(terms) -> UnivariatePolynomial:
    """sum_h (-1)^h rank_h t^{twist_h} for (rank, twist, homological index) triples."""
    out = UnivariatePolynomial.zero()
    for rank, twist, h in terms:
        sign = -1 if h % 2 else 1
        out = out + UnivariatePolynomial((sign * rank,)).shift(twist)
    return out
