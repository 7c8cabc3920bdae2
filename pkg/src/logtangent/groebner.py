"""Buchberger Groebner bases for submodules of graded free modules.

The engine works on flat term lists sorted strictly descending under a
:class:`ModuleOrder`.  The order is graded term-over-position: terms compare
first by twist-shifted degree, then grevlex on the monomial, then by
ascending component index; an optional leading block turns it into an
elimination order, which is how syzygies, colon ideals, intersections and
kernels are all computed below.

Internally every term is a pair ``(key, coeff)`` where the key is the full
order key ``(block, shifted degree, negated-reversed exponents, -component)``.
Keys compare as plain tuples, monomial multiplication is componentwise
addition on the exponent part, and divisibility is a pointwise inequality,
so the hot loops never rebuild tuples per comparison.

Pair handling follows Gebauer-Moeller: the chain criterion prunes the pair
queue on every insertion, and the coprimality criterion is applied in the
rank-one (ideal) case only, where it is valid.  Selection is by S-pair
degree (the honest degree, since all inputs here are homogeneous) with index
tie-breaks, and every returned basis is fully interreduced and monic, hence
canonical for the given order.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .modules import FreeModule, Vector
from .poly import Polynomial


class SaturationLimitError(RuntimeError):
    """Saturation failed to stabilize within the iteration cap."""


class ModuleOrder:
    """Graded TOP order with an optional elimination block of leading components."""

    __slots__ = ("twists", "split")

    def __init__(self, twists: Sequence[int], split: int | None = None):
        self.twists = tuple(twists)
        self.split = len(self.twists) if split is None else split

    def key(self, comp: int, exps: tuple[int, ...]):
        return (
            1 if comp < self.split else 0,
            sum(exps) + self.twists[comp],
            tuple(-e for e in reversed(exps)),
            -comp,
        )


# ---------------------------------------------------------------------------
# encoded-term primitives: term = (key, coeff), key = (block, sdeg, tail, -comp)


def _decode(key) -> tuple[int, tuple[int, ...]]:
    return -key[3], tuple(-t for t in reversed(key[2]))


def _vector_to_terms(v: Vector, order: ModuleOrder):
    terms = []
    for comp, p in enumerate(v.entries):
        for exps, c in p.terms:
            terms.append((order.key(comp, exps), c))
    terms.sort(key=lambda t: t[0], reverse=True)
    return terms


def _terms_to_vector(module: FreeModule, terms) -> Vector:
    buckets: dict[int, list] = {}
    for key, c in terms:
        comp, exps = _decode(key)
        buckets.setdefault(comp, []).append((exps, c))
    entries = tuple(
        module.ring.poly(buckets[i]) if i in buckets else module.ring.zero()
        for i in range(module.rank)
    )
    return Vector(module, entries)


def _shift_terms(terms, du: int, utail: tuple[int, ...], c, field):
    """c * x^u * terms, with u given by its degree and tail; keeps the sort."""
    mul = field.mul
    out = []
    for (block, sdeg, tail, negcomp), coef in terms:
        nt = tuple(a + b for a, b in zip(tail, utail))
        out.append(((block, sdeg + du, nt, negcomp), mul(coef, c)))
    return out


def _merge(a, b, field):
    """Sum of two sorted term lists, dropping cancellations."""
    out = []
    i, j, na, nb = 0, 0, len(a), len(b)
    add = field.add
    while i < na and j < nb:
        ka, va = a[i]
        kb, vb = b[j]
        if ka == kb:
            s = add(va, vb)
            if s:
                out.append((ka, s))
            i += 1
            j += 1
        elif ka > kb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return out


def _tail_divides(lead_tail: tuple[int, ...], tail: tuple[int, ...]) -> bool:
    # tails are negated exponents: divisibility flips the inequality
    for a, b in zip(lead_tail, tail):
        if a < b:
            return False
    return True


def _normal_form_terms(terms, reducers_by_comp, field):
    """Full normal form against monic reducers indexed by leading component."""
    out = []
    cur = list(terms)
    neg = field.neg
    while cur:
        key, c = cur[0]
        hit = None
        for lead_key, body in reducers_by_comp.get(key[3], ()):
            if _tail_divides(lead_key[2], key[2]):
                hit = (lead_key, body)
                break
        if hit is None:
            out.append(cur[0])
            cur = cur[1:]
        else:
            lead_key, body = hit
            du = key[1] - lead_key[1]
            utail = tuple(a - b for a, b in zip(key[2], lead_key[2]))
            cur = _merge(cur, _shift_terms(body, du, utail, neg(c), field), field)
    return out


def _monic_terms(terms, field):
    lc = terms[0][1]
    if lc == field.one:
        return terms
    inv = field.inv(lc)
    mul = field.mul
    return [(k, mul(c, inv)) for k, c in terms]


def _index_by_comp(basis):
    by_comp: dict[int, list] = {}
    for terms in basis:
        key = terms[0][0]
        by_comp.setdefault(key[3], []).append((key, terms))
    return by_comp


# ---------------------------------------------------------------------------
# Buchberger driver with Gebauer-Moeller pair updates


def _lcm_tail(t1: tuple[int, ...], t2: tuple[int, ...]) -> tuple[int, ...]:
    # max of exponents is min of tails
    return tuple(a if a < b else b for a, b in zip(t1, t2))


def _update_pairs(leads, pairs, t, rank1: bool):
    """Add generator index t, pruning pairs per Gebauer-Moeller."""
    key_t = leads[t]
    tail_t = key_t[2]

    kept = set()
    for i, j in pairs:
        ki, kj = leads[i], leads[j]
        if ki[3] != key_t[3]:
            kept.add((i, j))
            continue
        l_ij = _lcm_tail(ki[2], kj[2])
        if (
            not _tail_divides(tail_t, l_ij)
            or l_ij == _lcm_tail(ki[2], tail_t)
            or l_ij == _lcm_tail(kj[2], tail_t)
        ):
            kept.add((i, j))

    lcm_groups: dict[tuple[int, ...], list[int]] = {}
    for i in range(t):
        ki = leads[i]
        if ki[3] == key_t[3]:
            lcm_groups.setdefault(_lcm_tail(ki[2], tail_t), []).append(i)

    minimal: list[tuple[int, ...]] = []
    for lcm in sorted(lcm_groups, key=lambda tl: (-sum(tl), tl)):
        if not any(_tail_divides(prev, lcm) for prev in minimal):
            minimal.append(lcm)

    for lcm in minimal:
        members = lcm_groups[lcm]
        if rank1 and any(
            all(a == 0 or b == 0 for a, b in zip(leads[i][2], tail_t))
            for i in members
        ):
            continue
        kept.add((min(members), t))
    return kept


def _spair_terms(gi, gj, field):
    ki, kj = gi[0][0], gj[0][0]
    lcm = _lcm_tail(ki[2], kj[2])
    ui = tuple(a - b for a, b in zip(lcm, ki[2]))
    uj = tuple(a - b for a, b in zip(lcm, kj[2]))
    a = _shift_terms(gi, -sum(ui), ui, field.one, field)
    b = _shift_terms(gj, -sum(uj), uj, field.neg(field.one), field)
    return _merge(a, b, field)


def _pair_degree(leads, pair):
    ki = leads[pair[0]]
    kj = leads[pair[1]]
    lcm = _lcm_tail(ki[2], kj[2])
    return ki[1] + (sum(ki[2]) - sum(lcm))


def _buchberger_terms(inputs, field, rank1: bool):
    G: list = []
    leads: list = []
    pairs: set = set()

    for terms in inputs:
        if not terms:
            continue
        t = len(G)
        G.append(_monic_terms(terms, field))
        leads.append(G[-1][0][0])
        pairs = _update_pairs(leads, pairs, t, rank1)

    while pairs:
        pair = min(pairs, key=lambda p: (_pair_degree(leads, p), p[0], p[1]))
        pairs.discard(pair)
        s = _spair_terms(G[pair[0]], G[pair[1]], field)
        r = _normal_form_terms(s, _index_by_comp(G), field)
        if r:
            t = len(G)
            G.append(_monic_terms(r, field))
            leads.append(G[-1][0][0])
            pairs = _update_pairs(leads, pairs, t, rank1)

    return _interreduce_terms(G, field)


def _interreduce_terms(G, field):
    """Canonical reduced basis: minimal leads, tails fully reduced, monic."""
    ordered = sorted(G, key=lambda terms: terms[0][0])
    minimal = []
    for terms in ordered:
        key = terms[0][0]
        dominated = False
        for kept in minimal:
            kkey = kept[0][0]
            if kkey[3] == key[3] and _tail_divides(kkey[2], key[2]):
                dominated = True
                break
        if not dominated:
            minimal.append(terms)
    reduced = []
    for idx, terms in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        r = _normal_form_terms(terms, _index_by_comp(others), field)
        assert r, "member of a minimal basis reduced to zero"
        reduced.append(_monic_terms(r, field))
    reduced.sort(key=lambda terms: terms[0][0])
    return reduced


# ---------------------------------------------------------------------------
# public module-level API


def default_order(module: FreeModule) -> ModuleOrder:
    return ModuleOrder(module.twists)


def leading_position(v: Vector, order: ModuleOrder) -> tuple[int, tuple[int, ...]]:
    """(component, exponents) of the leading term of v under the order."""
    terms = _vector_to_terms(v, order)
    if not terms:
        raise ValueError("zero vector has no leading term")
    return _decode(terms[0][0])


def groebner_basis(gens: Sequence[Vector], order: ModuleOrder | None = None) -> list[Vector]:
    """Reduced monic Groebner basis of the submodule generated by gens."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    module = gens[0].module
    for g in gens:
        if g.module != module:
            raise ValueError("generators live in different modules")
        if not g.is_homogeneous():
            raise ValueError("generators must be homogeneous")
    if order is None:
        order = default_order(module)
    field = module.ring.field
    inputs = [_vector_to_terms(g, order) for g in gens]
    basis = _buchberger_terms(inputs, field, rank1=(module.rank == 1))
    return [_terms_to_vector(module, terms) for terms in basis]


def normal_form(v: Vector, basis: Sequence[Vector], order: ModuleOrder | None = None) -> Vector:
    """Normal form of v against a Groebner basis of its parent module."""
    if basis:
        if basis[0].module != v.module:
            raise ValueError("vector and basis live in different modules")
    if order is None:
        order = default_order(v.module)
    field = v.module.ring.field
    by_comp = _index_by_comp(
        [_vector_to_terms(g, order) for g in basis if not g.is_zero()]
    )
    r = _normal_form_terms(_vector_to_terms(v, order), by_comp, field)
    return _terms_to_vector(v.module, r)


def spoly_reduces_to_zero(basis: Sequence[Vector], order: ModuleOrder | None = None) -> bool:
    """Check the Groebner property directly: all S-pairs reduce to zero."""
    if not basis:
        return True
    module = basis[0].module
    if order is None:
        order = default_order(module)
    field = module.ring.field
    terms = [_vector_to_terms(g, order) for g in basis]
    by_comp = _index_by_comp(terms)
    for a, b in combinations(terms, 2):
        if a[0][0][3] != b[0][0][3]:
            continue
        s = _spair_terms(a, b, field)
        if _normal_form_terms(s, by_comp, field):
            return False
    return True


class Submodule:
    """Generators of a graded submodule with a cached reduced Groebner basis."""

    def __init__(self, module: FreeModule, gens: Sequence[Vector]):
        self.module = module
        self.gens = tuple(g for g in gens if not g.is_zero())
        self._gb: list[Vector] | None = None

    def groebner(self) -> list[Vector]:
        if self._gb is None:
            self._gb = groebner_basis(self.gens)
        return self._gb

    def contains(self, v: Vector) -> bool:
        return normal_form(v, self.groebner()).is_zero()

    def __eq__(self, other):
        if not isinstance(other, Submodule) or other.module != self.module:
            return NotImplemented
        return self.groebner() == other.groebner()

    def __repr__(self):
        return f"Submodule({len(self.gens)} gens of {self.module!r})"


# ---------------------------------------------------------------------------
# syzygies, kernels and the image/syzygy combo


def module_gb_and_syzygies(
    gens: Sequence[Vector], degrees: Sequence[int] | None = None
):
    """One elimination Groebner run giving both the image basis and syzygies.

    Returns ``(image_gb, syzygy_module, syzygy_gens)`` where the syzygy module
    is free on the input generators with twists equal to their degrees, so all
    syzygies are homogeneous.  Zero input generators are allowed when explicit
    degrees are supplied.
    """
    if not gens:
        raise ValueError("no generators")
    target = gens[0].module
    ring = target.ring
    k = target.rank
    r = len(gens)
    if degrees is None:
        degrees = []
        for g in gens:
            if g.is_zero():
                raise ValueError("zero generator needs an explicit degree")
            degrees.append(g.degree)
    degrees = list(degrees)
    if len(degrees) != r:
        raise ValueError("degree list does not match generators")
    for g, d in zip(gens, degrees):
        if not g.is_zero() and g.degree != d:
            raise ValueError("inhomogeneous matrix: column degree mismatch")

    aug = FreeModule(ring, tuple(target.twists) + tuple(degrees))
    order = ModuleOrder(aug.twists, split=k)
    field = ring.field

    inputs = []
    for i, g in enumerate(gens):
        terms = []
        for comp, p in enumerate(g.entries):
            for exps, c in p.terms:
                terms.append((order.key(comp, exps), c))
        terms.append((order.key(k + i, ring._zero_exps), field.one))
        terms.sort(key=lambda t: t[0], reverse=True)
        inputs.append(terms)

    basis = _buchberger_terms(inputs, field, rank1=False)

    image_gb = []
    syz_module = FreeModule(ring, degrees)
    syz_gens = []
    for terms in basis:
        comp = -terms[0][0][3]
        if comp < k:
            image = [t for t in terms if -t[0][3] < k]
            image_gb.append(_terms_to_vector(target, image))
        else:
            syz_order = ModuleOrder(syz_module.twists)
            shifted = []
            for key, c in terms:
                scomp, exps = _decode(key)
                shifted.append((syz_order.key(scomp - k, exps), c))
            syz_gens.append(_terms_to_vector(syz_module, shifted))
    return image_gb, syz_module, syz_gens


def syzygy_basis(
    gens: Sequence[Vector], degrees: Sequence[int] | None = None
) -> tuple[FreeModule, list[Vector]]:
    """Generators of the syzygy module of the given homogeneous elements."""
    _, syz_module, syz_gens = module_gb_and_syzygies(gens, degrees)
    return syz_module, syz_gens


def kernel_of_map(columns: Sequence[Vector], source: FreeModule) -> list[Vector]:
    """Kernel of the graded map source -> target with the given columns."""
    if len(columns) != source.rank:
        raise ValueError("column count does not match source rank")
    if source.rank == 0:
        return []
    target = columns[0].module
    if target.rank == 0 or all(c.is_zero() for c in columns):
        return [source.basis_vector(i) for i in range(source.rank)]
    syz_module, syz = syzygy_basis(columns, degrees=source.twists)
    assert syz_module.twists == source.twists
    return [Vector(source, v.entries) for v in syz]


# ---------------------------------------------------------------------------
# ideal arithmetic (rank-one convenience layer)


def _ideal_module(ring) -> FreeModule:
    return FreeModule(ring, (0,))


def _as_vectors(ring, polys: Sequence[Polynomial]) -> list[Vector]:
    module = _ideal_module(ring)
    return [Vector(module, (p,)) for p in polys if not p.is_zero()]


def ideal_groebner(ring, polys: Sequence[Polynomial]) -> list[Polynomial]:
    gb = groebner_basis(_as_vectors(ring, polys))
    return [v.entries[0] for v in gb]


def ideal_normal_form(ring, p: Polynomial, gb: Sequence[Polynomial]) -> Polynomial:
    module = _ideal_module(ring)
    v = normal_form(Vector(module, (p,)), _as_vectors(ring, gb))
    return v.entries[0]


def ideal_contains(ring, gb: Sequence[Polynomial], p: Polynomial) -> bool:
    return ideal_normal_form(ring, p, gb).is_zero()


def ideal_equals(ring, a: Sequence[Polynomial], b: Sequence[Polynomial]) -> bool:
    """Equality of ideals via their canonical reduced Groebner bases."""
    return ideal_groebner(ring, a) == ideal_groebner(ring, b)


def module_colon(mod_gens: Sequence[Vector], target: Vector) -> list[Polynomial]:
    """The ideal {r in R : r * target lies in the submodule spanned by mod_gens}."""
    if target.is_zero():
        raise ValueError("colon by the zero element")
    degrees = [target.degree] + [g.degree for g in mod_gens]
    _, syz = syzygy_basis([target] + list(mod_gens), degrees=degrees)
    out = []
    for s in syz:
        p = s.entries[0]
        if not p.is_zero():
            out.append(p)
    return out


def ideal_colon(ring, gens: Sequence[Polynomial], h: Polynomial) -> list[Polynomial]:
    """Ideal quotient (gens) : h."""
    if h.is_zero():
        raise ValueError("colon by zero")
    module = _ideal_module(ring)
    return module_colon(_as_vectors(ring, gens), Vector(module, (h,)))


def ideal_intersection(
    ring, a: Sequence[Polynomial], b: Sequence[Polynomial]
) -> list[Polynomial]:
    """Intersection of two homogeneous ideals via one syzygy computation."""
    a = [p for p in a if not p.is_zero()]
    b = [p for p in b if not p.is_zero()]
    if not a or not b:
        return []
    vecs = _as_vectors(ring, a) + _as_vectors(ring, b)
    _, syz = syzygy_basis(vecs)
    out = []
    for s in syz:
        p = ring.zero()
        for c, gen in zip(s.entries[: len(a)], a):
            if not c.is_zero():
                p = p + c * gen
        if not p.is_zero():
            out.append(p)
    return out


def saturate_ideal(
    ring, gens: Sequence[Polynomial], max_rounds: int = 64
) -> list[Polynomial]:
    """Saturation with respect to the irrelevant ideal (all variables).

    Iterates I -> (I : (x0,...,x_{n-1})) until it stabilizes; the result is
    returned as a reduced Groebner basis.  A hard cap guards against bugs
    (the loop is bounded by regularity for honest inputs).
    """
    current = ideal_groebner(ring, gens)
    if not current:
        return []
    for _ in range(max_rounds):
        quotient: list[Polynomial] | None = None
        for i in range(ring.nvars):
            step = ideal_colon(ring, current, ring.variable(i))
            quotient = (
                step
                if quotient is None
                else ideal_intersection(ring, quotient, step)
            )
        if all(ideal_contains(ring, current, p) for p in quotient):
            return current
        current = ideal_groebner(ring, quotient)
    raise SaturationLimitError(f"saturation did not stabilize in {max_rounds} rounds")


def minor(matrix: Sequence[Sequence[Polynomial]], rows, cols) -> Polynomial:
    """Determinant of the square submatrix on the given row/column indices."""
    if len(rows) != len(cols):
        raise ValueError("minor needs a square submatrix")
    if len(rows) == 1:
        return matrix[rows[0]][cols[0]]
    out = None
    for pos, r in enumerate(rows):
        sub = minor(matrix, rows[:pos] + rows[pos + 1 :], cols[1:])
        term = matrix[r][cols[0]] * sub
        if pos % 2 == 1:
            term = -term
        out = term if out is None else out + term
    return out


def fitting_ideal_0(matrix: Sequence[Sequence[Polynomial]]) -> list[Polynomial]:
    """Ideal of maximal minors of a k x m polynomial matrix with k <= m."""
    k = len(matrix)
    m = len(matrix[0]) if k else 0
    if k > m:
        raise ValueError("matrix has more rows than columns")
    rows = tuple(range(k))
    out = []
    for cols in combinations(range(m), k):
        d = minor(matrix, rows, cols)
        if not d.is_zero():
            out.append(d)
    return out


def annihilator_of_cokernel(
    target: FreeModule, columns: Sequence[Vector]
) -> list[Polynomial]:
    """Annihilator ideal of coker(columns) as intersection of colon ideals."""
    ring = target.ring
    mod_gens = [c for c in columns if not c.is_zero()]
    result: list[Polynomial] | None = None
    for i in range(target.rank):
        colon = module_colon(mod_gens, target.basis_vector(i))
        result = colon if result is None else ideal_intersection(ring, result, colon)
    return result if result is not None else []
