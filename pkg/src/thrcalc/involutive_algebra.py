"""Commutative rings with involution, affine monoids, and exact
weight-fiber enumeration.

Rings are finitely generated abelian groups ([`fgab.FgAbGroup`]) equipped
with a commutative multiplication table on generators, a unit vector and an
additive involution.  Every axiom (well-definedness over the additive
relations, commutativity, associativity, unit neutrality, the involution
being a ring map of order two) is checked at construction time and
violations raise :class:`~thrcalc.errors.SpecError` naming the axiom.

Affine monoids are finitely generated submonoids of ``Z^n`` carrying an
involution given by an integer matrix of order two.  Fibers of a monoid
homomorphism ``M -> Z^m`` are enumerated exactly: the unit sublattice is
split off, a strictly positive rational functional on the remaining
generators is found by Fourier-Motzkin elimination, and the resulting
bound makes the search finite.  When no such functional exists the fiber
is provably infinite and :class:`~thrcalc.errors.InfeasibleError` is raised
instead of silently truncating.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InfeasibleError, SpecError
from .fgab import (
    FgAbGroup,
    GroupHom,
    Mat,
    group,
    hom,
    row_kernel,
    solve_left,
    vstack,
)

# ---------------------------------------------------------------------------
# rings with involution
# ---------------------------------------------------------------------------


class InvolutiveRing:
    """A commutative ring on a finitely generated abelian group, with an
    additive involution that is a ring homomorphism of order two.

    Attributes:
        add: the underlying additive group.
        table: ``table[i][j]`` is the coefficient vector of ``g_i * g_j``.
        one: coefficient vector of the multiplicative unit.
        w: the involution, as a group endomorphism of ``add``.
        names: printable generator names (defaulting to ``g0, g1, ...``).
    """

    __slots__ = ("add", "table", "one", "w", "names")

    def __init__(self, add, table, one, w, names):
        self.add = add
        self.table = table
        self.one = one
        self.w = w
        self.names = names

    @property
    def n_gens(self):
        return self.add.n_gens

    def mul(self, x, y):
        """Product of two elements given as coefficient vectors."""
        n = self.add.n_gens
        acc = [0] * n
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                tij = self.table[i][j]
                for k in range(n):
                    acc[k] += xi * yj * tij[k]
        return self.add.reduce(tuple(acc))

    def square(self, x):
        return self.mul(x, x)

    def apply_w(self, x):
        return self.w.apply(x)

    def multiplication_by(self, a):
        """Multiplication by the fixed element ``a`` as an additive
        endomorphism of the underlying group."""
        n = self.add.n_gens
        rows = [self.mul(a, _unit_vec(n, i)) for i in range(n)]
        return hom(self.add, self.add, rows)

    def elements(self):
        return self.add.elements()

    def is_finite(self):
        return self.add.is_finite()

    def has_trivial_involution(self):
        n = self.add.n_gens
        return all(
            self.add.same_element(self.w.apply(_unit_vec(n, i)), _unit_vec(n, i))
            for i in range(n)
        )

    def __repr__(self):
        return f"InvolutiveRing(add={self.add!r}, gens={list(self.names)})"


def _unit_vec(n, i):
    return tuple(1 if k == i else 0 for k in range(n))


def make_ring(add, table, one, w_matrix, names=None, where="ring"):
    """Build an :class:`InvolutiveRing`, checking every axiom.

    Args:
        add: additive group.
        table: ``n x n`` array of coefficient vectors for generator products.
        one: coefficient vector of the unit.
        w_matrix: integer matrix of the involution (row ``i`` = image of
            generator ``i``), or None for the identity.
        names: optional generator names.
        where: label used in error messages.

    Raises:
        SpecError: naming the violated axiom.
    """
    n = add.n_gens
    if names is None:
        names = tuple(f"g{i}" for i in range(n))
    names = tuple(names)
    if len(names) != n:
        raise SpecError(f"{where}: {len(names)} generator names for {n} generators")

    table = tuple(tuple(add.reduce(tuple(v)) for v in row) for row in table)
    if len(table) != n or any(len(row) != n for row in table):
        raise SpecError(f"{where}: multiplication table is not {n} x {n}")
    one = add.reduce(tuple(one))

    for i in range(n):
        for j in range(i + 1, n):
            if table[i][j] != table[j][i]:
                raise SpecError(
                    f"{where}: multiplication is not commutative at "
                    f"({names[i]}, {names[j]})"
                )

    # The table defines a map on the free group; it descends to `add` iff
    # every additive relation multiplies to zero against every generator.
    for rel in _relation_rows(add):
        for j in range(n):
            acc = [0] * n
            for i, ri in enumerate(rel):
                if ri == 0:
                    continue
                for k in range(n):
                    acc[k] += ri * table[i][j][k]
            if not add.is_zero(tuple(acc)):
                raise SpecError(
                    f"{where}: multiplication table does not respect the "
                    f"additive relation {rel} against generator {names[j]}"
                )

    ring = InvolutiveRing(add, table, one, None, names)

    for i in range(n):
        e = _unit_vec(n, i)
        if not add.same_element(ring.mul(one, e), e):
            raise SpecError(f"{where}: unit is not neutral on generator {names[i]}")

    for i in range(n):
        for j in range(n):
            for k in range(n):
                left = ring.mul(table[i][j], _unit_vec(n, k))
                right = ring.mul(_unit_vec(n, i), table[j][k])
                if not add.same_element(left, right):
                    raise SpecError(
                        f"{where}: multiplication is not associative at "
                        f"({names[i]}, {names[j]}, {names[k]})"
                    )

    if w_matrix is None:
        w_matrix = Mat.identity(n)
    elif not isinstance(w_matrix, Mat):
        w_matrix = Mat([tuple(r) for r in w_matrix], cols=n)
    try:
        w = hom(add, add, [w_matrix.row(i) for i in range(n)])
    except ValueError as exc:
        raise SpecError(f"{where}: involution is not additively well defined: {exc}")
    for i in range(n):
        e = _unit_vec(n, i)
        if not add.same_element(w.apply(w.apply(e)), e):
            raise SpecError(
                f"{where}: involution does not square to the identity on {names[i]}"
            )
    if not add.same_element(w.apply(one), one):
        raise SpecError(f"{where}: involution does not fix the unit")
    for i in range(n):
        for j in range(n):
            lhs = w.apply(table[i][j])
            rhs = ring.mul(w.apply(_unit_vec(n, i)), w.apply(_unit_vec(n, j)))
            if not add.same_element(lhs, rhs):
                raise SpecError(
                    f"{where}: involution is not multiplicative at "
                    f"({names[i]}, {names[j]})"
                )

    return InvolutiveRing(add, table, one, w, names)


def _relation_rows(g):
    return [g.relations.row(i) for i in range(g.relations.rows)]


@dataclass(frozen=True)
class RingHom:
    """A checked homomorphism of rings with involution."""

    source: InvolutiveRing
    target: InvolutiveRing
    add_hom: GroupHom

    def apply(self, x):
        return self.add_hom.apply(x)


def ring_hom(source, target, rows, where="ring map"):
    """Build a :class:`RingHom` from generator images, checking that it is
    additive, unital, multiplicative and involution-equivariant."""
    try:
        f = hom(source.add, target.add, rows)
    except ValueError as exc:
        raise SpecError(f"{where}: not additively well defined: {exc}")
    if not target.add.same_element(f.apply(source.one), target.one):
        raise SpecError(f"{where}: does not send the unit to the unit")
    n = source.n_gens
    for i in range(n):
        for j in range(n):
            lhs = f.apply(source.table[i][j])
            rhs = target.mul(f.apply(_unit_vec(n, i)), f.apply(_unit_vec(n, j)))
            if not target.add.same_element(lhs, rhs):
                raise SpecError(
                    f"{where}: not multiplicative at generators ({i}, {j})"
                )
    for i in range(n):
        e = _unit_vec(n, i)
        lhs = f.apply(source.w.apply(e))
        rhs = target.w.apply(f.apply(e))
        if not target.add.same_element(lhs, rhs):
            raise SpecError(
                f"{where}: does not commute with the involutions at generator {i}"
            )
    return RingHom(source, target, f)


# ---------------------------------------------------------------------------
# ring catalog
# ---------------------------------------------------------------------------


def ring_Z():
    """The integers with trivial involution."""
    add = group(1, [])
    return make_ring(add, [[(1,)]], (1,), None, names=("one",))


def ring_Zmod(n):
    """``Z/n`` with trivial involution."""
    if n <= 0:
        raise SpecError(f"ring_Zmod: modulus must be positive, got {n}")
    add = group(1, [[n]])
    return make_ring(add, [[(1,)]], (1,), None, names=("one",))


def ring_F2():
    return ring_Zmod(2)


def ring_dual_numbers_F2():
    """``F_2[t] / t^2`` with trivial involution, generators ``one, t``."""
    add = group(2, [[2, 0], [0, 2]])
    table = [[(1, 0), (0, 1)], [(0, 1), (0, 0)]]
    return make_ring(add, table, (1, 0), None, names=("one", "t"))


def ring_F4():
    """The field with four elements, generators ``one, x`` with
    ``x**2 = one + x``, trivial involution."""
    add = group(2, [[2, 0], [0, 2]])
    table = [[(1, 0), (0, 1)], [(0, 1), (1, 1)]]
    return make_ring(add, table, (1, 0), None, names=("one", "x"))


def ring_gaussian_integers():
    """``Z[i]`` with complex conjugation as the involution."""
    add = group(2, [])
    table = [[(1, 0), (0, 1)], [(0, 1), (-1, 0)]]
    return make_ring(add, table, (1, 0), [[1, 0], [0, -1]], names=("one", "i"))


def mod2(ring, where="mod2"):
    """Reduction of a ring modulo 2, with the induced table and involution."""
    n = ring.add.n_gens
    rels = vstack(ring.add.relations, Mat.identity(n).scale(2))
    add2 = group(n, [rels.row(i) for i in range(rels.rows)])
    return make_ring(
        add2,
        ring.table,
        ring.one,
        ring.w.matrix,
        names=ring.names,
        where=where,
    )


def frobenius(ring2):
    """The additive endomorphism ``x -> x**2`` of a ring in which ``2 = 0``.

    Squaring is additive there because cross terms carry a factor of two;
    on a generator expansion it is given by squaring each generator, which
    is the matrix returned here.  On small rings the matrix is additionally
    verified against elementwise squaring.
    """
    n = ring2.add.n_gens
    for i in range(n):
        doubled = tuple(2 * c for c in _unit_vec(n, i))
        if not ring2.add.is_zero(doubled):
            raise SpecError("frobenius: ring does not satisfy 2 = 0")
    rows = [ring2.table[i][i] for i in range(n)]
    phi = hom(ring2.add, ring2.add, rows)
    if ring2.is_finite() and ring2.add.order() <= 256:
        for x in ring2.elements():
            if not ring2.add.same_element(phi.apply(x), ring2.square(x)):
                raise SpecError(
                    f"frobenius: matrix disagrees with squaring at {x}"
                )
    return phi


def is_surjective_on_finite(f):
    """Whether a group homomorphism between finite groups is surjective."""
    hit = {f.target.reduce(f.apply(x)) for x in f.source.elements()}
    return len(hit) == f.target.order()


# ---------------------------------------------------------------------------
# affine monoids
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MonoidElement:
    """An element of an affine monoid together with a membership
    certificate: nonnegative generator multiplicities that re-evaluate to
    the vector (checked at construction)."""

    vector: tuple
    certificate: tuple

    def __post_init__(self):
        if any(c < 0 for c in self.certificate):
            raise SpecError(
                f"monoid element {self.vector}: negative certificate entry"
            )


class AffineMonoid:
    """A finitely generated submonoid of ``Z^rank`` with an involution.

    The involution is an integer matrix ``w`` with ``w @ w = I`` that maps
    the monoid into itself; both facts are certified at construction (the
    latter by exhibiting a membership certificate for the image of every
    generator).
    """

    __slots__ = ("rank", "generators", "w", "_weight_cache")

    def __init__(self, generators, w=None, rank=None):
        generators = tuple(tuple(g) for g in generators)
        if rank is None:
            if not generators:
                raise SpecError("affine monoid: rank required when no generators")
            rank = len(generators[0])
        for g in generators:
            if len(g) != rank:
                raise SpecError(
                    f"affine monoid: generator {g} does not have rank {rank}"
                )
            if all(c == 0 for c in g):
                raise SpecError("affine monoid: zero generator is redundant")
        if w is None:
            w = Mat.identity(rank)
        elif not isinstance(w, Mat):
            w = Mat([tuple(r) for r in w], cols=rank)
        if w.rows != rank or w.cols != rank:
            raise SpecError(f"affine monoid: involution matrix is not {rank} x {rank}")
        if w @ w != Mat.identity(rank):
            raise SpecError("affine monoid: involution does not square to the identity")
        self.rank = rank
        self.generators = generators
        self.w = w
        self._weight_cache = {}
        for g in generators:
            img = self.apply_w(g)
            if self.contains(img) is None:
                raise SpecError(
                    f"affine monoid: involution image {img} of generator {g} "
                    f"is not in the monoid"
                )

    def apply_w(self, v):
        return (Mat.row_vector(v) @ self.w).row(0)

    def contains(self, v):
        """A membership certificate for ``v``, or None."""
        v = tuple(v)
        if len(v) != self.rank:
            raise SpecError(f"membership: vector {v} does not have rank {self.rank}")
        found = _enumerate_fiber(
            self.generators, Mat.identity(self.rank), v, limit=1
        )
        if not found:
            return None
        return found[0][1]

    def element(self, v):
        """The vector ``v`` as a certified :class:`MonoidElement`."""
        cert = self.contains(v)
        if cert is None:
            raise SpecError(f"membership: {tuple(v)} is not in the monoid")
        return MonoidElement(tuple(v), cert)

    def __repr__(self):
        return (
            f"AffineMonoid(rank={self.rank}, "
            f"generators={[list(g) for g in self.generators]})"
        )


# ---------------------------------------------------------------------------
# exact fiber enumeration
# ---------------------------------------------------------------------------


def _rational_null_space(rows, n):
    """Basis of ``{x in Q^n : r . x = 0 for all r in rows}``."""
    mat = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    basis = []
    free = [c for c in range(n) if c not in pivots]
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            vec[pc] = -mat[ri][fc]
        basis.append(tuple(vec))
    return basis


def _fourier_motzkin(ineqs, nvars):
    """A rational solution of ``a . x + c >= 0`` constraints, or None.

    Each constraint is a list of ``nvars`` coefficients followed by the
    constant ``c``.  Elimination is exact over Fractions.
    """
    ineqs = [[Fraction(v) for v in iq] for iq in ineqs]
    if nvars == 0:
        return [] if all(iq[-1] >= 0 for iq in ineqs) else None
    k = nvars - 1
    pos = [iq for iq in ineqs if iq[k] > 0]
    neg = [iq for iq in ineqs if iq[k] < 0]
    rest = [iq[:k] + iq[-1:] for iq in ineqs if iq[k] == 0]
    for p in pos:
        for q in neg:
            comb = [
                (-q[k]) * p[j] + p[k] * q[j]
                for j in list(range(k)) + [nvars]
            ]
            rest.append(comb)
    partial = _fourier_motzkin(rest, k)
    if partial is None:
        return None
    lo, hi = None, None
    for p in pos:
        val = p[-1] + sum(p[j] * partial[j] for j in range(k))
        bound = -val / p[k]
        lo = bound if lo is None else max(lo, bound)
    for q in neg:
        val = q[-1] + sum(q[j] * partial[j] for j in range(k))
        bound = val / (-q[k])
        hi = bound if hi is None else min(hi, bound)
    if lo is None and hi is None:
        x = Fraction(0)
    elif lo is None:
        x = min(hi, Fraction(0))
    elif hi is None:
        x = max(lo, Fraction(0))
    else:
        x = lo
    return partial + [x]


def _weight_data(gens, weight):
    """Split generators into unit pairs and the pointed remainder, and find
    a positive rational functional certifying finite fibers.

    Returns ``(unit_idx, partner, point_idx, lam)`` where ``lam`` is a
    tuple of Fractions on the weight target with ``lam . (g W) >= 1`` for
    every pointed generator and ``lam`` vanishing on the weight images of
    the units.

    Raises:
        InfeasibleError: if some nonzero unit combination has weight zero
            (the fiber is infinite) or no functional exists.
    """
    m = weight.cols
    unit_idx = []
    partner = {}
    neg_gens = {tuple(-c for c in g): i for i, g in enumerate(gens)}
    for i, g in enumerate(gens):
        j = neg_gens.get(tuple(g))
        if j is not None:
            unit_idx.append(i)
            partner[i] = j
    point_idx = [i for i in range(len(gens)) if i not in partner]

    unit_rows = [gens[i] for i in unit_idx]
    bw = Mat([(Mat.row_vector(g) @ weight).row(0) for g in unit_rows], cols=m)
    bw_kernel = row_kernel(bw)
    for crow in range(bw_kernel.rows):
        c = bw_kernel.row(crow)
        u = [0] * len(gens[0])
        for ci, gi in zip(c, unit_rows):
            for t in range(len(u)):
                u[t] += ci * gi[t]
        if any(u):
            raise InfeasibleError(
                "weight fiber is infinite: a nonzero unit combination "
                f"{tuple(u)} has weight zero"
            )

    images = [(Mat.row_vector(gens[i]) @ weight).row(0) for i in point_idx]
    kill = [bw.row(i) for i in range(bw.rows)]
    basis = _rational_null_space(kill, m)
    ineqs = []
    for y in images:
        coeffs = [sum(Fraction(bv) * yv for bv, yv in zip(b, y)) for b in basis]
        ineqs.append(coeffs + [Fraction(-1)])
    mu = _fourier_motzkin(ineqs, len(basis))
    if mu is None:
        raise InfeasibleError(
            "weight fiber is infinite: no functional separates the pointed "
            "generators from zero"
        )
    lam = tuple(
        sum(mu[k] * basis[k][t] for k in range(len(basis))) if basis else Fraction(0)
        for t in range(m)
    )
    return unit_idx, partner, point_idx, lam


def _enumerate_fiber(gens, weight, v, limit=None):
    """All monoid elements of a given weight, as ``(vector, certificate)``
    pairs, deduplicated and sorted lexicographically by vector.

    ``gens`` are ambient integer vectors, ``weight`` an integer matrix
    mapping the ambient lattice to ``Z^m``, ``v`` the target weight.
    ``limit`` stops the search early once that many distinct vectors are
    found (used for membership tests).
    """
    v = tuple(v)
    rank = len(gens[0]) if gens else weight.rows
    m = weight.cols
    if weight.rows != rank or len(v) != m:
        raise SpecError(
            f"weight map shape {weight.rows} x {weight.cols} does not match "
            f"ambient rank {rank} and target {v}"
        )
    if not gens:
        return [(tuple([0] * rank), ())] if not any(v) else []

    unit_idx, partner, point_idx, lam = _weight_data(gens, weight)
    unit_rows = [gens[i] for i in unit_idx]
    bw = Mat([(Mat.row_vector(g) @ weight).row(0) for g in unit_rows], cols=m)
    images = {i: (Mat.row_vector(gens[i]) @ weight).row(0) for i in point_idx}
    costs = {
        i: sum(lam[t] * images[i][t] for t in range(m)) for i in point_idx
    }
    budget = sum(lam[t] * v[t] for t in range(m))

    found = {}

    def settle(current, counts):
        """Solve the residual weight in the unit lattice; record a hit."""
        cur_w = (Mat.row_vector(current) @ weight).row(0)
        z = tuple(a - b for a, b in zip(v, cur_w))
        if unit_rows:
            coeffs = solve_left(bw, z)
            if coeffs is None:
                return
        else:
            if any(z):
                return
            coeffs = ()
        x = list(current)
        cert = list(counts)
        for ci, gi_idx in zip(coeffs, unit_idx):
            g = gens[gi_idx]
            for t in range(rank):
                x[t] += ci * g[t]
            if ci >= 0:
                cert[gi_idx] += ci
            else:
                cert[partner[gi_idx]] += -ci
        x = tuple(x)
        if x not in found:
            found[x] = tuple(cert)

    def rec(pos, remaining, current, counts):
        if limit is not None and len(found) >= limit:
            return
        if pos == len(point_idx):
            settle(current, counts)
            return
        i = point_idx[pos]
        cost = costs[i]
        cmax = int(remaining / cost)
        g = gens[i]
        for c in range(cmax + 1):
            if limit is not None and len(found) >= limit:
                return
            counts[i] = c
            rec(
                pos + 1,
                remaining - c * cost,
                tuple(cu + c * gv for cu, gv in zip(current, g)),
                counts,
            )
        counts[i] = 0

    if budget >= 0 or not point_idx:
        rec(0, budget if budget >= 0 else Fraction(0), tuple([0] * rank), [0] * len(gens))
    return sorted(found.items())


def elements_of_weight(monoid, weight, v):
    """The exact, finite fiber of a weight map over ``v``.

    Args:
        monoid: an :class:`AffineMonoid`.
        weight: integer matrix ``rank x m`` (rows = images of the ambient
            basis), or None for the identity map.
        v: target vector in ``Z^m``.

    Returns:
        Sorted list of :class:`MonoidElement` with membership certificates.

    Raises:
        InfeasibleError: if the fiber is infinite.
    """
    if weight is None:
        weight = Mat.identity(monoid.rank)
    elif not isinstance(weight, Mat):
        weight = Mat([tuple(r) for r in weight], cols=len(tuple(v)))
    pairs = _enumerate_fiber(monoid.generators, weight, v)
    return [MonoidElement(x, cert) for x, cert in pairs]


def weight_tuples(monoid, weight, v, length):
    """All ``length``-tuples of monoid elements whose weights sum to ``v``.

    This is the fiber enumeration for the product monoid ``M^length`` with
    the summed weight map; it returns plain tuples of vectors, sorted.
    """
    if length == 0:
        return [()] if not any(tuple(v)) else []
    if weight is None:
        weight = Mat.identity(monoid.rank)
    elif not isinstance(weight, Mat):
        weight = Mat([tuple(r) for r in weight], cols=len(tuple(v)))
    rank = monoid.rank
    gens = []
    for slot in range(length):
        for g in monoid.generators:
            amb = [0] * (rank * length)
            amb[slot * rank : (slot + 1) * rank] = list(g)
            gens.append(tuple(amb))
    big_weight = Mat(
        [weight.row(r) for _ in range(length) for r in range(weight.rows)],
        cols=weight.cols,
    )
    pairs = _enumerate_fiber(gens, big_weight, v)
    out = []
    for x, _cert in pairs:
        out.append(tuple(x[s * rank : (s + 1) * rank] for s in range(length)))
    return sorted(out)


def pointedness_functional(monoid, weight=None):
    """The rational functional certifying finite weight fibers, or a raise.

    For a monoid without units this gives the bound ``sum of certificate
    multiplicities <= floor(lam . weight(v))`` used to certify truncations.
    """
    if weight is None:
        weight = Mat.identity(monoid.rank)
    elif not isinstance(weight, Mat):
        weight = Mat([tuple(r) for r in weight])
    _, _, _, lam = _weight_data(monoid.generators, weight)
    return lam


def elements_in_ball(monoid, bound):
    """All monoid elements of l1-norm at most ``bound``, sorted."""
    if bound < 0:
        return []
    rank = monoid.rank
    out = []

    def boxes(prefix, remaining):
        if len(prefix) == rank:
            yield tuple(prefix)
            return
        for c in range(-remaining, remaining + 1):
            yield from boxes(prefix + [c], remaining - abs(c))

    for v in boxes([], bound):
        cert = monoid.contains(v)
        if cert is not None:
            out.append(MonoidElement(v, cert))
    out.sort(key=lambda e: e.vector)
    return out


def sigma_orbits(monoid, bound):
    """Involution orbits on the monoid elements of l1-norm at most ``bound``.

    Returns a sorted list of orbits; each orbit is a sorted tuple of one or
    two vectors (fixed points are singletons).
    """
    elements = [e.vector for e in elements_in_ball(monoid, bound)]
    seen = set()
    orbits = []
    for v in elements:
        if v in seen:
            continue
        img = monoid.apply_w(v)
        orbit = tuple(sorted({v, img}))
        for x in orbit:
            seen.add(x)
        orbits.append(orbit)
    orbits.sort()
    return orbits


# ---------------------------------------------------------------------------
# monoid catalog
# ---------------------------------------------------------------------------


def monoid_nat():
    """``N`` inside ``Z``, trivial involution."""
    return AffineMonoid([(1,)])


def monoid_int():
    """``Z`` as a monoid (both unit generators), trivial involution."""
    return AffineMonoid([(1,), (-1,)])


def monoid_int_sigma():
    """``Z`` with the sign involution."""
    return AffineMonoid([(1,), (-1,)], w=[[-1]])


def monoid_nat_power(k):
    """``N^k``, trivial involution."""
    return AffineMonoid([_unit_vec(k, i) for i in range(k)], rank=k)


def monoid_nat_square_swap():
    """``N^2`` with the coordinate swap involution."""
    return AffineMonoid([(1, 0), (0, 1)], w=[[0, 1], [1, 0]])


def monoid_antidiagonal_halfplane():
    """``{(x1, x2) in Z^2 : x1 + x2 <= 0}``, trivial involution."""
    return AffineMonoid([(-1, 0), (0, -1), (1, -1), (-1, 1)])


def product_monoid(monoid, length):
    """The product ``M^length`` with the diagonal involution."""
    rank = monoid.rank
    gens = []
    for slot in range(length):
        for g in monoid.generators:
            amb = [0] * (rank * length)
            amb[slot * rank : (slot + 1) * rank] = list(g)
            gens.append(tuple(amb))
    big = [[0] * (rank * length) for _ in range(rank * length)]
    for slot in range(length):
        for i in range(rank):
            for j in range(rank):
                big[slot * rank + i][slot * rank + j] = monoid.w.data[i][j]
    return AffineMonoid(gens, w=big, rank=rank * length)


# ---------------------------------------------------------------------------
# declarative descriptions (YAML-friendly dictionaries)
# ---------------------------------------------------------------------------


def ring_from_description(desc, where="ring description"):
    """Build a ring from a plain dictionary.

    Expected keys: ``generators`` (names), ``orders`` (additive orders,
    0 = infinite), ``unit`` (name or coefficient vector), ``table`` (list
    of ``[i, j, coeffs]`` with indices or names; symmetric pairs may be
    given once), optional ``involution`` (matrix rows).
    """
    if not isinstance(desc, dict):
        raise SpecError(f"{where}: expected a mapping, got {type(desc).__name__}")
    for key in ("generators", "orders", "unit", "table"):
        if key not in desc:
            raise SpecError(f"{where}: missing key {key!r}")
    names = list(desc["generators"])
    n = len(names)
    if len(set(names)) != n:
        raise SpecError(f"{where}: duplicate generator names")
    orders = list(desc["orders"])
    if len(orders) != n or any(not isinstance(o, int) or o < 0 for o in orders):
        raise SpecError(f"{where}: orders must be {n} nonnegative integers")
    relations = [
        [orders[i] if j == i else 0 for j in range(n)]
        for i in range(n)
        if orders[i] > 0
    ]
    add = group(n, relations)

    def resolve(entry):
        if isinstance(entry, str):
            if entry not in names:
                raise SpecError(f"{where}: unknown generator name {entry!r}")
            return names.index(entry)
        if isinstance(entry, int) and 0 <= entry < n:
            return entry
        raise SpecError(f"{where}: bad generator reference {entry!r}")

    def coeffs(entry):
        if isinstance(entry, str):
            return _unit_vec(n, resolve(entry))
        vec = tuple(entry)
        if len(vec) != n or any(not isinstance(c, int) for c in vec):
            raise SpecError(f"{where}: bad coefficient vector {entry!r}")
        return vec

    table = [[None] * n for _ in range(n)]
    for item in desc["table"]:
        if len(item) != 3:
            raise SpecError(f"{where}: table entries are [i, j, coeffs], got {item!r}")
        i, j, val = resolve(item[0]), resolve(item[1]), coeffs(item[2])
        table[i][j] = val
        table[j][i] = val
    for i in range(n):
        for j in range(n):
            if table[i][j] is None:
                raise SpecError(
                    f"{where}: missing product ({names[i]}, {names[j]})"
                )

    inv = desc.get("involution")
    if inv is not None:
        inv = [coeffs(row) for row in inv]
    return make_ring(add, table, coeffs(desc["unit"]), inv, names=names, where=where)


def monoid_from_description(desc, where="monoid description"):
    """Build an affine monoid from ``{"generators": [...], "involution": ...}``."""
    if not isinstance(desc, dict):
        raise SpecError(f"{where}: expected a mapping, got {type(desc).__name__}")
    if "generators" not in desc:
        raise SpecError(f"{where}: missing key 'generators'")
    gens = [tuple(g) for g in desc["generators"]]
    if not gens:
        raise SpecError(f"{where}: at least one generator required")
    for g in gens:
        if any(not isinstance(c, int) for c in g):
            raise SpecError(f"{where}: non-integer generator {g!r}")
    return AffineMonoid(gens, w=desc.get("involution"))


def load_description(path):
    """Load a YAML description file as a plain dictionary."""
    import yaml

    with open(path) as fh:
        data = yaml.safe_load(fh)
    if not isinstance(data, dict):
        raise SpecError(f"{path}: top level must be a mapping")
    return data
