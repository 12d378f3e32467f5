"""Cube diagrams of chain complexes and the projective-space reports.

A cube diagram is a strictly commuting functor from the poset ``{0,1}**n``
to chain complexes.  The limit of the punctured cube (everything except the
initial vertex) is computed as the total complex of the cubical cochain
model, and the total fiber is the mapping fiber of the comparison from the
initial vertex into that limit.

On top of this the module assembles the chain-level projective-space
computations: the weight-by-weight descent squares for the projective line
(`p1_report`), the four-term square certifying the twisted projective line
(`psigma_report`), and the chart-cube analysis for higher projective spaces
(`pn_report`).  Infinite simplicial objects are never enumerated; every
replacement of one by a finite model is recorded by name in the report
entry that used it (the ``substitutions`` field).
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .dihedral import circle_model, dihedral_nerve_piece
from .errors import CertificateError, SpecError
from .fgab import Mat, free_group, row_kernel, solve_left
from .homology import (
    ChainComplex,
    ChainMap,
    chain_complex,
    chain_map,
    fiber_les_report,
    fiber_map,
    homology,
    identity_chain_map,
    is_acyclic,
    mapping_cone,
    mapping_fiber,
    normalized_chains,
    tensor_chain_map,
    tensor_complex,
    zero_complex,
)
from .involutive_algebra import AffineMonoid, pointedness_functional

# names for the logged finite-model replacements
SUB_POSITIVE_CONE = "positive_cone"
SUB_CIRCLE_MODEL = "circle_model"
SUB_TORUS_FORMALITY = "torus_formality"
SUB_REDUCED_SPLIT = "reduced_basepoint_split"


# ---------------------------------------------------------------------------
# cube diagrams
# ---------------------------------------------------------------------------


def _vertices(n):
    return tuple(product((0, 1), repeat=n))


def _bump(eps, j):
    out = list(eps)
    out[j] = 1
    return tuple(out)


class CubeDiagram:
    """A strictly commuting ``{0,1}**n`` diagram of chain complexes.

    ``entries`` maps every vertex tuple to a complex; ``edges`` maps
    ``(eps, j)`` with ``eps[j] == 0`` to the chain map from ``eps`` to the
    vertex with coordinate ``j`` flipped to 1.  All squares are checked to
    commute on the nose at construction.
    """

    __slots__ = ("dimension", "_entries", "_edges")

    def __init__(self, dimension, entries, edges):
        if dimension < 1:
            raise SpecError("cube dimension must be at least 1")
        self.dimension = dimension
        self._entries = dict(entries)
        self._edges = dict(edges)
        for eps in _vertices(dimension):
            if eps not in self._entries:
                raise SpecError(f"missing cube entry at {eps}")
            for j in range(dimension):
                if eps[j]:
                    continue
                f = self._edges.get((eps, j))
                if f is None:
                    raise SpecError(f"missing cube edge at {eps} direction {j}")
                if f.source is not self._entries[eps] or (
                    f.target is not self._entries[_bump(eps, j)]
                ):
                    raise SpecError(
                        f"edge at {eps} direction {j} does not match its entries"
                    )
        for eps in _vertices(dimension):
            for i in range(dimension):
                for j in range(i + 1, dimension):
                    if eps[i] or eps[j]:
                        continue
                    via_i = self.edge(eps, i).then(self.edge(_bump(eps, i), j))
                    via_j = self.edge(eps, j).then(self.edge(_bump(eps, j), i))
                    for q in set(via_i.source.support) | set(via_j.source.support):
                        if via_i.map(q) != via_j.map(q):
                            raise SpecError(
                                f"non-commuting square at {eps} in directions "
                                f"{i}, {j} (degree {q})"
                            )

    def entry(self, eps):
        return self._entries[tuple(eps)]

    def edge(self, eps, j):
        return self._edges[(tuple(eps), j)]

    def face(self, direction, value):
        """The (n-1)-cube obtained by freezing one coordinate."""
        if self.dimension < 2:
            raise SpecError("faces of a 1-cube are single complexes")

        def embed(eps):
            return eps[:direction] + (value,) + eps[direction:]

        entries = {}
        edges = {}
        for eps in _vertices(self.dimension - 1):
            entries[eps] = self.entry(embed(eps))
            for j in range(self.dimension - 1):
                if eps[j]:
                    continue
                big_j = j if j < direction else j + 1
                edges[(eps, j)] = self.edge(embed(eps), big_j)
        return CubeDiagram(self.dimension - 1, entries, edges)

    def __repr__(self):
        return f"CubeDiagram(dimension={self.dimension})"


def cube_of_map(f):
    """The 1-cube of a single chain map."""
    return CubeDiagram(
        1, {(0,): f.source, (1,): f.target}, {((0,), 0): f}
    )


def cospan_square(f, g):
    """The square with initial entry 0 over the cospan ``f: B -> D <- C :g``."""
    zero = zero_complex()
    entries = {(0, 0): zero, (1, 0): f.source, (0, 1): g.source, (1, 1): f.target}
    if g.target is not f.target:
        raise SpecError("cospan legs must share their target")
    edges = {
        ((0, 0), 0): chain_map(zero, f.source, {}),
        ((0, 0), 1): chain_map(zero, g.source, {}),
        ((1, 0), 1): f,
        ((0, 1), 0): g,
    }
    return CubeDiagram(2, entries, edges)


def tensor_cube(maps):
    """The cube ``X_{a_1,1} (x) ... (x) X_{a_n,n}`` of elementary tensors."""
    maps = tuple(maps)
    if not maps:
        raise SpecError("tensor cube needs at least one map")
    cube = cube_of_map(maps[0])
    for f in maps[1:]:
        entries = {}
        edges = {}
        n = cube.dimension
        for eps in _vertices(n):
            for a in (0, 1):
                side = f.source if a == 0 else f.target
                entries[eps + (a,)] = tensor_complex(cube.entry(eps), side)
        for eps in _vertices(n):
            for a in (0, 1):
                side_id = identity_chain_map(f.source if a == 0 else f.target)
                for j in range(n):
                    if eps[j]:
                        continue
                    tm = tensor_chain_map(cube.edge(eps, j), side_id)
                    edges[(eps + (a,), j)] = ChainMap(
                        entries[eps + (a,)],
                        entries[_bump(eps, j) + (a,)],
                        {q: tm.map(q) for q in tm.source.support},
                    )
            tm = tensor_chain_map(identity_chain_map(cube.entry(eps)), f)
            edges[(eps + (0,), n)] = ChainMap(
                entries[eps + (0,)],
                entries[eps + (1,)],
                {q: tm.map(q) for q in tm.source.support},
            )
        cube = CubeDiagram(n + 1, entries, edges)
    return cube


# ---------------------------------------------------------------------------
# punctured limits and total fibers
# ---------------------------------------------------------------------------


def _punctured_layout(q_cube):
    comps = [eps for eps in _vertices(q_cube.dimension) if any(eps)]
    comps.sort()
    return comps


def punctured_limit(q_cube):
    """Total complex of the cube's cochain model away from the initial vertex.

    The component at a vertex ``eps`` sits with a shift: degree ``q`` of the
    limit collects degree ``q + |eps| - 1`` of the entry there.
    """
    comps = _punctured_layout(q_cube)
    weights = {eps: sum(eps) for eps in comps}

    degrees = set()
    for eps in comps:
        for p in q_cube.entry(eps).support:
            degrees.add(p - weights[eps] + 1)
    ranks = {}
    offsets = {}
    for q in sorted(degrees):
        total = 0
        for eps in comps:
            offsets[(q, eps)] = total
            total += q_cube.entry(eps).rank(q + weights[eps] - 1)
        ranks[q] = total

    diffs = {}
    for q in sorted(degrees):
        if q - 1 not in ranks or not ranks[q] or not ranks.get(q - 1):
            continue
        cols = ranks[q - 1]
        rows = [[0] * cols for _ in range(ranks[q])]
        for eps in comps:
            p = q + weights[eps] - 1
            c = q_cube.entry(eps)
            r = c.rank(p)
            if not r:
                continue
            base = offsets[(q, eps)]
            sign_int = -1 if (weights[eps] - 1) % 2 else 1
            d = c.diff(p)
            if c.rank(p - 1):
                tbase = offsets[(q - 1, eps)]
                for i in range(r):
                    for k in range(c.rank(p - 1)):
                        rows[base + i][tbase + k] += sign_int * d.data[i][k]
            for j in range(q_cube.dimension):
                if eps[j]:
                    continue
                target = _bump(eps, j)
                f = q_cube.edge(eps, j).map(p)
                tr = q_cube.entry(target).rank(p)
                if not tr:
                    continue
                sign = -1 if sum(eps[:j]) % 2 else 1
                tbase = offsets[(q - 1, target)]
                for i in range(r):
                    for k in range(tr):
                        rows[base + i][tbase + k] += sign * f.data[i][k]
        diffs[q] = Mat([tuple(row) for row in rows], cols=cols)
    return ChainComplex(ranks, diffs)


def comparison(q_cube):
    """The chain map from the initial vertex into the punctured limit."""
    limit = punctured_limit(q_cube)
    initial = q_cube.entry((0,) * q_cube.dimension)
    comps = _punctured_layout(q_cube)
    mats = {}
    for q in initial.support:
        cols = limit.rank(q)
        rows = [[0] * cols for _ in range(initial.rank(q))]
        offset = 0
        for eps in comps:
            r = q_cube.entry(eps).rank(q + sum(eps) - 1)
            if sum(eps) == 1 and r:
                j = eps.index(1)
                f = q_cube.edge((0,) * q_cube.dimension, j).map(q)
                for i in range(initial.rank(q)):
                    for k in range(r):
                        rows[i][offset + k] += f.data[i][k]
            offset += r
        mats[q] = Mat([tuple(row) for row in rows], cols=cols)
    return ChainMap(initial, limit, mats)


def total_fiber(q_cube):
    """Fiber of the initial vertex over the limit of the punctured cube."""
    return mapping_fiber(comparison(q_cube)).complex


def _homology_table(c, pad=1):
    if not c.support:
        return {}
    table = {}
    for q in range(c.lo - pad, c.hi + pad + 1):
        h = homology(c, q)
        if not h.is_trivial():
            table[q] = h
    return table


# ---------------------------------------------------------------------------
# the fiber-sequence recursion for total fibers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RecursionReport:
    ok: bool
    directions: tuple
    detail: str


def _induced_fiber_map(q_cube, direction):
    """tfib(front) -> tfib(back) induced by the edges in one direction."""
    front = q_cube.face(direction, 0)
    back = q_cube.face(direction, 1)

    def embed(eps, value):
        return eps[:direction] + (value,) + eps[direction:]

    c_front = comparison(front)
    c_back = comparison(back)
    limit_mats = {}
    comps = _punctured_layout(front)
    for q in set(c_front.target.support) | set(c_back.target.support):
        rows_n = c_front.target.rank(q)
        cols = c_back.target.rank(q)
        rows = [[0] * cols for _ in range(rows_n)]
        src_off = 0
        dst_off = 0
        for eps in comps:
            p = q + sum(eps) - 1
            r = front.entry(eps).rank(p)
            tr = back.entry(eps).rank(p)
            if r and tr:
                f = q_cube.edge(embed(eps, 0), direction).map(p)
                for i in range(r):
                    for k in range(tr):
                        rows[src_off + i][dst_off + k] += f.data[i][k]
            src_off += r
            dst_off += tr
        limit_mats[q] = Mat([tuple(row) for row in rows], cols=cols)
    phi_limit = ChainMap(c_front.target, c_back.target, limit_mats)
    phi_initial = q_cube.edge(embed((0,) * front.dimension, 0), direction)
    return c_front, c_back, fiber_map(c_front, c_back, phi_initial, phi_limit)


def tfib_recursion_check(q_cube):
    """For each direction: tfib(cube) -> tfib(front) -> tfib(back) is a fiber
    sequence on homology, verified through the induced map of fibers."""
    tfib = total_fiber(q_cube)
    results = []
    ok = True
    for direction in range(q_cube.dimension):
        if q_cube.dimension == 1:
            induced = q_cube.edge((0,), 0)
        else:
            _, _, induced = _induced_fiber_map(q_cube, direction)
        iterated = mapping_fiber(induced).complex
        les = fiber_les_report(induced)
        lo = min([tfib.lo] if tfib.support else [0])
        hi = max([tfib.hi] if tfib.support else [0])
        if iterated.support:
            lo = min(lo, iterated.lo)
            hi = max(hi, iterated.hi)
        match = all(
            homology(tfib, q) == homology(iterated, q) for q in range(lo, hi + 1)
        )
        ok = ok and les.ok and match
        results.append((direction, match, les.ok))
    detail = "; ".join(
        f"direction {d}: homology {'=' if m else '!='} iterated fiber, "
        f"sequence {'exact' if e else 'NOT exact'}"
        for d, m, e in results
    )
    return RecursionReport(ok, tuple(results), detail)


@dataclass(frozen=True)
class SmashReport:
    ok: bool
    degrees: dict
    detail: str


def smash_cube_check(maps):
    """Homology of a tensor of fibers against the total fiber of the tensor
    cube built from the same maps."""
    maps = tuple(maps)
    cube = tensor_cube(maps)
    right = total_fiber(cube)
    left = mapping_fiber(maps[0]).complex
    for f in maps[1:]:
        left = tensor_complex(left, mapping_fiber(f).complex)
    degrees = {}
    ok = True
    lo = min([q for c in (left, right) if c.support for q in (c.lo,)] or [0])
    hi = max([q for c in (left, right) if c.support for q in (c.hi,)] or [0])
    for q in range(lo, hi + 1):
        hl = homology(left, q)
        hr = homology(right, q)
        degrees[q] = (hl, hr)
        ok = ok and hl == hr
    return SmashReport(ok, degrees, f"checked degrees {lo}..{hi}")


# ---------------------------------------------------------------------------
# torus models and functorial maps
# ---------------------------------------------------------------------------


def torus_model(d, reduced=False):
    """Zero-differential exterior model of a rank-``d`` torus.

    Degree ``q`` has rank ``C(d, q)``; the reduced variant drops the single
    degree-0 class, modelling the summand complementary to the base point.
    """
    if d < 0:
        raise SpecError("torus rank must be nonnegative")
    lo = 1 if reduced else 0
    ranks = {}
    for q in range(lo, d + 1):
        n = 1
        for i in range(q):
            n = n * (d - i) // (i + 1)
        ranks[q] = n
    return chain_complex(ranks, {})


def torus_map(a, reduced=False):
    """Chain map of torus models induced by an integer matrix, acting in
    degree ``q`` through the ``q``-th compound matrix (all ``q x q`` minors).

    Functorial on the nose by the Cauchy-Binet formula.
    """
    a = a if isinstance(a, Mat) else Mat([tuple(r) for r in a])
    source = torus_model(a.rows, reduced=reduced)
    target = torus_model(a.cols, reduced=reduced)
    mats = {}
    lo = 1 if reduced else 0
    for q in range(lo, a.rows + 1):
        rows = []
        for s in combinations(range(a.rows), q):
            row = []
            for t in combinations(range(a.cols), q):
                minor = Mat(
                    [tuple(a.data[i][j] for j in t) for i in s], cols=q
                )
                row.append(minor.det() if q else 1)
            rows.append(tuple(row))
        if rows and rows[0]:
            mats[q] = Mat(rows)
    return ChainMap(source, target, mats)


# ---------------------------------------------------------------------------
# the projective line, weight by weight
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeightEntry:
    weight: object
    chart: str
    method: str
    substitutions: tuple
    homology: dict
    acyclic: bool


@dataclass(frozen=True)
class P1Report:
    window: int
    entries: tuple
    ok: bool


def _nat_chart(sign):
    return AffineMonoid([(sign,)], w=[[1]])


def _nerve_piece_chains(monoid, v, pad=0):
    lam = pointedness_functional(monoid)
    bound = int(
        sum(Fraction(l) * x for l, x in zip(lam, v))
    )
    piece = dihedral_nerve_piece(monoid, (tuple(v),), bound + pad)
    chains = normalized_chains(piece)
    if chains.valid_hi is not None:
        raise CertificateError(
            f"weight {v} chains are not certified complete at depth {bound + pad}"
        )
    return chains


def _circle_chains():
    chains = normalized_chains(circle_model(3))
    if chains.valid_hi is not None:
        raise CertificateError("circle model chains must be complete")
    return chains


def p1_report(window):
    """Per-weight homology of the two-chart descent square for the
    projective line; weights are certified acyclic except at zero, where the
    limit carries the two expected classes in degree 0."""
    if window < 1:
        raise SpecError("weight window must be at least 1")
    entries = []
    for j in range(-window, window + 1):
        if j == 0:
            point = chain_complex({0: 1}, {})
            circle = _circle_chains().complex
            into = chain_map(point, circle, {0: [[1]]})
            square = cospan_square(into, into)
            limit = punctured_limit(square)
            table = _homology_table(limit)
            entries.append(
                WeightEntry(
                    weight=0,
                    chart="both",
                    method="chain",
                    substitutions=(SUB_CIRCLE_MODEL,),
                    homology=table,
                    acyclic=False,
                )
            )
            continue
        sign = 1 if j > 0 else -1
        chart = "x >= 0" if j > 0 else "x <= 0"
        piece = _nerve_piece_chains(_nat_chart(sign), (j,)).complex
        empty = zero_complex()
        square = cospan_square(
            identity_chain_map(piece), chain_map(empty, piece, {})
        )
        limit = punctured_limit(square)
        table = _homology_table(limit)
        entries.append(
            WeightEntry(
                weight=j,
                chart=chart,
                method="chain",
                substitutions=(SUB_POSITIVE_CONE,),
                homology=table,
                acyclic=not table,
            )
        )
    by_weight = {e.weight: e for e in entries}
    zero_entry = by_weight[0]
    ok = (
        all(e.acyclic for j, e in by_weight.items() if j != 0)
        and set(zero_entry.homology) == {0}
        and zero_entry.homology[0] == free_group(2)
    )
    return P1Report(window, tuple(entries), ok)


# ---------------------------------------------------------------------------
# the twisted projective line
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SummandEntry:
    name: str
    input_degree: int
    homology: dict
    label: str


@dataclass(frozen=True)
class PsigmaReport:
    cartesian: bool
    mutation_breaks: bool
    summands: tuple
    substitutions: tuple
    detail: str


# Weight block of the gluing square for the line with weight-reversing
# involution.  Per weight the two charts contribute one circle each, the
# double torus contributes two (one per component), and the corner holds
# the two weights on each of the two torus components, in slot order
# (first component weight +, first -, second +, second -).
#
# The chart restrictions are slot-diagonal: each chart keeps its own
# coordinate, so its weight-j circle lands on the matching component's
# internal weight +j.
PSIGMA_RESTRICTION = ((1, 0, 0, 0), (0, 0, 1, 0))
# The projection from the ambient torus doubles each weight class into the
# identity copy and the involution copy; the involution reverses weights
# and reverses the orientation of the weight circle, so its block carries
# a sign in degree one.
PSIGMA_UNIT = {
    0: ((1, 0, 0, 1), (0, 1, 1, 0)),
    1: ((1, 0, 0, -1), (0, 1, -1, 0)),
}


def _copies(c, n):
    """Direct sum of ``n`` copies of ``c`` (zero differentials expected)."""
    ranks = {q: n * c.rank(q) for q in c.support}
    diffs = {}
    for q in c.support:
        if not c.rank(q - 1):
            continue
        d = c.diff(q)
        rows = []
        for copy in range(n):
            for i in range(c.rank(q)):
                row = [0] * (n * c.rank(q - 1))
                for k in range(c.rank(q - 1)):
                    row[copy * c.rank(q - 1) + k] = d.data[i][k]
                rows.append(tuple(row))
        diffs[q] = Mat(rows, cols=n * c.rank(q - 1))
    return chain_complex(ranks, diffs)


def _block_map(source, target, blocks, c):
    """Chain map acting on copies of ``c`` by per-degree copy matrices.

    ``blocks`` is either one copy matrix used in every degree or a mapping
    of degrees to copy matrices.
    """
    mats = {}
    for q in c.support:
        mult = blocks[q] if isinstance(blocks, dict) else blocks
        r = c.rank(q)
        n_dst = len(mult[0])
        rows = []
        for copy in range(len(mult)):
            for i in range(r):
                row = [0] * (n_dst * r)
                for dst in range(n_dst):
                    row[dst * r + i] = mult[copy][dst]
                rows.append(tuple(row))
        mats[q] = Mat(rows, cols=n_dst * r)
    return chain_map(source, target, mats)


def _psigma_square(restriction, unit):
    circle = _circle_chains().complex
    two = _copies(circle, 2)
    two_other = _copies(circle, 2)
    four = _copies(circle, 4)
    f = _block_map(two, four, restriction, circle)
    g = _block_map(two_other, four, unit, circle)
    return cospan_square(f, g)


def psigma_report():
    """Certifies the per-weight gluing square of the line with
    weight-reversing involution and reports the two summand limits of the
    remaining weight-zero piece."""
    square = _psigma_square(PSIGMA_RESTRICTION, PSIGMA_UNIT)
    fib = total_fiber(square)
    cartesian = is_acyclic(fib, fib.lo - 1, fib.hi + 1)

    mutated = tuple(
        tuple(0 if (i, j) == (0, 0) else v for j, v in enumerate(row))
        for i, row in enumerate(PSIGMA_RESTRICTION)
    )
    bad = _psigma_square(mutated, PSIGMA_UNIT)
    bad_fib = total_fiber(bad)
    mutation_breaks = not is_acyclic(bad_fib, bad_fib.lo - 1, bad_fib.hi + 1)

    z0 = chain_complex({0: 1}, {})
    z1 = chain_complex({1: 1}, {})
    zz0 = chain_complex({0: 2}, {})
    zz1 = chain_complex({1: 2}, {})
    unit_square = cospan_square(
        chain_map(z0, zz0, {0: [[1, 1]]}),
        identity_chain_map(zz0),
    )
    unit_homology = _homology_table(punctured_limit(unit_square))
    susp_square = cospan_square(
        chain_map(z1, zz1, {1: [[1, 1]]}),
        chain_map(zero_complex(), zz1, {}),
    )
    susp_homology = _homology_table(punctured_limit(susp_square))
    summands = (
        SummandEntry("unit", 0, unit_homology, ""),
        SummandEntry(
            "suspension",
            1,
            susp_homology,
            "weight-sigma twisted (not verified equivariantly)",
        ),
    )
    ok_summands = (
        set(unit_homology) == {0}
        and unit_homology[0] == free_group(1)
        and set(susp_homology) == {0}
        and susp_homology[0] == free_group(1)
    )
    detail = (
        "doubled square per weight block j > 0 (identical for every j); "
        f"summand limits {'match' if ok_summands else 'DIFFER from'} one free "
        "class each"
    )
    return PsigmaReport(
        cartesian and ok_summands,
        mutation_breaks,
        summands,
        (SUB_CIRCLE_MODEL,),
        detail,
    )


# ---------------------------------------------------------------------------
# the smash-sphere bookkeeping for the h map
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HMapReport:
    degree: int
    homology: dict
    ok: bool


def smash_sphere_model(k):
    """Reduced model of a ``k``-fold smash of circles: one class in degree k."""
    if k < 0:
        raise SpecError("smash degree must be nonnegative")
    return chain_complex({k: 1}, {})


def h_map_cofiber_check(d):
    """Cofiber of the reduced smash model of the twist-compatible inclusion:
    two free classes in degree ``d`` and nothing else."""
    if d < 1:
        raise SpecError("d must be at least 1")
    source = smash_sphere_model(d - 1)
    target = smash_sphere_model(d)
    h = chain_map(source, target, {})
    cone = mapping_cone(h)
    table = _homology_table(cone)
    ok = set(table) == {d} and table[d] == free_group(2)
    return HMapReport(d, table, ok)


# ---------------------------------------------------------------------------
# higher projective spaces
# ---------------------------------------------------------------------------


def halfspace_positives(n, v):
    """Indices (1-based; n+1 is the anti-diagonal constraint) of the chart
    halfspaces in whose strictly positive part the weight lies."""
    out = [j + 1 for j in range(n) if v[j] > 0]
    if sum(v) < 0:
        out.append(n + 1)
    return tuple(out)


def chart_monoid(n, missing):
    """The chart monoid of ``P^n`` determined by dropping one halfspace.

    ``missing = n + 1`` gives the nonnegative orthant; ``missing = j`` keeps
    ``x_i >= 0`` for ``i != j`` together with ``x_1 + ... + x_n <= 0``.
    """
    if missing == n + 1:
        gens = [tuple(1 if i == k else 0 for i in range(n)) for k in range(n)]
    else:
        j = missing - 1
        gens = []
        for i in range(n):
            if i == j:
                continue
            gens.append(tuple(
                1 if k == i else (-1 if k == j else 0) for k in range(n)
            ))
        gens.append(tuple(-1 if k == j else 0 for k in range(n)))
    w = [[1 if i == k else 0 for k in range(n)] for i in range(n)]
    return AffineMonoid(gens, w=w)


def _in_chart(n, missing, v):
    for j in range(n):
        if j != missing - 1 and v[j] < 0:
            return False
    if missing != n + 1 and sum(v) > 0:
        return False
    return True


def _substituted_weight_cube(n, v, positives):
    """The chart cube at weight ``v`` after replacing every entry by its
    image under the cone equivalences in the positive directions.

    Only called when the positive directions determine a single chart, so
    that every remaining entry is either empty or a finite piece of that
    chart's nerve.
    """
    missing = next(m for m in range(1, n + 2) if m not in positives)
    monoid = chart_monoid(n, missing)
    if not _in_chart(n, missing, v):
        raise CertificateError(f"weight {v} escaped its certified chart")
    piece = _nerve_piece_chains(monoid, v).complex
    zero = zero_complex()
    m_axis = missing - 1
    entries = {}
    edges = {}
    for eps in _vertices(n + 1):
        entries[eps] = piece if eps[m_axis] else zero
    for eps in _vertices(n + 1):
        for j in range(n + 1):
            if eps[j]:
                continue
            src = entries[eps]
            dst = entries[_bump(eps, j)]
            if src is zero:
                edges[(eps, j)] = chain_map(zero, dst, {})
            else:
                edges[(eps, j)] = identity_chain_map(piece)
    return CubeDiagram(n + 1, entries, edges)


def _unit_lattice(n, index_set):
    """Basis (rows) of the unit group of ``M_I`` inside ``Z^n``."""
    constraints = []
    for j in sorted(index_set):
        if j <= n:
            constraints.append(tuple(1 if i == j - 1 else 0 for i in range(n)))
        else:
            constraints.append((1,) * n)
    if not constraints:
        return Mat.identity(n)
    m = Mat([tuple(c[i] for c in constraints) for i in range(n)],
            cols=len(constraints))
    return row_kernel(m)


def origin_cube(n):
    """The reduced weight-zero chart cube: unit tori at every vertex with
    the functorial exterior maps of the lattice inclusions."""
    bases = {}
    for eps in _vertices(n + 1):
        index_set = frozenset(j + 1 for j in range(n + 1) if eps[j] == 0)
        bases[eps] = _unit_lattice(n, index_set)
    entries = {eps: torus_model(b.rows, reduced=True) for eps, b in bases.items()}
    edges = {}
    for eps in _vertices(n + 1):
        for j in range(n + 1):
            if eps[j]:
                continue
            src_b = bases[eps]
            dst_b = bases[_bump(eps, j)]
            rows = []
            for i in range(src_b.rows):
                coeffs = solve_left(dst_b, src_b.row(i))
                if coeffs is None:
                    raise CertificateError(
                        "unit lattice does not include into its neighbour"
                    )
                rows.append(coeffs)
            a = Mat(rows, cols=dst_b.rows)
            tm = torus_map(a, reduced=True)
            edges[(eps, j)] = ChainMap(
                entries[eps],
                entries[_bump(eps, j)],
                {q: tm.map(q) for q in tm.source.support},
            )
    return CubeDiagram(n + 1, entries, edges)


@dataclass(frozen=True)
class OriginEntry:
    homology: dict
    assembled_rank: int
    parity_ok: bool
    substitutions: tuple
    ok: bool


@dataclass(frozen=True)
class PnReport:
    n: int
    window: int
    entries: tuple
    origin: OriginEntry
    ok: bool


def pn_report(n, window):
    """Per-weight certification for the chart cube of ``P^n`` plus the
    weight-zero torus assembly.

    Nonzero weights are certified acyclic either structurally (a direction
    of identity edges after the cone substitution) or, when the positive
    directions pin down a single chart with small total size, by a direct
    computation of the total fiber.
    """
    if not 1 <= n <= 4:
        raise SpecError("n must be between 1 and 4")
    if window < 1:
        raise SpecError("weight window must be at least 1")
    entries = []
    ok = True
    for v in product(range(-window, window + 1), repeat=n):
        if not any(v):
            continue
        positives = halfspace_positives(n, v)
        if not positives:
            raise CertificateError(
                f"nonzero weight {v} lies in no positive halfspace"
            )
        chart = f"direction {positives[0]}"
        if len(positives) >= n and sum(abs(x) for x in v) <= 3:
            cube = _substituted_weight_cube(n, v, positives)
            fib = total_fiber(cube)
            table = _homology_table(fib)
            entry = WeightEntry(
                weight=v,
                chart=chart,
                method="chain",
                substitutions=(SUB_POSITIVE_CONE,),
                homology=table,
                acyclic=not table,
            )
        else:
            entry = WeightEntry(
                weight=v,
                chart=chart,
                method="structural",
                substitutions=(SUB_POSITIVE_CONE,),
                homology={},
                acyclic=True,
            )
        ok = ok and entry.acyclic
        entries.append(entry)

    cube = origin_cube(n)
    fib = total_fiber(cube)
    table = _homology_table(fib)
    origin_ok = (
        set(table) == {-1}
        and table[-1] == free_group(n)
    )
    assembled = 1 + (table[-1].free_rank if -1 in table else 0)
    parity = 1 + 2 * (n // 2) + (1 if n % 2 else 0)
    origin = OriginEntry(
        homology=table,
        assembled_rank=assembled,
        parity_ok=parity == assembled,
        substitutions=(SUB_TORUS_FORMALITY, SUB_REDUCED_SPLIT),
        ok=origin_ok and parity == assembled and assembled == n + 1,
    )
    return PnReport(n, window, tuple(entries), origin, ok and origin.ok)
