"""Bounded chain complexes of free abelian groups and their homology.

Chains are integer row vectors; the degree-``q`` differential is a matrix
``rank(q) x rank(q-1)`` acting by right multiplication, and ``d d = 0`` is
checked whenever a complex is constructed.  Negative degrees are first
class — mapping fibers shift below zero and nothing here assumes support
in nonnegative degrees.

Homology in each degree is returned as a finitely generated abelian group
presented on a basis of the cycle lattice; chain maps induce homomorphisms
on those presentations, and the mapping fiber of a chain map comes with
the two canonical maps and an exactness check for the resulting long
sequence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SpecError
from .fgab import (
    Mat,
    group,
    hom,
    hstack,
    is_exact,
    row_kernel,
    solve_left,
    vstack,
)


class ChainComplex:
    """A degreewise finitely generated free complex, given by ranks and
    differentials ``diff(q): C_q -> C_{q-1}``."""

    __slots__ = ("_ranks", "_diffs")

    def __init__(self, ranks, diffs):
        self._ranks = {q: r for q, r in ranks.items() if r}
        for q, r in self._ranks.items():
            if r < 0:
                raise SpecError(f"negative rank {r} in degree {q}")
        self._diffs = {}
        for q, m in diffs.items():
            if not isinstance(m, Mat):
                try:
                    m = Mat([tuple(row) for row in m], cols=self.rank(q - 1))
                except ValueError as exc:
                    raise SpecError(
                        f"differential in degree {q}: {exc}"
                    ) from exc
            if m.rows != self.rank(q) or m.cols != self.rank(q - 1):
                raise SpecError(
                    f"differential in degree {q} has shape {m.rows} x {m.cols}, "
                    f"expected {self.rank(q)} x {self.rank(q - 1)}"
                )
            if m.rows and m.cols:
                self._diffs[q] = m
        for q in list(self._diffs):
            below = self._diffs.get(q - 1)
            if below is not None:
                prod = self._diffs[q] @ below
                if any(any(row) for row in prod.data):
                    raise SpecError(f"d d != 0 from degree {q}")

    def rank(self, q):
        return self._ranks.get(q, 0)

    def diff(self, q):
        m = self._diffs.get(q)
        if m is None:
            return Mat.zeros(self.rank(q), self.rank(q - 1))
        return m

    @property
    def support(self):
        return tuple(sorted(self._ranks))

    @property
    def lo(self):
        return min(self._ranks) if self._ranks else 0

    @property
    def hi(self):
        return max(self._ranks) if self._ranks else 0

    def total_rank(self):
        return sum(self._ranks.values())

    def euler_characteristic(self):
        return sum((-1) ** q * r for q, r in self._ranks.items())

    def __repr__(self):
        ranks = {q: self.rank(q) for q in self.support}
        return f"ChainComplex(ranks={ranks})"


def chain_complex(ranks, diffs=None):
    return ChainComplex(ranks, diffs or {})


def zero_complex():
    return ChainComplex({}, {})


# ---------------------------------------------------------------------------
# homology
# ---------------------------------------------------------------------------


def _homology_data(c, q):
    """The homology group at ``q`` together with the cycle basis (rows in
    ``C_q``) on which it is presented."""
    n = c.rank(q)
    if n == 0:
        return group(0, Mat([], cols=0)), Mat([], cols=0)
    if c.rank(q - 1):
        cycles = row_kernel(c.diff(q))
    else:
        cycles = Mat.identity(n)
    rels = []
    if c.rank(q + 1):
        for row in c.diff(q + 1).data:
            coeffs = solve_left(cycles, row)
            if coeffs is None:  # impossible once d d = 0 holds
                raise SpecError(
                    f"boundary {tuple(row)} is not a cycle in degree {q}"
                )
            rels.append(coeffs)
    return group(cycles.rows, Mat(rels, cols=cycles.rows)), cycles


def homology(c, q):
    """The homology of the complex in one degree."""
    return _homology_data(c, q)[0]


def homology_range(c, lo, hi):
    """Homology groups in degrees ``lo..hi`` inclusive, as a dict."""
    return {q: homology(c, q) for q in range(lo, hi + 1)}


def is_acyclic(c, lo=None, hi=None):
    """Whether every homology group in the (support) range is trivial."""
    lo = c.lo if lo is None else lo
    hi = c.hi if hi is None else hi
    return all(homology(c, q).is_trivial() for q in range(lo, hi + 1))


# ---------------------------------------------------------------------------
# chain maps
# ---------------------------------------------------------------------------


class ChainMap:
    """A degreewise matrix ``C_q -> D_q`` commuting with the differentials
    (checked at construction)."""

    __slots__ = ("source", "target", "_mats")

    def __init__(self, source, target, mats):
        self.source = source
        self.target = target
        self._mats = {}
        for q, m in mats.items():
            if not isinstance(m, Mat):
                m = Mat([tuple(row) for row in m], cols=target.rank(q))
            if m.rows != source.rank(q) or m.cols != target.rank(q):
                raise SpecError(
                    f"chain map in degree {q} has shape {m.rows} x {m.cols}, "
                    f"expected {source.rank(q)} x {target.rank(q)}"
                )
            if m.rows and m.cols:
                self._mats[q] = m
        degrees = set(source.support) | set(target.support)
        for q in degrees:
            left = source.diff(q) @ self.map(q - 1)
            right = self.map(q) @ target.diff(q)
            if left != right:
                raise SpecError(f"chain map does not commute with d in degree {q}")

    def map(self, q):
        m = self._mats.get(q)
        if m is None:
            return Mat.zeros(self.source.rank(q), self.target.rank(q))
        return m

    def then(self, other):
        if other.source is not self.target and other.source._ranks != self.target._ranks:
            raise SpecError("chain maps are not composable")
        degrees = set(self.source.support)
        return ChainMap(
            self.source,
            other.target,
            {q: self.map(q) @ other.map(q) for q in degrees},
        )

    def __repr__(self):
        return f"ChainMap(degrees={sorted(self._mats)})"


def chain_map(source, target, mats):
    return ChainMap(source, target, mats)


def identity_chain_map(c):
    return ChainMap(c, c, {q: Mat.identity(c.rank(q)) for q in c.support})


def induced_hom(f, q):
    """The homomorphism on degree-``q`` homology induced by a chain map."""
    hs, cycles_s = _homology_data(f.source, q)
    ht, cycles_t = _homology_data(f.target, q)
    rows = []
    for row in cycles_s.data:
        image = (Mat.row_vector(row) @ f.map(q)).row(0)
        if cycles_t.rows:
            coeffs = solve_left(cycles_t, image)
            if coeffs is None:
                raise SpecError(
                    f"chain map image {image} is not a cycle in degree {q}"
                )
        else:
            coeffs = ()
        rows.append(coeffs)
    return hom(hs, ht, Mat(rows, cols=cycles_t.rows))


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def shift(c, k):
    """The complex with ``C_{q-k}`` in degree ``q`` and differentials
    scaled by ``(-1)**k``."""
    sign = -1 if k % 2 else 1
    ranks = {q + k: c.rank(q) for q in c.support}
    diffs = {
        q + k: c.diff(q).scale(sign)
        for q in c.support
        if c.rank(q) and c.rank(q - 1)
    }
    return ChainComplex(ranks, diffs)


def direct_sum(c, d):
    """The degreewise sum with the two inclusions and two projections."""
    degrees = sorted(set(c.support) | set(d.support))
    ranks = {q: c.rank(q) + d.rank(q) for q in degrees}
    diffs = {}
    for q in degrees:
        top = hstack(c.diff(q), Mat.zeros(c.rank(q), d.rank(q - 1)))
        bottom = hstack(Mat.zeros(d.rank(q), c.rank(q - 1)), d.diff(q))
        diffs[q] = vstack(top, bottom)
    total = ChainComplex(ranks, diffs)
    i1 = ChainMap(
        c, total,
        {q: hstack(Mat.identity(c.rank(q)), Mat.zeros(c.rank(q), d.rank(q)))
         for q in degrees},
    )
    i2 = ChainMap(
        d, total,
        {q: hstack(Mat.zeros(d.rank(q), c.rank(q)), Mat.identity(d.rank(q)))
         for q in degrees},
    )
    p1 = ChainMap(
        total, c,
        {q: vstack(Mat.identity(c.rank(q)), Mat.zeros(d.rank(q), c.rank(q)))
         for q in degrees},
    )
    p2 = ChainMap(
        total, d,
        {q: vstack(Mat.zeros(c.rank(q), d.rank(q)), Mat.identity(d.rank(q)))
         for q in degrees},
    )
    return total, i1, i2, p1, p2


@dataclass(frozen=True)
class MappingFiber:
    complex: ChainComplex
    proj: ChainMap
    incl: ChainMap


def mapping_fiber(f):
    """The strict fiber of a chain map: ``fib_q = C_q + D_{q+1}`` with
    ``d(c, e) = (d c, f(c) - d e)``, the projection to the source, and the
    degree-shifted inclusion of the target."""
    c, d = f.source, f.target
    degrees = sorted(set(c.support) | {q - 1 for q in d.support})
    ranks = {q: c.rank(q) + d.rank(q + 1) for q in degrees}
    diffs = {}
    for q in degrees:
        top = hstack(c.diff(q), f.map(q))
        bottom = hstack(
            Mat.zeros(d.rank(q + 1), c.rank(q - 1)),
            d.diff(q + 1).scale(-1),
        )
        diffs[q] = vstack(top, bottom)
    fib = ChainComplex(ranks, diffs)
    proj = ChainMap(
        fib, c,
        {q: vstack(Mat.identity(c.rank(q)), Mat.zeros(d.rank(q + 1), c.rank(q)))
         for q in degrees},
    )
    shifted = shift(d, -1)
    incl = ChainMap(
        shifted, fib,
        {q: hstack(Mat.zeros(d.rank(q + 1), c.rank(q)), Mat.identity(d.rank(q + 1)))
         for q in degrees},
    )
    return MappingFiber(fib, proj, incl)


def mapping_cone(f):
    """The cone ``C_{q-1} + D_q`` with ``d(c, e) = (-d c, f(c) + d e)``;
    acyclic exactly when ``f`` is a quasi-isomorphism."""
    c, d = f.source, f.target
    degrees = sorted({q + 1 for q in c.support} | set(d.support))
    ranks = {q: c.rank(q - 1) + d.rank(q) for q in degrees}
    diffs = {}
    for q in degrees:
        top = hstack(c.diff(q - 1).scale(-1), f.map(q - 1))
        bottom = hstack(Mat.zeros(d.rank(q), c.rank(q - 2)), d.diff(q))
        diffs[q] = vstack(top, bottom)
    return ChainComplex(ranks, diffs)


def connecting_hom(f, fiber, q):
    """The map ``H_{q+1}(target) -> H_q(fiber)`` sending a cycle ``z`` to
    ``(0, z)``; with the projection and the map itself this makes the
    homology of the fiber sequence exact."""
    ht, cycles_t = _homology_data(f.target, q + 1)
    hf, cycles_f = _homology_data(fiber.complex, q)
    rows = []
    pad = f.source.rank(q)
    for row in cycles_t.data:
        vec = tuple([0] * pad) + tuple(row)
        coeffs = solve_left(cycles_f, vec) if cycles_f.rows else ()
        if coeffs is None:
            raise SpecError(f"(0, z) is not a cycle in fiber degree {q}")
        rows.append(coeffs)
    return hom(ht, hf, Mat(rows, cols=cycles_f.rows))


def fiber_les_report(f, lo=None, hi=None):
    """Exactness of the long sequence
    ``... -> H_{q+1}(D) -> H_q(fib) -> H_q(C) -> H_q(D) -> ...``
    over the given degree range (defaults to the full support range)."""
    fib = mapping_fiber(f)
    if lo is None:
        lo = fib.complex.lo - 1
    if hi is None:
        hi = fib.complex.hi + 1
    seq = []
    for q in range(hi, lo - 1, -1):
        seq.append(connecting_hom(f, fib, q))
        seq.append(induced_hom(fib.proj, q))
        seq.append(induced_hom(f, q))
    return is_exact(seq)


def fiber_map(f, g, phi_source, phi_target):
    """The chain map ``fib(f) -> fib(g)`` induced by a commuting square
    ``phi_target o f = g o phi_source`` (checked)."""
    for q in set(f.source.support) | set(f.target.support):
        if f.map(q) @ phi_target.map(q) != phi_source.map(q) @ g.map(q):
            raise SpecError(f"square does not commute in degree {q}")
    fib_f = mapping_fiber(f)
    fib_g = mapping_fiber(g)
    mats = {}
    for q in fib_f.complex.support:
        top = hstack(
            phi_source.map(q),
            Mat.zeros(f.source.rank(q), g.target.rank(q + 1)),
        )
        bottom = hstack(
            Mat.zeros(f.target.rank(q + 1), g.source.rank(q)),
            phi_target.map(q + 1),
        )
        mats[q] = vstack(top, bottom)
    return ChainMap(fib_f.complex, fib_g.complex, mats)


def _tensor_layout(c, d):
    """Basis layout of ``c (x) d``: summands ``(a, b)`` sorted per total
    degree, with row index ``offset(q, a, b) + i * d.rank(b) + j``."""
    pairs = {}
    for a in c.support:
        for b in d.support:
            pairs.setdefault(a + b, []).append((a, b))
    for q in pairs:
        pairs[q].sort()
    ranks = {
        q: sum(c.rank(a) * d.rank(b) for a, b in ab) for q, ab in pairs.items()
    }

    def offset(q, a, b):
        out = 0
        for aa, bb in pairs[q]:
            if (aa, bb) == (a, b):
                return out
            out += c.rank(aa) * d.rank(bb)
        raise SpecError(f"no summand {(a, b)} in degree {q}")

    return pairs, ranks, offset


def tensor_complex(c, d):
    """The tensor product with the usual sign: on ``C_a x D_b``,
    ``d(x, y) = (d x, y) + (-1)**a (x, d y)``."""
    pairs, ranks, offset = _tensor_layout(c, d)
    diffs = {}
    for q, ab in pairs.items():
        if q - 1 not in pairs:
            continue
        rows = []
        for a, b in ab:
            dc = c.diff(a)
            dd = d.diff(b)
            for i in range(c.rank(a)):
                for j in range(d.rank(b)):
                    row = [0] * ranks[q - 1]
                    if c.rank(a - 1) and (a - 1, b) in pairs[q - 1]:
                        base = offset(q - 1, a - 1, b)
                        for i2 in range(c.rank(a - 1)):
                            row[base + i2 * d.rank(b) + j] += dc.data[i][i2]
                    if d.rank(b - 1) and (a, b - 1) in pairs[q - 1]:
                        base = offset(q - 1, a, b - 1)
                        sign = -1 if a % 2 else 1
                        for j2 in range(d.rank(b - 1)):
                            row[base + i * d.rank(b - 1) + j2] += (
                                sign * dd.data[j][j2]
                            )
                    rows.append(tuple(row))
        diffs[q] = Mat(rows, cols=ranks[q - 1])
    return ChainComplex(ranks, diffs)


def tensor_chain_map(f, g):
    """``f (x) g`` between the tensor complexes of the sources and targets."""
    source = tensor_complex(f.source, g.source)
    target = tensor_complex(f.target, g.target)
    s_pairs, s_ranks, _ = _tensor_layout(f.source, g.source)
    _, t_ranks, t_offset = _tensor_layout(f.target, g.target)
    mats = {}
    for q, ab in s_pairs.items():
        cols = t_ranks.get(q, 0)
        rows = []
        for a, b in ab:
            fm = f.map(a)
            gm = g.map(b)
            for i in range(f.source.rank(a)):
                for j in range(g.source.rank(b)):
                    row = [0] * cols
                    if f.target.rank(a) and g.target.rank(b):
                        base = t_offset(q, a, b)
                        for i2 in range(f.target.rank(a)):
                            if not fm.data[i][i2]:
                                continue
                            for j2 in range(g.target.rank(b)):
                                row[base + i2 * g.target.rank(b) + j2] += (
                                    fm.data[i][i2] * gm.data[j][j2]
                                )
                    rows.append(tuple(row))
        if rows:
            mats[q] = Mat(rows, cols=cols)
    return ChainMap(source, target, mats)


# ---------------------------------------------------------------------------
# chains of a truncated simplicial set
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SimplicialChains:
    complex: ChainComplex
    basis: tuple  # per degree, the ordered tuple of basis simplices
    valid_hi: object  # highest degree with correct homology, or None for all


def _chains(x, bases):
    index = [
        {s: i for i, s in enumerate(level)} for level in bases
    ]
    ranks = {q: len(level) for q, level in enumerate(bases)}
    diffs = {}
    for q in range(1, x.q_max + 1):
        if not bases[q] or not bases[q - 1]:
            continue
        rows = []
        for s in bases[q]:
            row = [0] * len(bases[q - 1])
            for i in range(q + 1):
                f = x.face(q, i, s)
                j = index[q - 1].get(f)
                if j is not None:
                    row[j] += -1 if i % 2 else 1
            rows.append(tuple(row))
        diffs[q] = Mat(rows, cols=len(bases[q - 1]))
    return ChainComplex(ranks, diffs)


def normalized_chains(x):
    """The complex on nondegenerate simplices, with degenerate faces
    dropped.  ``valid_hi`` is ``q_max - 1`` for a bare truncation and None
    (every degree) when the object certifies that nondegenerate simplices
    vanish above a bound within the truncation."""
    bases = [x.nondegenerate(q) for q in range(x.q_max + 1)]
    valid_hi = x.q_max - 1
    cert = x.certificate
    if cert is not None and cert[0] == "nondegenerate-bound" and cert[1] <= x.q_max:
        valid_hi = None
    return SimplicialChains(_chains(x, bases), tuple(bases), valid_hi)


def full_chains(x):
    """The complex on all simplices (degenerate ones included) — same
    homology as the normalized complex in valid degrees, used as the
    independent route."""
    bases = [x.simplices[q] for q in range(x.q_max + 1)]
    return SimplicialChains(_chains(x, bases), tuple(bases), x.q_max - 1)


def simplicial_homology(x, q):
    """Homology of the truncation in one valid degree."""
    chains = normalized_chains(x)
    if chains.valid_hi is not None and q > chains.valid_hi:
        raise SpecError(
            f"degree {q} homology is not determined by a depth-{x.q_max} "
            f"truncation without a degeneracy bound"
        )
    return homology(chains.complex, q)
