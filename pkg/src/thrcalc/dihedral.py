"""Truncated dihedral, cyclic and real simplicial sets.

The central objects are finite truncations of monoid nerves.  For an
affine monoid ``M`` the cyclic bar construction has ``(q+1)``-tuples of
monoid elements as ``q``-simplices with

* faces ``d_i`` merging adjacent entries (the last face wraps around),
* degeneracies ``s_i`` inserting a zero,
* the rotation ``t(x_0, ..., x_q) = (x_q, x_0, ..., x_{q-1})``,
* the reflection ``w(x_0, ..., x_q) = (s(x_0), s(x_q), ..., s(x_1))``
  where ``s`` is the monoid involution.

Total weight is preserved by all four maps, so the nerve splits over the
involution orbits of weights; pieces are enumerated exactly via the weight
fiber machinery and are rejected when infinite.  An optional window (a
bound on the total l1-norm of a simplex) gives finite, structure-closed
truncations of pieces that would otherwise be infinite; windows require
the involution matrix to be a signed permutation so that they are closed
under the reflection.

Edgewise subdivision is implemented by operator algebra: a monotone map
``mu`` acts on simplices through its epi-mono factorization, and the two
subdivisions are precomposition with

* ``D_sigma(alpha)(a) = q - alpha(p - a)`` for ``a <= p`` and
  ``alpha(a - p - 1) + q + 1`` above (squaring subdivision, carrying a
  levelwise involution), and
* ``D_r(alpha)(a + k(p+1)) = alpha(a) + k(q+1)`` (r-fold cyclic
  subdivision, carrying a levelwise ``C_r``-action ``t**(q+1)``).

``D_sigma(alpha)`` is fixed by conjugation with the order reversal, which
is exactly why the levelwise reflection commutes with the subdivided
structure maps; the cyclic ``D_r`` is not, so the reflection is not kept
on ``sd_r`` outputs and power-map checks go through the untruncated
tuples instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CertificateError, InfeasibleError, SpecError
from .involutive_algebra import (
    AffineMonoid,
    elements_in_ball,
    pointedness_functional,
    weight_tuples,
)

# ---------------------------------------------------------------------------
# the truncated-set container
# ---------------------------------------------------------------------------


class TruncDihedralSet:
    """A degreewise-finite truncation of a simplicial set with optional
    rotation and reflection.

    ``flag`` records which identities the maps are claimed to satisfy:
    ``"simplicial"``, ``"real"`` (reflection with the real identities),
    ``"cyclic"`` (rotation), ``"dihedral"`` (both), or ``"levelwise"``
    (rotation/reflection merely commute with faces and degeneracies, as on
    edgewise subdivisions).  ``certificate`` optionally records a proven
    degree bound above which every simplex is degenerate, making the
    truncation lossless for nondegenerate data.
    """

    __slots__ = (
        "q_max",
        "simplices",
        "_face",
        "_degeneracy",
        "_rotate",
        "_invol",
        "flag",
        "cyclic_order",
        "certificate",
    )

    def __init__(
        self,
        q_max,
        simplices,
        face,
        degeneracy,
        rotate=None,
        invol=None,
        flag="simplicial",
        cyclic_order=None,
        certificate=None,
    ):
        if q_max < 0:
            raise SpecError("truncation depth must be nonnegative")
        if len(simplices) != q_max + 1:
            raise SpecError(
                f"expected {q_max + 1} simplex levels, got {len(simplices)}"
            )
        self.q_max = q_max
        self.simplices = tuple(tuple(sorted(set(level))) for level in simplices)
        self._face = face
        self._degeneracy = degeneracy
        self._rotate = rotate
        self._invol = invol
        self.flag = flag
        self.cyclic_order = cyclic_order
        self.certificate = certificate

    # -- structure maps ----------------------------------------------------

    def face(self, q, i, x):
        if not (1 <= q <= self.q_max and 0 <= i <= q):
            raise SpecError(f"face d_{i} undefined in degree {q}")
        return self._face(q, i, x)

    def degeneracy(self, q, i, x):
        if not (0 <= q < self.q_max and 0 <= i <= q):
            raise SpecError(f"degeneracy s_{i} undefined in degree {q}")
        return self._degeneracy(q, i, x)

    def rotate(self, q, x):
        if self._rotate is None:
            raise SpecError("no rotation on this object")
        return self._rotate(q, x)

    def invol(self, q, x):
        if self._invol is None:
            raise SpecError("no reflection on this object")
        return self._invol(q, x)

    @property
    def has_rotation(self):
        return self._rotate is not None

    @property
    def has_involution(self):
        return self._invol is not None

    def count(self, q):
        return len(self.simplices[q])

    def is_degenerate(self, q, x):
        """Whether ``x`` is in the image of some degeneracy (tested via the
        retraction ``s_i d_i``)."""
        if q == 0:
            return False
        return any(
            self._degeneracy(q - 1, i, self._face(q, i, x)) == x for i in range(q)
        )

    def nondegenerate(self, q):
        return tuple(x for x in self.simplices[q] if not self.is_degenerate(q, x))

    def nondegenerate_counts(self):
        return tuple(len(self.nondegenerate(q)) for q in range(self.q_max + 1))

    def __repr__(self):
        counts = ", ".join(str(self.count(q)) for q in range(self.q_max + 1))
        return f"TruncDihedralSet({self.flag}, q_max={self.q_max}, counts=[{counts}])"


#: A truncated real simplicial set is the same container with no rotation.
TruncRealSimplicialSet = TruncDihedralSet


# ---------------------------------------------------------------------------
# structure validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StructureReport:
    ok: bool
    detail: str = "all identities hold"

    def __bool__(self):
        return self.ok


def validate_structure(x):
    """Check every claimed identity on every stored simplex.

    Face-only identities run in all degrees; identities passing through
    degree ``q+1`` run for ``q < q_max``.  Closure of every map in the
    stored simplex sets is checked first.  The first violation is reported
    with the identity, the degree and the simplex.
    """
    fail = _validate(x)
    if fail is None:
        return StructureReport(True)
    return StructureReport(False, fail)


def _validate(x):
    sets = [set(level) for level in x.simplices]
    for q in range(x.q_max + 1):
        for s in x.simplices[q]:
            if q >= 1:
                for i in range(q + 1):
                    if x.face(q, i, s) not in sets[q - 1]:
                        return f"d_{i} leaves the simplex set at degree {q} on {s}"
            if q < x.q_max:
                for i in range(q + 1):
                    if x.degeneracy(q, i, s) not in sets[q + 1]:
                        return f"s_{i} leaves the simplex set at degree {q} on {s}"
            if x.has_rotation and x.rotate(q, s) not in sets[q]:
                return f"rotation leaves the simplex set at degree {q} on {s}"
            if x.has_involution and x.invol(q, s) not in sets[q]:
                return f"reflection leaves the simplex set at degree {q} on {s}"

    for q in range(x.q_max + 1):
        for s in x.simplices[q]:
            err = _simplicial_identities(x, q, s)
            if err:
                return err
            if x.flag in ("cyclic", "dihedral"):
                err = _cyclic_identities(x, q, s)
                if err:
                    return err
            if x.flag in ("real", "dihedral"):
                err = _real_identities(x, q, s)
                if err:
                    return err
            if x.flag == "dihedral":
                lhs = x.invol(q, x.rotate(q, s))
                rhs = x.invol(q, s)
                for _ in range(q):
                    rhs = x.rotate(q, rhs)
                if lhs != rhs:
                    return f"w t != t^-1 w at degree {q} on {s}"
            if x.flag == "levelwise":
                err = _levelwise_identities(x, q, s)
                if err:
                    return err
    return None


def _simplicial_identities(x, q, s):
    if q >= 2:
        for j in range(q + 1):
            for i in range(j):
                if x.face(q - 1, i, x.face(q, j, s)) != x.face(
                    q - 1, j - 1, x.face(q, i, s)
                ):
                    return f"d_{i} d_{j} != d_{j-1} d_{i} at degree {q} on {s}"
    if q < x.q_max:
        for j in range(q + 1):
            sj = x.degeneracy(q, j, s)
            for i in range(q + 2):
                got = x.face(q + 1, i, sj)
                if i < j:
                    want = x.degeneracy(q - 1, j - 1, x.face(q, i, s))
                elif i in (j, j + 1):
                    want = s
                else:
                    want = x.degeneracy(q - 1, j, x.face(q, i - 1, s))
                if got != want:
                    return f"d_{i} s_{j} identity fails at degree {q} on {s}"
    if q + 2 <= x.q_max:
        for j in range(q + 1):
            for i in range(j + 1):
                lhs = x.degeneracy(q + 1, i, x.degeneracy(q, j, s))
                rhs = x.degeneracy(q + 1, j + 1, x.degeneracy(q, i, s))
                if lhs != rhs:
                    return f"s_{i} s_{j} != s_{j+1} s_{i} at degree {q} on {s}"
    return None


def _cyclic_identities(x, q, s):
    t = x.rotate(q, s)
    out = s
    for _ in range(q + 1):
        out = x.rotate(q, out)
    if out != s:
        return f"t^{q+1} != id at degree {q} on {s}"
    if q >= 1:
        if x.face(q, 0, t) != x.face(q, q, s):
            return f"d_0 t != d_q at degree {q} on {s}"
        for i in range(1, q + 1):
            if x.face(q, i, t) != x.rotate(q - 1, x.face(q, i - 1, s)):
                return f"d_{i} t != t d_{i-1} at degree {q} on {s}"
    if q < x.q_max:
        for i in range(1, q + 1):
            if x.degeneracy(q, i, t) != x.rotate(q + 1, x.degeneracy(q, i - 1, s)):
                return f"s_{i} t != t s_{i-1} at degree {q} on {s}"
        twice = x.rotate(q + 1, x.rotate(q + 1, x.degeneracy(q, q, s)))
        if x.degeneracy(q, 0, t) != twice:
            return f"s_0 t != t^2 s_q at degree {q} on {s}"
    return None


def _real_identities(x, q, s):
    w = x.invol(q, s)
    if x.invol(q, w) != s:
        return f"w^2 != id at degree {q} on {s}"
    if q >= 1:
        for i in range(q + 1):
            if x.face(q, i, w) != x.invol(q - 1, x.face(q, q - i, s)):
                return f"d_{i} w != w d_{q-i} at degree {q} on {s}"
    if q < x.q_max:
        for i in range(q + 1):
            if x.degeneracy(q, i, w) != x.invol(q + 1, x.degeneracy(q, q - i, s)):
                return f"s_{i} w != w s_{q-i} at degree {q} on {s}"
    return None


def _levelwise_identities(x, q, s):
    maps = []
    if x.has_rotation:
        maps.append(("rotation", x.rotate, x.cyclic_order or 1))
    if x.has_involution:
        maps.append(("reflection", x.invol, 2))
    for name, op, order in maps:
        out = s
        for _ in range(order):
            out = op(q, out)
        if out != s:
            return f"levelwise {name} does not have order {order} at degree {q} on {s}"
        if q >= 1:
            for i in range(q + 1):
                if x.face(q, i, op(q, s)) != op(q - 1, x.face(q, i, s)):
                    return (
                        f"levelwise {name} does not commute with d_{i} "
                        f"at degree {q} on {s}"
                    )
        if q < x.q_max:
            for i in range(q + 1):
                if x.degeneracy(q, i, op(q, s)) != op(q + 1, x.degeneracy(q, i, s)):
                    return (
                        f"levelwise {name} does not commute with s_{i} "
                        f"at degree {q} on {s}"
                    )
    return None


# ---------------------------------------------------------------------------
# monoid nerves
# ---------------------------------------------------------------------------


def _vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _l1(v):
    return sum(abs(c) for c in v)


def _compositions(total, slots, cache):
    """All tuples of ``slots`` cached unit vectors summing to ``total``."""
    if slots == 0:
        if total == 0:
            yield ()
        return
    if slots == 1:
        yield (cache[total],)
        return
    for first in range(total + 1):
        head = cache[first]
        for rest in _compositions(total - first, slots - 1, cache):
            yield (head,) + rest


def _tuples_of_weight(monoid, v, slots):
    """Tuples of monoid elements summing to ``v``; fast path for the
    nonnegative integers, generic weight fibers otherwise."""
    if monoid.rank == 1 and monoid.generators == ((1,),):
        total = v[0]
        if total < 0:
            return []
        cache = [(c,) for c in range(total + 1)]
        return list(_compositions(total, slots, cache))
    return weight_tuples(monoid, None, v, slots)


def _signed_permutation_sigma(monoid):
    """The involution as a coordinate map, required to preserve l1 norms."""
    w = monoid.w
    n = monoid.rank
    for i in range(n):
        nonzero = [abs(c) for c in w.row(i) if c]
        if nonzero != [1]:
            raise SpecError(
                "windowed truncations require a signed-permutation involution"
            )
    return lambda v: monoid.apply_w(v)


def windowed_simplex_tuples(monoid, slots, bound):
    """All ``slots``-tuples of monoid elements of total l1 norm <= bound."""
    per = {b: [e.vector for e in elements_in_ball(monoid, b)] for b in range(bound + 1)}
    out = []

    def rec(prefix, remaining):
        if len(prefix) == slots:
            out.append(tuple(prefix))
            return
        for v in per[remaining]:
            rec(prefix + [v], remaining - _l1(v))

    rec([], bound)
    return out


def normalize_orbit(monoid, orbit):
    """The involution orbit as a sorted tuple of weight vectors.

    ``orbit`` may be a single representative vector or an iterable of
    vectors; it is completed under the involution and must not meet more
    than one orbit.
    """
    orbit = tuple(orbit)
    if orbit and isinstance(orbit[0], int):
        orbit = (orbit,)
    vecs = sorted({tuple(v) for v in orbit})
    if not vecs:
        raise SpecError("empty weight orbit")
    full = sorted({vecs[0], monoid.apply_w(vecs[0])})
    if any(v not in full for v in vecs):
        raise SpecError(f"{vecs} meets more than one involution orbit")
    return tuple(full)


def dihedral_nerve_piece(monoid, orbit, q_max, window=None):
    """The weight piece of the cyclic bar construction of a monoid, as a
    truncated dihedral set.

    Args:
        monoid: an :class:`AffineMonoid`.
        orbit: one involution orbit of weight vectors (a vector or an
            iterable of vectors).
        q_max: truncation depth.
        window: optional bound on the total l1 norm of a simplex; required
            when the weight fibers are infinite (the maps preserve the
            window, so the truncation is an honest subobject).

    Raises:
        InfeasibleError: if a fiber is infinite and no window is given.
    """
    orbit = normalize_orbit(monoid, orbit)
    sigma = (
        _signed_permutation_sigma(monoid)
        if window is not None
        else monoid.apply_w
    )
    levels = []
    orbit_set = set(orbit)
    for q in range(q_max + 1):
        found = set()
        if window is None:
            for v in orbit:
                found.update(_tuples_of_weight(monoid, v, q + 1))
        else:
            for tup in windowed_simplex_tuples(monoid, q + 1, window):
                total = tup[0]
                for entry in tup[1:]:
                    total = _vec_add(total, entry)
                if total in orbit_set:
                    found.add(tup)
        levels.append(found)

    zero = tuple([0] * monoid.rank)

    def face(q, i, x):
        if i < q:
            return x[:i] + (_vec_add(x[i], x[i + 1]),) + x[i + 2 :]
        return (_vec_add(x[q], x[0]),) + x[1:q]

    def degeneracy(q, i, x):
        return x[: i + 1] + (zero,) + x[i + 1 :]

    def rotate(q, x):
        return (x[q],) + x[:q]

    def invol(q, x):
        return (sigma(x[0]),) + tuple(sigma(e) for e in reversed(x[1:]))

    certificate = None
    if window is None:
        try:
            lam = pointedness_functional(monoid)
            has_units = any(
                tuple(-c for c in g) in set(monoid.generators)
                for g in monoid.generators
            )
            if not has_units:
                bound = max(
                    int(sum(l * c for l, c in zip(lam, v))) for v in orbit
                )
                certificate = ("nondegenerate-bound", bound)
        except InfeasibleError:  # pragma: no cover - no functional, no bound
            certificate = None

    return TruncDihedralSet(
        q_max,
        levels,
        face,
        degeneracy,
        rotate=rotate,
        invol=invol,
        flag="dihedral",
        certificate=certificate,
    )


def real_nerve(monoid, q_max, window=None):
    """The one-sided bar construction with the order-reversing involution:
    ``q``-simplices are ``q``-tuples, the outer faces drop an entry and the
    reflection is ``(x_1, ..., x_q) -> (s(x_q), ..., s(x_1))``.

    A window (total l1 bound) is required whenever the monoid has any
    generator, since the nerve is then degreewise infinite.
    """
    if monoid.generators and window is None:
        raise SpecError("real_nerve: a window is required for an infinite monoid")
    sigma = (
        _signed_permutation_sigma(monoid)
        if window is not None
        else monoid.apply_w
    )
    zero = tuple([0] * monoid.rank)
    if window is not None:
        levels = [windowed_simplex_tuples(monoid, q, window) for q in range(q_max + 1)]
    else:
        levels = [[(zero,) * q] for q in range(q_max + 1)]

    def face(q, i, x):
        if i == 0:
            return x[1:]
        if i == q:
            return x[:-1]
        return x[: i - 1] + (_vec_add(x[i - 1], x[i]),) + x[i + 1 :]

    def degeneracy(q, i, x):
        return x[:i] + (zero,) + x[i:]

    def invol(q, x):
        return tuple(sigma(e) for e in reversed(x))

    return TruncDihedralSet(
        q_max,
        levels,
        face,
        degeneracy,
        invol=invol,
        flag="real",
    )


def circle_model(q_max=3):
    """The minimal real simplicial circle: one nondegenerate simplex in
    degrees zero and one, identity reflection on both.

    Simplices in degree ``q`` are the basepoint ``('P',)`` and the jump
    classes ``('J', j)`` for ``1 <= j <= q`` (the nonconstant monotone maps
    to the one-simplex, recorded by where they jump).
    """
    levels = [
        [("P",)] + [("J", j) for j in range(1, q + 1)] for q in range(q_max + 1)
    ]

    def face(q, i, x):
        if x[0] == "P":
            return x
        j = x[1]
        if i < j:
            return ("P",) if j - 1 == 0 else ("J", j - 1)
        return ("P",) if j > q - 1 else ("J", j)

    def degeneracy(q, i, x):
        if x[0] == "P":
            return x
        j = x[1]
        return ("J", j + 1) if i < j else ("J", j)

    def invol(q, x):
        if x[0] == "P":
            return x
        return ("J", q + 1 - x[1])

    return TruncDihedralSet(
        q_max,
        levels,
        face,
        degeneracy,
        invol=invol,
        flag="real",
        certificate=("nondegenerate-bound", 1),
    )


def trivial_monoid(rank=1):
    """The one-element monoid inside ``Z^rank``."""
    return AffineMonoid([], rank=rank)


# ---------------------------------------------------------------------------
# operator algebra and edgewise subdivision
# ---------------------------------------------------------------------------


def apply_monotone(x, n, mu, s):
    """Act by a monotone map ``mu: [m] -> [n]`` on a degree-``n`` simplex
    through the epi-mono factorization: strip duplicates into degeneracies,
    then apply the skipped values as faces from the largest down."""
    mu = tuple(mu)
    for a in range(len(mu) - 1):
        if mu[a] == mu[a + 1]:
            inner = apply_monotone(x, n, mu[:a] + mu[a + 1 :], s)
            return x.degeneracy(len(mu) - 2, a, inner)
    out = s
    deg = n
    for b in sorted(set(range(n + 1)) - set(mu), reverse=True):
        out = x.face(deg, b, out)
        deg -= 1
    return out


def _d_sigma(alpha, q):
    """The squaring-subdivision lift of ``alpha: [p] -> [q]``."""
    p = len(alpha) - 1
    return tuple(
        q - alpha[p - a] if a <= p else alpha[a - p - 1] + q + 1
        for a in range(2 * p + 2)
    )


def _d_r(alpha, q, r):
    """The r-fold cyclic-subdivision lift of ``alpha: [p] -> [q]``."""
    p = len(alpha) - 1
    return tuple(
        alpha[a % (p + 1)] + (a // (p + 1)) * (q + 1)
        for a in range(r * (p + 1))
    )


def _delta(q, i):
    """The face inclusion ``[q-1] -> [q]`` skipping ``i``, as values."""
    return tuple(v for v in range(q + 1) if v != i)


def _sigma_map(q, i):
    """The degeneracy ``[q+1] -> [q]`` repeating ``i``, as values."""
    return tuple(v if v <= i else v - 1 for v in range(q + 2))


def sd_sigma(x, q_out=None):
    """Squaring edgewise subdivision: degree ``q`` becomes old degree
    ``2q+1``, with the levelwise reflection of the input.

    The lifted operators are fixed under conjugation by the order reversal,
    so the reflection commutes with every subdivided face and degeneracy.
    """
    if not x.has_involution:
        raise SpecError("sd_sigma needs a reflection on the input")
    if q_out is None:
        q_out = (x.q_max - 1) // 2
    if q_out < 0 or 2 * q_out + 1 > x.q_max:
        raise SpecError(
            f"insufficient truncation depth {x.q_max} for output depth {q_out}"
        )
    levels = [x.simplices[2 * q + 1] for q in range(q_out + 1)]

    def face(q, i, s):
        return apply_monotone(x, 2 * q + 1, _d_sigma(_delta(q, i), q), s)

    def degeneracy(q, i, s):
        return apply_monotone(x, 2 * q + 1, _d_sigma(_sigma_map(q, i), q), s)

    def invol(q, s):
        return x.invol(2 * q + 1, s)

    return TruncDihedralSet(
        q_out,
        levels,
        face,
        degeneracy,
        invol=invol,
        flag="levelwise",
    )


def sd_r(x, r, q_out=None):
    """r-fold cyclic edgewise subdivision: degree ``q`` becomes old degree
    ``r(q+1) - 1``, with the levelwise ``C_r``-action ``t**(q+1)``.

    The input reflection (if any) is not carried over: it does not act
    simplicially on this subdivision.
    """
    if r < 1:
        raise SpecError("subdivision order must be at least 1")
    if not x.has_rotation:
        raise SpecError("sd_r needs a rotation on the input")
    if q_out is None:
        q_out = (x.q_max + 1) // r - 1
    if q_out < 0 or r * (q_out + 1) - 1 > x.q_max:
        raise SpecError(
            f"insufficient truncation depth {x.q_max} for output depth {q_out}"
        )
    levels = [x.simplices[r * (q + 1) - 1] for q in range(q_out + 1)]

    def face(q, i, s):
        return apply_monotone(x, r * (q + 1) - 1, _d_r(_delta(q, i), q, r), s)

    def degeneracy(q, i, s):
        return apply_monotone(x, r * (q + 1) - 1, _d_r(_sigma_map(q, i), q, r), s)

    def rotate(q, s):
        out = s
        for _ in range(q + 1):
            out = x.rotate(r * (q + 1) - 1, out)
        return out

    return TruncDihedralSet(
        q_out,
        levels,
        face,
        degeneracy,
        rotate=rotate,
        flag="levelwise",
        cyclic_order=r,
    )


def fixed_subset(x):
    """The simplices fixed by the levelwise reflection (or rotation), with
    the restricted structure maps.

    Raises:
        CertificateError: if any structure map fails to preserve the fixed
            simplices — that would mean the input action was not simplicial.
    """
    ops = []
    if x.has_involution:
        ops.append(x.invol)
    if x.has_rotation and x.flag == "levelwise":
        ops.append(x.rotate)
    if not ops:
        raise SpecError("fixed_subset needs a levelwise action")
    levels = []
    for q in range(x.q_max + 1):
        levels.append(
            [s for s in x.simplices[q] if all(op(q, s) == s for op in ops)]
        )
    fixed = [set(level) for level in levels]
    for q in range(x.q_max + 1):
        for s in levels[q]:
            if q >= 1:
                for i in range(q + 1):
                    if x.face(q, i, s) not in fixed[q - 1]:
                        raise CertificateError(
                            f"face d_{i} leaves the fixed simplices at degree "
                            f"{q} on {s}"
                        )
            if q < x.q_max:
                for i in range(q + 1):
                    if x.degeneracy(q, i, s) not in fixed[q + 1]:
                        raise CertificateError(
                            f"degeneracy s_{i} leaves the fixed simplices at "
                            f"degree {q} on {s}"
                        )
    return TruncDihedralSet(
        x.q_max,
        levels,
        x._face,
        x._degeneracy,
        invol=x._invol if x.has_involution else None,
        flag="levelwise" if x.has_involution else "simplicial",
        certificate=None,
    )


# ---------------------------------------------------------------------------
# path components
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Pi0Result:
    count: int
    representatives: tuple
    classes: dict


def _union_find(vertices, edges):
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    classes = {v: find(v) for v in vertices}
    reps = tuple(sorted(set(classes.values())))
    return Pi0Result(len(reps), reps, classes)


def pi0(x):
    """Path components of the truncation: vertices modulo edge endpoints."""
    vertices = x.simplices[0]
    edges = []
    if x.q_max >= 1:
        for e in x.simplices[1]:
            edges.append((x.face(1, 0, e), x.face(1, 1, e)))
    return _union_find(vertices, edges)


@dataclass(frozen=True)
class WindowedPi0:
    count: int
    stable: bool
    result: Pi0Result
    detail: str


def pi0_windowed(family, bound):
    """Path components of a windowed vertex/edge family, certified by
    stabilization.

    ``family(b)`` must return ``(vertices, edges)`` for window ``b``.  The
    components are computed at ``bound``, ``bound + 1`` and ``bound + 2``;
    the count is certified only if all three runs agree on the component
    count and on the partition of the innermost vertex set.
    """
    runs = {}
    for b in (bound, bound + 1, bound + 2):
        vertices, edges = family(b)
        runs[b] = _union_find(tuple(sorted(set(vertices))), tuple(edges))
    inner = runs[bound]
    stable = True
    detail = "stable across three windows"
    for b in (bound + 1, bound + 2):
        if runs[b].count != inner.count:
            stable = False
            detail = (
                f"component count drifts: {inner.count} at {bound} vs "
                f"{runs[b].count} at {b}"
            )
            break
        joined = {}
        consistent = True
        for v in inner.classes:
            key = runs[b].classes[v]
            if key in joined:
                consistent = consistent and joined[key] == inner.classes[v]
            else:
                joined[key] = inner.classes[v]
        if not consistent or len(joined) != inner.count:
            stable = False
            detail = f"partition on the inner window changes at bound {b}"
            break
    return WindowedPi0(inner.count, stable, inner, detail)


# ---------------------------------------------------------------------------
# witnesses for the structural comparison maps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ComparisonWitness:
    ok: bool
    degree_counts: tuple
    detail: str = "bijective and structure-compatible"

    def __bool__(self):
        return self.ok


def shuffle_iso_check(m, l, pair, q_max, window=None):
    """Verify that splitting a product-monoid nerve piece into its two
    coordinate projections is a bijection compatible with all four
    structure maps.

    ``pair = (v_m, v_l)`` are representative weights.  The image is the set
    of simplex pairs whose weight pair lies in the involution orbit of
    ``(v_m, v_l)`` (with the joint window bound when windowed); for a
    singleton orbit and no window this is the full product of the pieces.
    """
    v_m, v_l = tuple(pair[0]), tuple(pair[1])
    rank_m, rank_l = m.rank, l.rank
    gens = [tuple(g) + (0,) * rank_l for g in m.generators] + [
        (0,) * rank_m + tuple(g) for g in l.generators
    ]
    w_rows = []
    for i in range(rank_m):
        w_rows.append(tuple(m.w.row(i)) + (0,) * rank_l)
    for i in range(rank_l):
        w_rows.append((0,) * rank_m + tuple(l.w.row(i)))
    prod = AffineMonoid(gens, w=w_rows, rank=rank_m + rank_l)

    lhs = dihedral_nerve_piece(prod, (v_m + v_l,), q_max, window=window)
    piece_m = dihedral_nerve_piece(m, (v_m,), q_max, window=window)
    piece_l = dihedral_nerve_piece(l, (v_l,), q_max, window=window)
    orbit = set(normalize_orbit(prod, (v_m + v_l,)))

    def split(x):
        return (
            tuple(e[:rank_m] for e in x),
            tuple(e[rank_m:] for e in x),
        )

    def total(x):
        t = x[0]
        for e in x[1:]:
            t = _vec_add(t, e)
        return t

    counts = []
    for q in range(q_max + 1):
        image = {split(x) for x in lhs.simplices[q]}
        if len(image) != lhs.count(q):
            return ComparisonWitness(
                False, tuple(counts), f"shuffle not injective at degree {q}"
            )
        expected = set()
        with_m = [(a, total(a), sum(_l1(e) for e in a)) for a in piece_m.simplices[q]]
        with_l = [(b, total(b), sum(_l1(e) for e in b)) for b in piece_l.simplices[q]]
        for a, ta, na in with_m:
            for b, tb, nb in with_l:
                if ta + tb not in orbit:
                    continue
                if window is not None and na + nb > window:
                    continue
                expected.add((a, b))
        if image != expected:
            return ComparisonWitness(
                False,
                tuple(counts),
                f"shuffle image mismatch at degree {q}: "
                f"{len(image)} vs {len(expected)} simplices",
            )
        counts.append(len(image))

    for q in range(q_max + 1):
        for x in lhs.simplices[q]:
            a, b = split(x)
            if q >= 1:
                for i in range(q + 1):
                    fa, fb = split(lhs.face(q, i, x))
                    if (fa, fb) != (piece_m.face(q, i, a), piece_l.face(q, i, b)):
                        return ComparisonWitness(
                            False, tuple(counts), f"face d_{i} incompatible at {x}"
                        )
            if q < q_max:
                for i in range(q + 1):
                    fa, fb = split(lhs.degeneracy(q, i, x))
                    if (fa, fb) != (
                        piece_m.degeneracy(q, i, a),
                        piece_l.degeneracy(q, i, b),
                    ):
                        return ComparisonWitness(
                            False, tuple(counts), f"s_{i} incompatible at {x}"
                        )
            fa, fb = split(lhs.rotate(q, x))
            if (fa, fb) != (piece_m.rotate(q, a), piece_l.rotate(q, b)):
                return ComparisonWitness(
                    False, tuple(counts), f"rotation incompatible at {x}"
                )
            fa, fb = split(lhs.invol(q, x))
            if (fa, fb) != (piece_m.invol(q, a), piece_l.invol(q, b)):
                return ComparisonWitness(
                    False, tuple(counts), f"reflection incompatible at {x}"
                )
    return ComparisonWitness(True, tuple(counts))


def sign_splitting_check(monoid, j, q_max, window):
    """Verify that dropping the zeroth entry splits a two-element weight
    orbit piece as (which orbit representative) x (one-sided bar), as real
    simplicial sets, on an l1 window.

    ``monoid`` must be of rank one with the sign involution; ``j > 0``.
    """
    if j <= 0:
        raise SpecError("sign splitting needs a weight with a free orbit")
    orbit = normalize_orbit(monoid, ((j,),))
    if len(orbit) != 2:
        raise SpecError("weight orbit is not free")
    lhs = dihedral_nerve_piece(monoid, orbit, q_max, window=window)
    rep = orbit[1]  # the positive representative
    sigma = _signed_permutation_sigma(monoid)

    def total(x):
        t = x[0]
        for e in x[1:]:
            t = _vec_add(t, e)
        return t

    def to_pair(x):
        return (0 if total(x) == rep else 1, x[1:])

    counts = []
    for q in range(q_max + 1):
        image = {to_pair(x) for x in lhs.simplices[q]}
        if len(image) != lhs.count(q):
            return ComparisonWitness(
                False, tuple(counts), f"splitting not injective at degree {q}"
            )
        counts.append(len(image))

    def rhs_face(q, i, pair):
        a, y = pair
        if i == 0:
            return (a, y[1:])
        if i == q:
            return (a, y[:-1])
        return (a, y[: i - 1] + (_vec_add(y[i - 1], y[i]),) + y[i + 1 :])

    def rhs_degeneracy(q, i, pair):
        a, y = pair
        zero = tuple([0] * monoid.rank)
        return (a, y[:i] + (zero,) + y[i:])

    def rhs_invol(q, pair):
        a, y = pair
        return (1 - a, tuple(sigma(e) for e in reversed(y)))

    for q in range(q_max + 1):
        for x in lhs.simplices[q]:
            p = to_pair(x)
            if q >= 1:
                for i in range(q + 1):
                    if to_pair(lhs.face(q, i, x)) != rhs_face(q, i, p):
                        return ComparisonWitness(
                            False, tuple(counts), f"face d_{i} incompatible at {x}"
                        )
            if q < q_max:
                for i in range(q + 1):
                    if to_pair(lhs.degeneracy(q, i, x)) != rhs_degeneracy(q, i, p):
                        return ComparisonWitness(
                            False, tuple(counts), f"s_{i} incompatible at {x}"
                        )
            if to_pair(lhs.invol(q, x)) != rhs_invol(q, p):
                return ComparisonWitness(
                    False, tuple(counts), f"reflection incompatible at {x}"
                )
    return ComparisonWitness(True, tuple(counts))


# ---------------------------------------------------------------------------
# power maps into cyclic subdivisions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PowerMapWitness:
    ok: bool
    degree_counts: tuple
    empty_weights: tuple
    detail: str = "bijective onto the fixed simplices, structure-compatible"

    def __bool__(self):
        return self.ok


def power_map_fixed_iso_check(j, r, q_max):
    """Verify that r-fold concatenation identifies the weight-``j`` nerve
    piece of the nonnegative integers with the ``C_r``-fixed simplices of
    the r-fold subdivision of the weight-``rj`` piece, compatibly with all
    structure maps — and that the fixed simplices are empty for the
    weights strictly between multiples of ``r``.
    """
    from .involutive_algebra import monoid_nat

    if j < 0 or r < 1:
        raise SpecError("need j >= 0 and r >= 1")
    nat = monoid_nat()
    big_depth = r * (q_max + 1) - 1
    small = dihedral_nerve_piece(nat, ((j,),), q_max)
    big = dihedral_nerve_piece(nat, ((r * j,),), big_depth)
    sub = sd_r(big, r, q_out=q_max)

    def power(x):
        return x * r

    counts = []
    for q in range(q_max + 1):
        fixed = {s for s in sub.simplices[q] if sub.rotate(q, s) == s}
        image = {power(x) for x in small.simplices[q]}
        if image != fixed:
            return PowerMapWitness(
                False,
                tuple(counts),
                (),
                f"power map not bijective at degree {q}: "
                f"{len(image)} vs {len(fixed)}",
            )
        counts.append(len(fixed))

    for q in range(q_max + 1):
        level = r * (q + 1) - 1
        for x in small.simplices[q]:
            px = power(x)
            if q >= 1:
                for i in range(q + 1):
                    if power(small.face(q, i, x)) != sub.face(q, i, px):
                        return PowerMapWitness(
                            False, tuple(counts), (),
                            f"face d_{i} incompatible at {x}",
                        )
            if q < q_max:
                for i in range(q + 1):
                    if power(small.degeneracy(q, i, x)) != sub.degeneracy(
                        q, i, px
                    ):
                        return PowerMapWitness(
                            False, tuple(counts), (),
                            f"s_{i} incompatible at {x}",
                        )
            if power(small.rotate(q, x)) != big.rotate(level, px):
                return PowerMapWitness(
                    False, tuple(counts), (), f"rotation incompatible at {x}"
                )
            if power(small.invol(q, x)) != big.invol(level, px):
                return PowerMapWitness(
                    False, tuple(counts), (), f"reflection incompatible at {x}"
                )

    empties = []
    if r > 1:
        for weight in range(r * j + 1, r * j + r):
            cache = [(c,) for c in range(weight + 1)]
            for q in range(q_max + 1):
                level = r * (q + 1) - 1
                period = q + 1
                for tup in _compositions(weight, level + 1, cache):
                    if tup[:period] * r == tup:
                        return PowerMapWitness(
                            False,
                            tuple(counts),
                            tuple(empties),
                            f"unexpected fixed simplex of weight {weight} "
                            f"at degree {q}: {tup}",
                        )
            empties.append(weight)
    return PowerMapWitness(True, tuple(counts), tuple(empties))
