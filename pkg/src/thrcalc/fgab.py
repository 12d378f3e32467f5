"""Finitely generated abelian groups presented by integer relation matrices.

Elements of a group presented on n generators are length-n integer tuples
("coefficient vectors"); the group is the quotient of Z^n by the row lattice
of its relations matrix.  All arithmetic is exact, over Python ints.

Conventions
-----------
* Matrices act on the right of row vectors: a homomorphism with matrix F
  sends x to x @ F, and row i of F is the image of generator i.
* Group equality compares invariant factors and free rank only; two
  presentations of isomorphic groups compare equal.
"""

from __future__ import annotations

import itertools
from math import gcd


def _xgcd(a, b):
    """Extended gcd: returns (g, x, y) with g = a*x + b*y and g >= 0.

    >>> _xgcd(12, 18)
    (6, -1, 1)
    >>> _xgcd(0, -5)
    (5, 0, -1)
    """
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class Mat:
    """Immutable integer matrix, stored row-major as a tuple of tuples.

    >>> m = Mat([[1, 2], [3, 4]])
    >>> m.rows, m.cols
    (2, 2)
    >>> (m @ Mat.identity(2)) == m
    True
    >>> m.det()
    -2
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols=None):
        data = tuple(tuple(int(x) for x in row) for row in data)
        self.rows = len(data)
        if data:
            widths = {len(row) for row in data}
            if len(widths) != 1:
                raise ValueError("ragged matrix")
            self.cols = widths.pop()
            if cols is not None and cols != self.cols:
                raise ValueError("cols mismatch")
        else:
            if cols is None:
                raise ValueError("cols required for a matrix with no rows")
            self.cols = cols
        self.data = data

    @staticmethod
    def identity(n):
        return Mat([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @staticmethod
    def zeros(r, c):
        return Mat([[0] * c for _ in range(r)], cols=c)

    @staticmethod
    def row_vector(v):
        return Mat([list(v)], cols=len(v))

    def row(self, i):
        return self.data[i]

    def col(self, j):
        return tuple(row[j] for row in self.data)

    def transpose(self):
        return Mat([self.col(j) for j in range(self.cols)], cols=self.rows)

    def is_zero(self):
        return all(x == 0 for row in self.data for x in row)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ocols = other.cols
        odata = other.data
        out = []
        for row in self.data:
            acc = [0] * ocols
            for k, x in enumerate(row):
                if x:
                    orow = odata[k]
                    for j in range(ocols):
                        acc[j] += x * orow[j]
            out.append(acc)
        return Mat(out, cols=ocols)

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Mat([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
                   cols=self.cols)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Mat([[-a for a in row] for row in self.data], cols=self.cols)

    def scale(self, k):
        return Mat([[k * a for a in row] for row in self.data], cols=self.cols)

    def __eq__(self, other):
        return isinstance(other, Mat) and self.cols == other.cols and self.data == other.data

    def __hash__(self):
        return hash((self.cols, self.data))

    def __repr__(self):
        return f"Mat({[list(r) for r in self.data]!r}, cols={self.cols})"

    def det(self):
        """Determinant by the fraction-free Bareiss algorithm.

        >>> Mat([[2, 0], [0, 3]]).det()
        6
        >>> Mat([], cols=0).det()
        1
        """
        if self.rows != self.cols:
            raise ValueError("det of non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(row) for row in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


def hstack(a, b):
    if a.rows != b.rows:
        raise ValueError("row mismatch")
    return Mat([ra + rb for ra, rb in zip(a.data, b.data)], cols=a.cols + b.cols)


def vstack(a, b):
    if a.cols != b.cols:
        raise ValueError("col mismatch")
    return Mat(a.data + b.data, cols=a.cols)


def snf(m):
    """Smith normal form: returns (S, U, V) with U @ m @ V == S, U and V
    unimodular, and S diagonal with a divisibility chain d1 | d2 | ...

    >>> s, u, v = snf(Mat([[2, 0], [0, 3]]))
    >>> [s.data[i][i] for i in range(2)]
    [1, 6]
    >>> s2, u2, v2 = snf(Mat([[2, 4], [6, 8]]))
    >>> [s2.data[i][i] for i in range(2)]
    [2, 4]
    >>> (u2 @ Mat([[2, 4], [6, 8]]) @ v2) == s2
    True
    """
    r, c = m.rows, m.cols
    a = [list(row) for row in m.data]
    u = [[int(i == j) for j in range(r)] for i in range(r)]
    v = [[int(i == j) for j in range(c)] for i in range(c)]

    def row_combine(i1, i2, x, y, z, w):
        # rows (i1, i2) <- (x*row_i1 + y*row_i2, z*row_i1 + w*row_i2)
        for arr in (a, u):
            r1, r2 = arr[i1], arr[i2]
            for j in range(len(r1)):
                r1[j], r2[j] = x * r1[j] + y * r2[j], z * r1[j] + w * r2[j]

    def col_combine(j1, j2, x, y, z, w):
        for arr in (a, v):
            for row in arr:
                row[j1], row[j2] = x * row[j1] + y * row[j2], z * row[j1] + w * row[j2]

    def row_add(i_dst, i_src, k):
        for arr in (a, u):
            dst, src = arr[i_dst], arr[i_src]
            for j in range(len(dst)):
                dst[j] += k * src[j]

    def col_add(j_dst, j_src, k):
        for arr in (a, v):
            for row in arr:
                row[j_dst] += k * row[j_src]

    t = 0
    while t < min(r, c):
        # Pick the nonzero entry of least magnitude as the pivot.
        best = None
        for i in range(t, r):
            for j in range(t, c):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        if bi != t:
            a[bi], a[t] = a[t], a[bi]
            u[bi], u[t] = u[t], u[bi]
        if bj != t:
            for arr in (a, v):
                for row in arr:
                    row[bj], row[t] = row[t], row[bj]
        while True:
            dirty = False
            for i in range(r):
                if i != t and a[i][t]:
                    p, q = a[t][t], a[i][t]
                    if q % p == 0:
                        row_add(i, t, -(q // p))
                    else:
                        g, x, y = _xgcd(p, q)
                        row_combine(t, i, x, y, -(q // g), p // g)
                    dirty = True
            if any(a[i][t] for i in range(r) if i != t):
                continue
            for j in range(c):
                if j != t and a[t][j]:
                    p, q = a[t][t], a[t][j]
                    if q % p == 0:
                        col_add(j, t, -(q // p))
                    else:
                        g, x, y = _xgcd(p, q)
                        col_combine(t, j, x, y, -(q // g), p // g)
                    dirty = True
            if any(a[t][j] for j in range(c) if j != t) or any(a[i][t] for i in range(r) if i != t):
                continue
            # Divisibility sweep: the pivot must divide the rest of the block.
            p = a[t][t]
            offender = None
            for i in range(t + 1, r):
                for j in range(t + 1, c):
                    if a[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is not None:
                row_add(t, offender, 1)
                continue
            if not dirty or True:
                break
        t += 1
    for i in range(min(r, c)):
        if a[i][i] < 0:
            for arr in (a, u):
                arr[i] = [-x for x in arr[i]]
    return Mat(a, cols=c), Mat(u, cols=r), Mat(v, cols=c)


def row_kernel(m):
    """Basis (as rows) of the lattice {v in Z^rows : v @ m == 0}.

    >>> row_kernel(Mat([[2], [1]])).rows
    1
    >>> tuple(row_kernel(Mat([[2], [1]])).data[0]) in {(1, -2), (-1, 2)}
    True
    """
    s, u, v = snf(m)
    rank = sum(1 for i in range(min(m.rows, m.cols)) if s.data[i][i])
    return Mat([u.data[i] for i in range(rank, m.rows)], cols=m.rows)


def solve_left(m, y):
    """One integer solution x of x @ m == y, or None.

    >>> solve_left(Mat([[2, 0], [0, 3]]), (4, 6))
    (2, 2)
    >>> solve_left(Mat([[2]]), (3,)) is None
    True
    """
    s, u, v = snf(m)
    z = Mat.row_vector(y) @ v
    z = z.data[0]
    w = [0] * m.rows
    k = min(m.rows, m.cols)
    for i in range(m.cols):
        d = s.data[i][i] if i < k else 0
        if d:
            if z[i] % d:
                return None
            w[i] = z[i] // d
        else:
            if z[i]:
                return None
    x = Mat.row_vector(w) @ u
    return x.data[0]


def lattice_contains(m, y):
    """Whether y lies in the row lattice of m."""
    return solve_left(m, y) is not None


class FgAbGroup:
    """A finitely generated abelian group Z^n_gens / (row lattice of relations).

    The invariant factors (each >= 2, each dividing the next) and the free
    rank are computed once from the Smith normal form of the relations and
    cached; equality compares exactly these.

    >>> g = group(2, [[2, 0], [0, 3]])
    >>> g.invariant_factors, g.free_rank
    ((6,), 0)
    >>> g == group(1, [[6]])
    True
    >>> g.order()
    6
    """

    __slots__ = ("n_gens", "relations", "invariant_factors", "free_rank",
                 "_v", "_vinv", "_diag")

    def __init__(self, n_gens, relations):
        if relations.cols != n_gens:
            raise ValueError("relations width != n_gens")
        self.n_gens = n_gens
        self.relations = relations
        s, u, v = snf(relations)
        k = min(relations.rows, n_gens)
        diag = [s.data[i][i] if i < k else 0 for i in range(n_gens)]
        self._diag = tuple(diag)
        self._v = v
        self._vinv = _unimodular_inverse(v)
        self.invariant_factors = tuple(d for d in diag if d >= 2)
        self.free_rank = sum(1 for d in diag if d == 0)

    def reduce(self, x):
        """Canonical representative of the coset of x (a length-n tuple)."""
        if len(x) != self.n_gens:
            raise ValueError("element length mismatch")
        y = list((Mat.row_vector(x) @ self._v).data[0])
        for i, d in enumerate(self._diag):
            if d:
                y[i] %= d
        return tuple(y)

    def is_zero(self, x):
        return all(c == 0 for c in self.reduce(x))

    def same_element(self, x, y):
        return self.reduce(x) == self.reduce(y)

    def zero(self):
        return (0,) * self.n_gens

    def is_finite(self):
        return self.free_rank == 0

    def is_trivial(self):
        return self.free_rank == 0 and not self.invariant_factors

    def order(self):
        if not self.is_finite():
            raise ValueError("infinite group")
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def elements(self):
        """All elements of a finite group, as coefficient vectors (sorted).

        >>> sorted(group(1, [[4]]).elements())
        [(0,), (1,), (2,), (3,)]
        """
        if not self.is_finite():
            raise ValueError("infinite group")
        ranges = [range(d if d > 1 else 1) for d in self._diag]
        seen = {}
        for y in itertools.product(*ranges):
            x = tuple((Mat.row_vector(y) @ self._vinv).data[0])
            seen.setdefault(self.reduce(x), x)
        return sorted(seen.values())

    def __eq__(self, other):
        return (isinstance(other, FgAbGroup)
                and self.invariant_factors == other.invariant_factors
                and self.free_rank == other.free_rank)

    def __hash__(self):
        return hash((self.invariant_factors, self.free_rank))

    def __repr__(self):
        parts = [f"Z/{d}" for d in self.invariant_factors]
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}" if self.free_rank > 1 else "Z")
        return " + ".join(parts) if parts else "0"

    def describe(self):
        """Stable short description, e.g. 'Z/2 + Z/2 + Z'."""
        return repr(self)


def _unimodular_inverse(v):
    """Inverse of a unimodular matrix, computed via SNF bookkeeping."""
    s, u, w = snf(v)
    n = v.rows
    if any(s.data[i][i] != 1 for i in range(n)):
        raise ValueError("matrix is not unimodular")
    # u @ v @ w == I  =>  v^{-1} = w @ u
    return w @ u


def group(n_gens, relations):
    """Build an FgAbGroup from a generator count and relation rows.

    >>> group(2, []).free_rank
    2
    """
    rel = relations if isinstance(relations, Mat) else Mat(relations, cols=n_gens)
    return FgAbGroup(n_gens, rel)


def free_group(n):
    return group(n, Mat([], cols=n))


class GroupHom:
    """Homomorphism between presented groups, given by a matrix on generators.

    Well-definedness (every source relation lands in the target's relation
    lattice) is checked at construction.

    >>> z = free_group(1); z2 = group(1, [[2]])
    >>> f = hom(z, z2, [[1]])
    >>> f.apply((3,))
    (1,)
    >>> hom(z2, z, [[1]])
    Traceback (most recent call last):
        ...
    ValueError: not a well-defined homomorphism: relation (2,) maps outside the target relation lattice
    """

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source, target, matrix, _checked=False):
        if matrix.rows != source.n_gens or matrix.cols != target.n_gens:
            raise ValueError("hom matrix shape mismatch")
        if not _checked:
            for row in source.relations.data:
                img = (Mat.row_vector(row) @ matrix).data[0]
                if not target.is_zero(img):
                    raise ValueError(
                        f"not a well-defined homomorphism: relation {tuple(row)}"
                        " maps outside the target relation lattice")
        self.source = source
        self.target = target
        self.matrix = matrix

    def apply(self, x):
        return self.target.reduce((Mat.row_vector(x) @ self.matrix).data[0])

    def then(self, other):
        """The composite 'self followed by other'."""
        if other.source.n_gens != self.target.n_gens:
            raise ValueError("composition mismatch")
        return GroupHom(self.source, other.target, self.matrix @ other.matrix,
                        _checked=True)

    def __add__(self, other):
        return GroupHom(self.source, self.target, self.matrix + other.matrix,
                        _checked=True)

    def __sub__(self, other):
        return GroupHom(self.source, self.target, self.matrix - other.matrix,
                        _checked=True)

    def __neg__(self):
        return GroupHom(self.source, self.target, -self.matrix, _checked=True)

    def equal(self, other):
        """Equality as maps into the common target (matrices may differ)."""
        if self.matrix.rows != other.matrix.rows:
            return False
        diff = self.matrix - other.matrix
        return all(self.target.is_zero(row) for row in diff.data)

    def is_zero_map(self):
        return all(self.target.is_zero(row) for row in self.matrix.data)

    def __repr__(self):
        return f"GroupHom({self.source!r} -> {self.target!r})"


def hom(source, target, rows):
    m = rows if isinstance(rows, Mat) else Mat(rows, cols=target.n_gens)
    return GroupHom(source, target, m)


def identity_hom(g):
    return GroupHom(g, g, Mat.identity(g.n_gens), _checked=True)


def zero_hom(source, target):
    return GroupHom(source, target, Mat.zeros(source.n_gens, target.n_gens),
                    _checked=True)


def _subquotient(n, sub_rows, quot_rows):
    """Present (lattice(sub_rows) + lattice(quot_rows)) / lattice(quot_rows).

    Generators are the rows of sub_rows; the relation lattice is
    {c : c @ sub_rows in lattice(quot_rows)}.
    """
    if sub_rows.rows == 0:
        return group(0, Mat([], cols=0))
    stacked = vstack(sub_rows, quot_rows) if quot_rows.rows else sub_rows
    ker = row_kernel(stacked)
    rel = Mat([row[:sub_rows.rows] for row in ker.data], cols=sub_rows.rows)
    return FgAbGroup(sub_rows.rows, rel)


def kernel(f):
    """Kernel subgroup with its inclusion: returns (K, incl: K -> source).

    >>> z = free_group(1)
    >>> k, incl = kernel(hom(z, group(1, [[2]]), [[1]]))
    >>> k == z
    True
    >>> incl.apply((1,)) in {(2,), (-2,)}
    True
    """
    src, tgt = f.source, f.target
    stacked = vstack(f.matrix, tgt.relations) if tgt.relations.rows else f.matrix
    ker = row_kernel(stacked)
    rows = [row[:src.n_gens] for row in ker.data]
    for row in src.relations.data:
        rows.append(tuple(row))
    sub = Mat(rows, cols=src.n_gens)
    # Drop rows that are zero in the source (no information).
    keep = [row for row in sub.data if not src.is_zero(row)]
    sub = Mat(keep, cols=src.n_gens)
    k = _subquotient(src.n_gens, sub, src.relations)
    incl = GroupHom(k, src, sub, _checked=True)
    return k, incl


def cokernel(f):
    """Cokernel with its projection: returns (C, proj: target -> C).

    >>> z = free_group(1)
    >>> c, proj = cokernel(hom(z, z, [[2]]))
    >>> c == group(1, [[2]])
    True
    """
    tgt = f.target
    rel = vstack(tgt.relations, f.matrix) if tgt.relations.rows else f.matrix
    c = FgAbGroup(tgt.n_gens, rel)
    proj = GroupHom(tgt, c, Mat.identity(tgt.n_gens), _checked=True)
    return c, proj


def image(f):
    """The image of f as an abstract group.

    >>> z = free_group(1)
    >>> image(hom(z, group(1, [[4]]), [[2]])) == group(1, [[2]])
    True
    """
    tgt = f.target
    sub = f.matrix
    keep = [row for row in sub.data if not tgt.is_zero(row)]
    return _subquotient(tgt.n_gens, Mat(keep, cols=tgt.n_gens), tgt.relations)


def _kernel_lattice(f):
    """Rows spanning {x in Z^n_src : f(x) == 0 in target} (includes source
    relations)."""
    src, tgt = f.source, f.target
    stacked = vstack(f.matrix, tgt.relations) if tgt.relations.rows else f.matrix
    ker = row_kernel(stacked)
    rows = [row[:src.n_gens] for row in ker.data] + [tuple(r) for r in src.relations.data]
    return Mat(rows, cols=src.n_gens) if rows else Mat([], cols=src.n_gens)


class ExactnessReport:
    """Result of an exactness check; truthy iff exact, with a certificate
    string describing the first failure otherwise."""

    __slots__ = ("ok", "detail")

    def __init__(self, ok, detail):
        self.ok = ok
        self.detail = detail

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return f"ExactnessReport(ok={self.ok}, detail={self.detail!r})"


def is_exact(seq):
    """Exactness of a composable sequence of GroupHoms at every inner joint.

    Image and kernel at each joint are compared by lattice membership in
    both directions.

    >>> z = free_group(1); z2 = group(1, [[2]])
    >>> bool(is_exact([hom(z, z, [[2]]), hom(z, z2, [[1]])]))
    True
    >>> bool(is_exact([hom(z, z, [[4]]), hom(z, z2, [[1]])]))
    False
    """
    for a, b in zip(seq, seq[1:]):
        if a.target.n_gens != b.source.n_gens:
            return ExactnessReport(False, "sequence is not composable")
        mid = a.target
        comp = a.then(b)
        if not comp.is_zero_map():
            return ExactnessReport(False, "composite is nonzero")
        ker_rows = _kernel_lattice(b)
        im_rows = vstack(a.matrix, mid.relations) if mid.relations.rows else a.matrix
        for row in ker_rows.data:
            if solve_left(im_rows, row) is None:
                return ExactnessReport(
                    False, f"kernel element {tuple(row)} is not in the image")
        for row in im_rows.data:
            if solve_left(ker_rows, row) is None:
                return ExactnessReport(
                    False, f"image element {tuple(row)} is not in the kernel")
    return ExactnessReport(True, "exact at every joint")


def inverse(f):
    """Two-sided inverse of an isomorphism, or None.

    >>> z = free_group(1)
    >>> inverse(hom(z, z, [[-1]])).matrix.data
    ((-1,),)
    >>> inverse(hom(z, z, [[2]])) is None
    True
    """
    src, tgt = f.source, f.target
    stacked = vstack(f.matrix, tgt.relations) if tgt.relations.rows else f.matrix
    rows = []
    for j in range(tgt.n_gens):
        e = tuple(int(i == j) for i in range(tgt.n_gens))
        sol = solve_left(stacked, e)
        if sol is None:
            return None
        rows.append(sol[:src.n_gens])
    mat = Mat(rows, cols=src.n_gens) if rows else Mat([], cols=src.n_gens)
    try:
        g = GroupHom(tgt, src, mat)
    except ValueError:
        return None
    if not f.then(g).equal(identity_hom(src)):
        return None
    if not g.then(f).equal(identity_hom(tgt)):
        return None
    return g


def is_isomorphism(f):
    return inverse(f) is not None


def lift_through(incl, h):
    """Given incl: K -> M with trivial kernel and h: A -> M landing in the
    image of incl, return the unique g: A -> K with g.then(incl) == h.

    >>> z = free_group(1)
    >>> two = hom(z, z, [[2]])
    >>> lift_through(two, hom(z, z, [[6]])).matrix.data
    ((3,),)
    """
    k, m = incl.source, incl.target
    stacked = vstack(incl.matrix, m.relations) if m.relations.rows else incl.matrix
    rows = []
    for row in h.matrix.data:
        sol = solve_left(stacked, row)
        if sol is None:
            raise ValueError("map does not factor through the inclusion")
        rows.append(sol[:k.n_gens])
    mat = Mat(rows, cols=k.n_gens) if rows else Mat([], cols=k.n_gens)
    g = GroupHom(h.source, k, mat)
    if not g.then(incl).equal(h):
        raise ValueError("factorization check failed")
    kk, _ = kernel(incl)
    if not kk.is_trivial():
        raise ValueError("inclusion is not injective; lift not unique")
    return g


def direct_sum(g, h):
    """Direct sum with structure maps: (G+H, incl_g, incl_h, proj_g, proj_h).

    >>> s, i1, i2, p1, p2 = direct_sum(free_group(1), group(1, [[2]]))
    >>> s.free_rank, s.invariant_factors
    (1, (2,))
    """
    n, m = g.n_gens, h.n_gens
    rel_rows = [tuple(r) + (0,) * m for r in g.relations.data]
    rel_rows += [(0,) * n + tuple(r) for r in h.relations.data]
    s = group(n + m, Mat(rel_rows, cols=n + m) if rel_rows else Mat([], cols=n + m))
    i1 = GroupHom(g, s, hstack(Mat.identity(n), Mat.zeros(n, m)) if n else Mat([], cols=n + m),
                  _checked=True)
    i2 = GroupHom(h, s, hstack(Mat.zeros(m, n), Mat.identity(m)) if m else Mat([], cols=n + m),
                  _checked=True)
    p1 = GroupHom(s, g, vstack(Mat.identity(n), Mat.zeros(m, n)) if n + m else Mat([], cols=n),
                  _checked=True)
    p2 = GroupHom(s, h, vstack(Mat.zeros(n, m), Mat.identity(m)) if n + m else Mat([], cols=m),
                  _checked=True)
    return s, i1, i2, p1, p2


def tensor_index(nh, i, j):
    """Flat index of generator pair (i, j) with second factor width nh."""
    return i * nh + j


def tensor(g, h):
    """Tensor product over Z, presented on generator pairs.

    >>> tensor(group(1, [[2]]), group(1, [[3]])).is_trivial()
    True
    >>> tensor(group(1, [[4]]), group(1, [[6]])) == group(1, [[2]])
    True
    """
    ng, nh = g.n_gens, h.n_gens
    n = ng * nh
    rows = []
    for r in g.relations.data:
        for j in range(nh):
            row = [0] * n
            for i, ri in enumerate(r):
                row[tensor_index(nh, i, j)] = ri
            rows.append(row)
    for r in h.relations.data:
        for i in range(ng):
            row = [0] * n
            for j, rj in enumerate(r):
                row[tensor_index(nh, i, j)] = rj
            rows.append(row)
    return group(n, Mat(rows, cols=n) if rows else Mat([], cols=n))


def pure_tensor(nh, x, y):
    """Coefficient vector of x (x) y on tensor generators."""
    out = [0] * (len(x) * nh)
    for i, xi in enumerate(x):
        if xi:
            for j, yj in enumerate(y):
                if yj:
                    out[tensor_index(nh, i, j)] += xi * yj
    return tuple(out)


def tensor_hom(t, g, h, target, values):
    """Homomorphism tensor(g, h) -> target from values on generator pairs.

    values[i*h.n_gens + j] is the image of the pair (i, j); bilinear
    well-definedness is exactly the hom check over the tensor presentation.
    """
    mat = Mat(values, cols=target.n_gens) if values else Mat([], cols=target.n_gens)
    return GroupHom(t, target, mat)


def tensor_of_homs(t_src, t_tgt, f, g):
    """Induced map tensor(f.source, g.source) -> tensor(f.target, g.target)."""
    nh_src = g.source.n_gens
    nh_tgt = g.target.n_gens
    rows = []
    for i in range(f.source.n_gens):
        for j in range(nh_src):
            rows.append(pure_tensor(nh_tgt, f.matrix.data[i], g.matrix.data[j]))
    mat = Mat(rows, cols=f.target.n_gens * nh_tgt) if rows else Mat([], cols=f.target.n_gens * nh_tgt)
    return GroupHom(t_src, t_tgt, mat)
