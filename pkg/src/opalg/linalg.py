"""Exact linear algebra over the supported rings.

Smith normal form over the Euclidean rings (Z, Q, F_p, Q[t]) is the single
primitive behind solving, kernels, cokernels, presented modules, free
resolutions, and Ext.  Z/n is handled throughout by lifting matrices to the
integers and adjoining ``n * e_i`` columns to the relevant relation
lattices, so no zero-divisor pivoting ever happens.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rings import Ring, ZZ, Zmod


class Matrix:
    """Dense matrix with exact entries over a ring.

    Treat instances as immutable; algorithms copy their inputs.
    """

    __slots__ = ("ring", "rows", "cols", "data")

    def __init__(self, ring, data, rows=None, cols=None):
        self.ring = ring
        self.data = [list(r) for r in data]
        self.rows = len(self.data) if rows is None else rows
        self.cols = (len(self.data[0]) if self.data else 0) if cols is None else cols
        for r in self.data:
            if len(r) != self.cols:
                raise ValueError("ragged matrix data")

    @classmethod
    def zeros(cls, ring, rows, cols):
        z = ring.zero()
        return cls(ring, [[z] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, ring, n):
        m = cls.zeros(ring, n, n)
        one = ring.one()
        for i in range(n):
            m.data[i][i] = one
        return m

    @classmethod
    def from_int_rows(cls, ring, int_rows):
        return cls(ring, [[ring.from_int(x) for x in r] for r in int_rows])

    @classmethod
    def column(cls, ring, vec):
        return cls(ring, [[x] for x in vec], len(vec), 1)

    def copy(self):
        return Matrix(self.ring, self.data, self.rows, self.cols)

    def entry(self, i, j):
        return self.data[i][j]

    def col(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def columns(self):
        return [self.col(j) for j in range(self.cols)]

    def transpose(self):
        return Matrix(
            self.ring,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.cols,
            self.rows,
        )

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch {self.rows}x{self.cols} * {other.rows}x{other.cols}")
        R = self.ring
        out = Matrix.zeros(R, self.rows, other.cols)
        for i in range(self.rows):
            row = self.data[i]
            for k in range(self.cols):
                a = row[k]
                if R.is_zero(a):
                    continue
                ok = other.data[k]
                oi = out.data[i]
                for j in range(other.cols):
                    b = ok[j]
                    if not R.is_zero(b):
                        oi[j] = R.add(oi[j], R.mul(a, b))
        return out

    def mul_vec(self, vec):
        if self.cols != len(vec):
            raise ValueError("dimension mismatch in mul_vec")
        R = self.ring
        out = [R.zero()] * self.rows
        for i in range(self.rows):
            acc = R.zero()
            row = self.data[i]
            for j, x in enumerate(vec):
                if not R.is_zero(x) and not R.is_zero(row[j]):
                    acc = R.add(acc, R.mul(row[j], x))
            out[i] = acc
        return out

    def add(self, other):
        R = self.ring
        return Matrix(
            R,
            [
                [R.add(self.data[i][j], other.data[i][j]) for j in range(self.cols)]
                for i in range(self.rows)
            ],
            self.rows,
            self.cols,
        )

    def neg(self):
        R = self.ring
        return Matrix(
            R,
            [[R.neg(x) for x in row] for row in self.data],
            self.rows,
            self.cols,
        )

    def scale(self, c):
        R = self.ring
        return Matrix(
            R,
            [[R.mul(c, x) for x in row] for row in self.data],
            self.rows,
            self.cols,
        )

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return Matrix(
            self.ring,
            [self.data[i] + other.data[i] for i in range(self.rows)],
            self.rows,
            self.cols + other.cols,
        )

    def submatrix(self, row_idx, col_idx):
        return Matrix(
            self.ring,
            [[self.data[i][j] for j in col_idx] for i in row_idx],
            len(row_idx),
            len(col_idx),
        )

    def is_zero(self):
        R = self.ring
        return all(R.is_zero(x) for row in self.data for x in row)

    def eq(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            return False
        R = self.ring
        return all(
            R.eq(self.data[i][j], other.data[i][j])
            for i in range(self.rows)
            for j in range(self.cols)
        )

    def map_ring(self, ring, f):
        return Matrix(ring, [[f(x) for x in row] for row in self.data], self.rows, self.cols)

    def __repr__(self):
        return f"Matrix({self.ring}, {self.rows}x{self.cols})"


@dataclass
class SmithDecomposition:
    """U * A * V = D with U, V unimodular and D in Smith form."""

    U: Matrix
    D: Matrix
    V: Matrix

    def diagonal(self):
        n = min(self.D.rows, self.D.cols)
        return [self.D.data[i][i] for i in range(n)]


def _find_pivot(R, M, k, rows, cols):
    best = None
    best_key = None
    for i in range(k, rows):
        for j in range(k, cols):
            x = M[i][j]
            if R.is_zero(x):
                continue
            key = R.pivot_key(x)
            if best is None or key < best_key:
                best, best_key = (i, j), key
    return best


def smith_normal_form(A: Matrix) -> SmithDecomposition:
    """Smith normal form over a Euclidean ring (or a field).

    Returns U, D, V with U*A*V = D, the diagonal of D a divisibility chain
    of canonical associates (positive integers, monic polynomials, 1 over a
    field), and U, V invertible.
    """
    R = A.ring
    if not R.euclidean:
        raise ValueError(f"SNF requires a Euclidean ring, not {R}; lift Z/n first")
    m, n = A.rows, A.cols
    M = [row[:] for row in A.data]
    U = Matrix.identity(R, m).data
    V = Matrix.identity(R, n).data

    def row_swap(i1, i2):
        M[i1], M[i2] = M[i2], M[i1]
        U[i1], U[i2] = U[i2], U[i1]

    def col_swap(j1, j2):
        for row in M:
            row[j1], row[j2] = row[j2], row[j1]
        for row in V:
            row[j1], row[j2] = row[j2], row[j1]

    def row_addmul(dst, src, c):
        # row[dst] += c * row[src]
        Md, Ms = M[dst], M[src]
        Ud, Us = U[dst], U[src]
        for j in range(n):
            Md[j] = R.add(Md[j], R.mul(c, Ms[j]))
        for j in range(m):
            Ud[j] = R.add(Ud[j], R.mul(c, Us[j]))

    def col_addmul(dst, src, c):
        for row in M:
            row[dst] = R.add(row[dst], R.mul(c, row[src]))
        for row in V:
            row[dst] = R.add(row[dst], R.mul(c, row[src]))

    k = 0
    limit = min(m, n)
    while k < limit:
        loc = _find_pivot(R, M, k, m, n)
        if loc is None:
            break
        i, j = loc
        if i != k:
            row_swap(i, k)
        if j != k:
            col_swap(j, k)
        while True:
            # clear column k below the pivot
            dirty = False
            for i in range(k + 1, m):
                if R.is_zero(M[i][k]):
                    continue
                q, r = R.divmod(M[i][k], M[k][k])
                row_addmul(i, k, R.neg(q))
                if not R.is_zero(r):
                    row_swap(i, k)
                    dirty = True
            for j in range(k + 1, n):
                if R.is_zero(M[k][j]):
                    continue
                q, r = R.divmod(M[k][j], M[k][k])
                col_addmul(j, k, R.neg(q))
                if not R.is_zero(r):
                    col_swap(j, k)
                    dirty = True
            if dirty:
                continue
            if all(R.is_zero(M[i][k]) for i in range(k + 1, m)) and all(
                R.is_zero(M[k][j]) for j in range(k + 1, n)
            ):
                break
        k += 1

    rank = k
    # enforce the divisibility chain d_i | d_{i+1}
    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            a, b = M[i][i], M[i + 1][i + 1]
            if R.is_zero(b):
                continue
            if R.exact_div(b, a) is not None:
                continue
            # fold d_{i+1} into column i and re-reduce the 2x2 block
            col_addmul(i, i + 1, R.one())
            q, r = R.divmod(M[i + 1][i], M[i][i])
            if not R.is_zero(r):
                row_addmul(i + 1, i, R.neg(q))
                row_swap(i, i + 1)
            else:
                row_addmul(i + 1, i, R.neg(q))
            # clear the (i, i+1) entry created if any
            while not R.is_zero(M[i][i + 1]) or not R.is_zero(M[i + 1][i]):
                if not R.is_zero(M[i + 1][i]):
                    q, r = R.divmod(M[i + 1][i], M[i][i])
                    row_addmul(i + 1, i, R.neg(q))
                    if not R.is_zero(r):
                        row_swap(i, i + 1)
                if not R.is_zero(M[i][i + 1]):
                    q, r = R.divmod(M[i][i + 1], M[i][i])
                    col_addmul(i + 1, i, R.neg(q))
                    if not R.is_zero(r):
                        col_swap(i, i + 1)
            changed = True

    # normalize diagonal entries to canonical associates via V
    for i in range(rank):
        u = R.canonical_unit(M[i][i])
        if not R.eq(u, R.one()):
            c = R.inv_unit(u)
            for row in M:
                row[i] = R.mul(row[i], c)
            for row in V:
                row[i] = R.mul(row[i], c)

    return SmithDecomposition(
        Matrix(R, U, m, m), Matrix(R, M, m, n), Matrix(R, V, n, n)
    )


def matrix_inverse(A: Matrix) -> Matrix:
    """Inverse of a matrix that is invertible over its (Euclidean) ring."""
    R = A.ring
    if A.rows != A.cols:
        raise ValueError("only square matrices can be inverted")
    s = smith_normal_form(A)
    d = s.diagonal()
    if len(d) < A.rows or not all(R.is_unit(x) for x in d):
        raise ValueError("matrix is not invertible over its ring")
    # A^-1 = V * D^-1 * U
    VD = s.V.copy()
    for j in range(A.rows):
        c = R.inv_unit(d[j])
        for i in range(A.rows):
            VD.data[i][j] = R.mul(VD.data[i][j], c)
    return VD.mul(s.U)


# ---------------------------------------------------------------------------
# Z/n lifting helpers.  All solver-level routines funnel through these so
# the lift-and-adjoin-n*e_i convention lives in one place.
# ---------------------------------------------------------------------------


def _cover(ring):
    if ring.modulus is not None:
        return ZZ, ring.modulus
    return ring, None


def _lift(A: Matrix, cover):
    if A.ring.modulus is None:
        return A
    return A.map_ring(cover, lambda x: x % A.ring.modulus)


def _project_vec(ring, vec):
    if ring.modulus is None:
        return vec
    return [x % ring.modulus for x in vec]


def _augmented_lattice(cover, n, rows, lattice: Matrix | None):
    cols = []
    if lattice is not None and lattice.cols:
        lat = _lift(lattice, cover)
        cols.append(lat)
    if n is not None:
        cols.append(Matrix.identity(cover, rows).scale(cover.from_int(n)))
    if not cols:
        return None
    out = cols[0]
    for extra in cols[1:]:
        out = out.hstack(extra)
    return out


def solve_with_lattice(A: Matrix, b, lattice: Matrix | None = None):
    """Solve A*x = b modulo the column span of ``lattice`` (may be None).

    Over Z/n the congruence is additionally taken modulo n.  Returns the
    x-part of a solution, or None when no solution exists.
    """
    ring = A.ring
    if len(b) != A.rows:
        raise ValueError("dimension mismatch in solve")
    cover, n = _cover(ring)
    A0 = _lift(A, cover)
    L = _augmented_lattice(cover, n, A.rows, lattice)
    full = A0 if L is None else A0.hstack(L)
    bb = b if ring.modulus is None else [x % ring.modulus for x in b]
    s = smith_normal_form(full)
    R = cover
    c = s.U.mul_vec(bb)
    d = s.diagonal()
    y = [R.zero()] * full.cols
    for i in range(full.rows):
        di = d[i] if i < len(d) else R.zero()
        if R.is_zero(di):
            if not R.is_zero(c[i]):
                return None
        else:
            q = R.exact_div(c[i], di)
            if q is None:
                return None
            y[i] = q
    x = s.V.mul_vec(y)
    return _project_vec(ring, x[: A.cols])


def solve(A: Matrix, b):
    """Solve A*x = b exactly over the matrix ring; None when unsolvable."""
    return solve_with_lattice(A, b, None)


def solve_matrix(A: Matrix, B: Matrix, lattice: Matrix | None = None) -> Matrix | None:
    """Columnwise solve A*X = B (mod lattice); None if any column fails."""
    cols = []
    for j in range(B.cols):
        x = solve_with_lattice(A, B.col(j), lattice)
        if x is None:
            return None
        cols.append(x)
    out = Matrix.zeros(A.ring, A.cols, B.cols)
    for j, c in enumerate(cols):
        for i in range(A.cols):
            out.data[i][j] = c[i]
    return out


def kernel_with_lattice(A: Matrix, lattice: Matrix | None = None) -> Matrix:
    """Generators of {x : A*x lies in the lattice span} as matrix columns.

    With no lattice this is the plain kernel.  Over a Euclidean domain the
    columns are a basis; over Z/n they are a generating set.
    """
    ring = A.ring
    cover, n = _cover(ring)
    A0 = _lift(A, cover)
    L = _augmented_lattice(cover, n, A.rows, lattice)
    full = A0 if L is None else A0.hstack(L.neg())
    s = smith_normal_form(full)
    d = s.diagonal()
    R = cover
    ker_cols = []
    for j in range(full.cols):
        if j >= len(d) or R.is_zero(d[j] if j < len(d) else R.zero()):
            ker_cols.append(s.V.col(j))
    out_cols = []
    for col in ker_cols:
        x = _project_vec(ring, col[: A.cols])
        if any(not ring.is_zero(v) for v in x):
            out_cols.append(x)
    out = Matrix.zeros(ring, A.cols, len(out_cols))
    for j, c in enumerate(out_cols):
        for i in range(A.cols):
            out.data[i][j] = c[i]
    return out


def kernel(A: Matrix) -> Matrix:
    """Columns generating {x : A*x = 0}; satisfies A * kernel(A) = 0."""
    return kernel_with_lattice(A, None)


# ---------------------------------------------------------------------------
# Presented modules
# ---------------------------------------------------------------------------


class PresentedModule:
    """A finitely presented module: cokernel of its relation matrix.

    ``relations`` has ``ambient_rank`` rows; its columns are relations among
    the ambient generators.  Over Z/n the relations n*e_i are implicit.
    """

    def __init__(self, ring: Ring, ambient_rank: int, relations: Matrix | None = None):
        self.ring = ring
        self.ambient_rank = ambient_rank
        if relations is None:
            relations = Matrix.zeros(ring, ambient_rank, 0)
        if relations.rows != ambient_rank:
            raise ValueError("relations must have ambient_rank rows")
        self.relations = relations
        self._canon = None

    @classmethod
    def free(cls, ring, rank):
        return cls(ring, rank)

    @classmethod
    def zero(cls, ring):
        return cls(ring, 0)

    def zero_vec(self):
        return [self.ring.zero()] * self.ambient_rank

    def canonical_form(self):
        """(free_rank, sorted tuple of non-unit invariant factors).

        Over Z/n the "free" summands are copies of Z/n itself and torsion
        factors are proper divisors of n.  Factors are serialized through
        the ring so the form is hashable and comparable.
        """
        if self._canon is not None:
            return self._canon
        ring = self.ring
        cover, n = _cover(ring)
        A0 = _lift(self.relations, cover)
        if n is not None:
            A0 = A0.hstack(Matrix.identity(cover, self.ambient_rank).scale(n))
        d = smith_normal_form(A0).diagonal()
        factors = []
        nonzero = 0
        for x in d:
            if cover.is_zero(x):
                continue
            nonzero += 1
            if not cover.is_unit(x):
                factors.append(x)
        free_rank = self.ambient_rank - nonzero
        if n is not None:
            # torsion factors equal to n are free Z/n summands
            free_rank += sum(1 for x in factors if x % n == 0)
            factors = [x for x in factors if x % n != 0]
        key = tuple(sorted(cover.to_json(x) if not isinstance(cover.to_json(x), list)
                           else tuple(cover.to_json(x)) for x in factors))
        self._canon = (free_rank, key)
        return self._canon

    def is_zero_module(self):
        fr, factors = self.canonical_form()
        return fr == 0 and not factors

    def contains(self, vec):
        """Membership of an ambient vector in the relation lattice."""
        if len(vec) != self.ambient_rank:
            raise ValueError("vector length mismatch")
        return solve_with_lattice(self.relations, vec, None) is not None \
            if self.ring.modulus is None else \
            solve_with_lattice(self.relations, vec) is not None

    def element_is_zero(self, coords):
        return self.contains(coords)

    def elements_equal(self, a, b):
        R = self.ring
        return self.contains([R.sub(x, y) for x, y in zip(a, b)])

    def simplify(self):
        """Minimal presentation (diagonal non-unit relations).

        Returns (module, to_new, from_new) where ``to_new`` maps old ambient
        coordinates to new ones and ``from_new`` maps back, both inducing
        mutually inverse isomorphisms.
        """
        ring = self.ring
        cover, n = _cover(ring)
        A0 = _lift(self.relations, cover)
        if n is not None:
            A0 = A0.hstack(Matrix.identity(cover, self.ambient_rank).scale(n))
        s = smith_normal_form(A0)
        d = s.diagonal()
        keep = []
        diag = []
        for i in range(self.ambient_rank):
            di = d[i] if i < len(d) else cover.zero()
            if cover.is_unit(di):
                continue
            keep.append(i)
            diag.append(di)
        Uinv = matrix_inverse(s.U)
        new_rank = len(keep)
        rel_cols = []
        for i, di in zip(keep, diag):
            if cover.is_zero(di):
                continue
            if n is not None and di % n == 0:
                continue
            col = [cover.zero()] * new_rank
            col[keep.index(i)] = di
            rel_cols.append(col)
        rel = Matrix.zeros(ring, new_rank, len(rel_cols))
        for j, col in enumerate(rel_cols):
            for i in range(new_rank):
                rel.data[i][j] = ring.from_int(col[i]) if n is not None else col[i]
        mod = PresentedModule(ring, new_rank, rel)
        to_new_cover = s.U.submatrix(keep, range(self.ambient_rank))
        from_new_cover = Uinv.submatrix(range(self.ambient_rank), keep)
        if n is not None:
            to_new = to_new_cover.map_ring(ring, lambda x: x % n)
            from_new = from_new_cover.map_ring(ring, lambda x: x % n)
        else:
            to_new, from_new = to_new_cover, from_new_cover
        return mod, to_new, from_new

    def __repr__(self):
        fr, factors = self.canonical_form()
        return f"PresentedModule({self.ring}, free={fr}, torsion={list(factors)})"


def cokernel(A: Matrix) -> PresentedModule:
    """The cokernel of A presented on the codomain's standard generators."""
    return PresentedModule(A.ring, A.rows, A)


# ---------------------------------------------------------------------------
# Subquotients with explicit lifts: the homology engine
# ---------------------------------------------------------------------------


@dataclass
class Subquotient:
    """ker(outgoing)/im(incoming) inside an ambient module with relations.

    ``lift`` columns are ambient representatives of the module generators;
    ``project`` expresses an ambient cycle in those generators.
    """

    ambient_rank: int
    module: PresentedModule
    lift: Matrix
    _proj_matrix: Matrix = field(repr=False, default=None)

    def lift_vec(self, coords):
        return self.lift.mul_vec(coords)

    def project(self, vec):
        sol = solve_with_lattice(self._proj_matrix, vec, None)
        if sol is None:
            raise ValueError("vector is not a cycle in this subquotient")
        return sol[: self.module.ambient_rank]

    def is_zero_class(self, vec):
        return self.module.element_is_zero(self.project(vec))


def subquotient(
    ring: Ring,
    ambient_rank: int,
    outgoing: Matrix | None,
    incoming: Matrix | None,
    ambient_relations: Matrix | None = None,
    outgoing_target_relations: Matrix | None = None,
) -> Subquotient:
    """Build ker(outgoing)/(im(incoming) + ambient relations) with lift data.

    ``outgoing`` may be None (take the whole ambient as cycles); likewise
    ``incoming`` (no boundaries).  ``ambient_relations`` are relations of
    the ambient presented module (Z/n lifting is automatic and need not be
    included).  ``outgoing_target_relations`` are relations in the target of
    ``outgoing``: a cycle is x with outgoing*x inside that lattice.
    """
    if outgoing is None:
        cyc = Matrix.identity(ring, ambient_rank)
    else:
        lat = outgoing_target_relations
        cyc = kernel_with_lattice(outgoing, lat)
        if ambient_relations is not None and ambient_relations.cols:
            # relation-lattice vectors are cycles too; make sure they are
            # representable in the generators by adjoining them
            pass
    gens = cyc
    pieces = [gens]
    if incoming is not None and incoming.cols:
        pieces.append(incoming)
    if ambient_relations is not None and ambient_relations.cols:
        pieces.append(ambient_relations)
    stacked = pieces[0]
    for p in pieces[1:]:
        stacked = stacked.hstack(p)
    rel = kernel_with_lattice(stacked, None)
    rel_gen_part = rel.submatrix(range(gens.cols), range(rel.cols)) if rel.cols else Matrix.zeros(ring, gens.cols, 0)
    module = PresentedModule(ring, gens.cols, rel_gen_part)
    return Subquotient(ambient_rank, module, gens, stacked)


# ---------------------------------------------------------------------------
# Free resolutions and Ext
# ---------------------------------------------------------------------------


@dataclass
class FreeResolution:
    """F_len -> ... -> F_1 -> F_0 ->> M, an exact sequence of free modules.

    ``aug`` maps F_0 basis vectors to ambient coordinates of M; ``mats[i]``
    is the differential F_{i+1} -> F_i.
    """

    module: PresentedModule
    aug: Matrix
    mats: list

    def rank(self, i):
        if i == 0:
            return self.aug.cols
        if i <= len(self.mats):
            return self.mats[i - 1].cols
        return 0

    def mat(self, i):
        """Differential F_i -> F_{i-1} (zero matrix beyond the length)."""
        if 1 <= i <= len(self.mats):
            return self.mats[i - 1]
        return Matrix.zeros(self.module.ring, self.rank(i - 1), 0)


def free_resolution(M: PresentedModule, length: int) -> FreeResolution:
    """Resolve M by free modules to the requested length.

    Starts from the simplified presentation, so over a field F_1 = 0 and
    over a PID the resolution stops at length 1.  Composites of consecutive
    differentials vanish and exactness at inner spots is verified.
    """
    if length < 0:
        raise ValueError("length must be >= 0")
    ring = M.ring
    simp, _, from_new = M.simplify()
    aug = from_new
    mats = []
    prev = simp.relations
    if length >= 1:
        mats.append(prev)
    for _ in range(2, length + 1):
        k = kernel_with_lattice(prev, None)
        mats.append(k)
        prev = k
    res = FreeResolution(M, aug, mats)
    _verify_resolution(res, length)
    return res


def _verify_resolution(res: FreeResolution, length: int):
    ring = res.module.ring
    for i in range(1, length):
        comp = res.mat(i).mul(res.mat(i + 1))
        if not all(
            ring.is_zero(comp.data[a][b]) if ring.modulus is None else comp.data[a][b] % ring.modulus == 0
            for a in range(comp.rows)
            for b in range(comp.cols)
        ):
            raise AssertionError("resolution differentials do not compose to zero")
    # exactness at inner spots: ker(d_i) = im(d_{i+1})
    for i in range(1, length):
        h = subquotient(ring, res.rank(i), res.mat(i), res.mat(i + 1))
        if not h.module.is_zero_module():
            raise AssertionError(f"resolution not exact at position {i}")


@dataclass
class ExtData:
    """Ext^w with the resolution and subquotient used to compute it."""

    module: PresentedModule
    resolution: FreeResolution
    subq: Subquotient
    w: int
    coefficients: PresentedModule

    def project_hom(self, phi: Matrix):
        """Class of a cochain phi: F_w -> N given by an ambient matrix."""
        vec = []
        for j in range(phi.cols):
            vec.extend(phi.col(j))
        return self.subq.project(vec)


def _hom_complex_map(d: Matrix, n_amb: int) -> Matrix:
    """Induced map N^{a} -> N^{b} of phi -> phi∘d, on stacked coordinates."""
    ring = d.ring
    out = Matrix.zeros(ring, d.cols * n_amb, d.rows * n_amb)
    for j in range(d.cols):
        for s in range(d.rows):
            c = d.data[s][j]
            if ring.is_zero(c):
                continue
            for t in range(n_amb):
                out.data[j * n_amb + t][s * n_amb + t] = c
    return out


def _stacked_relations(N: PresentedModule, copies: int) -> Matrix | None:
    if not N.relations.cols:
        return None
    ring = N.ring
    n_amb = N.ambient_rank
    out = Matrix.zeros(ring, copies * n_amb, copies * N.relations.cols)
    for k in range(copies):
        for i in range(n_amb):
            for j in range(N.relations.cols):
                out.data[k * n_amb + i][k * N.relations.cols + j] = N.relations.data[i][j]
    return out


def ext_with_data(M: PresentedModule, N: PresentedModule, w: int) -> ExtData:
    """Ext^w(M, N) as cohomology of hom(free resolution of M, N)."""
    if M.ring != N.ring:
        raise ValueError("ext requires both modules over the same ring")
    if w < 0:
        raise ValueError("w must be >= 0")
    ring = M.ring
    res = free_resolution(M, w + 1)
    n_amb = N.ambient_rank
    a_w = res.rank(w)
    out_map = _hom_complex_map(res.mat(w + 1), n_amb) if res.rank(w + 1) else None
    if out_map is not None and out_map.rows == 0:
        out_map = None
    in_map = None
    if w >= 1 and res.rank(w - 1):
        in_map = _hom_complex_map(res.mat(w), n_amb)
    amb_rel = _stacked_relations(N, a_w)
    target_rel = _stacked_relations(N, res.rank(w + 1)) if out_map is not None else None
    sq = subquotient(
        ring,
        a_w * n_amb,
        out_map,
        in_map,
        ambient_relations=amb_rel,
        outgoing_target_relations=target_rel,
    )
    return ExtData(sq.module, res, sq, w, N)


def ext(M: PresentedModule, N: PresentedModule, w: int) -> PresentedModule:
    return ext_with_data(M, N, w).module
