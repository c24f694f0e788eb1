"""The split operadic cochain complex in a window.

A cochain at bidegree (w, t) over a horizontal resolution P with graded
coefficients M has components

    psi_0 on single inputs from the horizontal-degree-w cells,
    psi_1 on (s mu; x1, x2) with the input cells' horizontal degrees
          summing to w - 1,
    psi_2 on (s^2 Gamma; x1, x2, x3) summing to w - 2,

each valued in M at the sum of the inputs' vertical degrees minus t.
Weight three is never materialized: cocycle conditions involving it are
certified through the bicomplex-algebra relations instead.

The differential implements the displayed weight-split instance formulas
verbatim, with the Koszul-sign exponents taking the preset generators'
degrees (zero) unsuspended.  Coefficients are the homology algebra carried
by P, acted on through the augmentation; over the initial operad any graded
module is accepted since no action is used.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import (
    ChainComplex,
    ExtensionClass2,
    GradedModule,
    HorizontalResolutionAlgebra,
    extension_class,
    homology,
)
from .fragments import InfinityMorphismFragment, MinimalModelFragment, induced_horizontal_resolution
from .linalg import Matrix, kernel_with_lattice, solve_with_lattice, subquotient
from .operads import alpha_sign_exponent, permute_inputs


@dataclass
class CochainSpace:
    """Coordinates of C^{w,t}(P, M) inside the window."""

    P: HorizontalResolutionAlgebra
    M: GradedModule
    w: int
    t: int
    keys: list = field(default_factory=list)
    target: dict = field(default_factory=dict)  # key -> M-degree
    offset: dict = field(default_factory=dict)  # key -> coordinate offset
    dim: int = 0
    complete: bool = True

    def __post_init__(self):
        self._build()

    def _cells(self):
        return [pq for pq in self.P.window.cells() if self.P.rank(pq)]

    def _mdeg(self, vsum):
        return vsum - self.t

    def _build(self):
        P, w = self.P, self.w
        cells = self._cells()
        for pq in cells:
            if pq[0] != w:
                continue
            for i in range(P.rank(pq)):
                self._add_key((0, pq, i), self._mdeg(pq[1]))
        gen = P.preset.generator
        if gen is not None and w >= 1:
            for pq1 in cells:
                for pq2 in cells:
                    if pq1[0] + pq2[0] != w - 1:
                        continue
                    for i in range(P.rank(pq1)):
                        for j in range(P.rank(pq2)):
                            self._add_key(
                                (1, pq1, i, pq2, j), self._mdeg(pq1[1] + pq2[1])
                            )
        if gen is not None and w >= 2:
            for pq1 in cells:
                for pq2 in cells:
                    for pq3 in cells:
                        if pq1[0] + pq2[0] + pq3[0] != w - 2:
                            continue
                        for i in range(P.rank(pq1)):
                            for j in range(P.rank(pq2)):
                                for k in range(P.rank(pq3)):
                                    self._add_key(
                                        (2, pq1, i, pq2, j, pq3, k),
                                        self._mdeg(pq1[1] + pq2[1] + pq3[1]),
                                    )

    def _add_key(self, key, mdeg):
        known = self.M.known_degrees
        if known is not None and mdeg not in known:
            # the coefficient module is unknown here, not zero
            self.complete = False
            return
        rank = self.M.module(mdeg).ambient_rank
        if rank == 0:
            return
        self.keys.append(key)
        self.target[key] = mdeg
        self.offset[key] = self.dim
        self.dim += rank

    def zero_values(self):
        ring = self.P.ring
        return {k: [ring.zero()] * self.M.module(self.target[k]).ambient_rank for k in self.keys}

    def to_vec(self, values):
        ring = self.P.ring
        out = [ring.zero()] * self.dim
        for k in self.keys:
            v = values.get(k)
            if v is None:
                continue
            off = self.offset[k]
            for s, c in enumerate(v):
                out[off + s] = c
        return out

    def from_vec(self, vec):
        out = {}
        for k in self.keys:
            off = self.offset[k]
            rank = self.M.module(self.target[k]).ambient_rank
            out[k] = list(vec[off : off + rank])
        return out

    def relation_lattice(self):
        """Block-diagonal relation matrix for all coordinate targets."""
        ring = self.P.ring
        cols = []
        for k in self.keys:
            mod = self.M.module(self.target[k])
            for j in range(mod.relations.cols):
                col = [ring.zero()] * self.dim
                off = self.offset[k]
                for i in range(mod.ambient_rank):
                    col[off + i] = mod.relations.data[i][j]
                cols.append(col)
        out = Matrix.zeros(ring, self.dim, len(cols))
        for j, c in enumerate(cols):
            for i in range(self.dim):
                out.data[i][j] = c[i]
        return out

    def values_are_zero(self, values):
        for k in self.keys:
            v = values.get(k)
            if v is None:
                continue
            if not self.M.module(self.target[k]).element_is_zero(v):
                return False
        return True

    def constraint_matrix(self):
        """Rows cutting out the preset's cochain subspace.

        Commutative cochains vanish on shuffles (represented in the
        associative model); Lie cochains are graded skew-symmetric in the
        weight-one component and alternating in the relation component.
        """
        ring = self.P.ring
        kind = self.P.preset.symmetry
        rows = []
        if kind in ("symmetric", "antisymmetric"):
            seen = set()
            for key in self.keys:
                if key[0] == 1:
                    _, pq1, i, pq2, j = key
                    mirror = (1, pq2, j, pq1, i)
                    pair = tuple(sorted((key, mirror), key=repr))
                    if pair in seen or mirror not in self.offset:
                        continue
                    seen.add(pair)
                    d1 = pq1[0] + pq1[1]
                    d2 = pq2[0] + pq2[1]
                    sgn = 1 if (d1 * d2) % 2 == 0 else -1
                    # shuffle vanishing: psi(x,y) + (-1)^{|x||y|} psi(y,x) = 0
                    # Lie skewness:      psi(y,x) + (-1)^{|x||y|} psi(x,y) = 0
                    # both reduce to a two-term relation with the Koszul sign
                    rank = self.M.module(self.target[key]).ambient_rank
                    for s in range(rank):
                        row = [ring.zero()] * self.dim
                        if key == mirror:
                            # diagonal pair: constraint only when the sign is +1
                            if sgn == 1 and kind == "symmetric":
                                continue
                            if sgn == -1 and kind == "antisymmetric":
                                continue
                            row[self.offset[key] + s] = ring.from_int(2)
                        else:
                            row[self.offset[key] + s] = ring.one()
                            row[self.offset[mirror] + s] = ring.from_int(sgn)
                        rows.append(row)
                elif key[0] == 2:
                    rows.extend(self._triple_constraints(key))
        out = Matrix.zeros(ring, len(rows), self.dim)
        for i, r in enumerate(rows):
            out.data[i] = list(r)
        return out

    def _triple_constraints(self, key):
        """Shuffle (commutative) or alternating (Lie) conditions on triples."""
        ring = self.P.ring
        kind = self.P.preset.symmetry
        _, pq1, i, pq2, j, pq3, k = key
        slots = ((pq1, i), (pq2, j), (pq3, k))
        degs = tuple(pq[0] + pq[1] for pq, _ in slots)
        rank = self.M.module(self.target[key]).ambient_rank
        rows = []

        def keyed(perm):
            # perm maps output positions to input slots (0-based one-line)
            sl = [slots[p] for p in perm]
            kk = (1 + 1, sl[0][0], sl[0][1], sl[1][0], sl[1][1], sl[2][0], sl[2][1])
            return kk if kk in self.offset else None

        def koszul(perm):
            sign = 0
            for a in range(3):
                for b in range(a + 1, 3):
                    if perm[a] > perm[b]:
                        sign += degs[perm[a]] * degs[perm[b]]
            return -1 if sign % 2 else 1

        if kind == "symmetric":
            # Harrison: vanish on the (1,2)- and (2,1)-shuffle sums
            shuffles = [
                [(0, 1, 2), (1, 0, 2), (1, 2, 0)],
                [(0, 1, 2), (0, 2, 1), (2, 0, 1)],
            ]
        else:
            # alternating: psi(perm) - sgn*koszul*psi(id) = 0 for transpositions
            shuffles = None
        if shuffles is not None:
            for family in shuffles:
                for s in range(rank):
                    row = [ring.zero()] * self.dim
                    ok = True
                    for perm in family:
                        kk = keyed(perm)
                        if kk is None:
                            ok = False
                            break
                        row[self.offset[kk] + s] = ring.add(
                            row[self.offset[kk] + s], ring.from_int(koszul(perm))
                        )
                    if ok and any(not ring.is_zero(x) for x in row):
                        rows.append(row)
            return rows
        for perm, parity in (((1, 0, 2), -1), ((0, 2, 1), -1)):
            kk = keyed(perm)
            if kk is None:
                continue
            if kk == key:
                continue
            for s in range(rank):
                row = [ring.zero()] * self.dim
                row[self.offset[kk] + s] = ring.one()
                row[self.offset[key] + s] = ring.from_int(-parity * koszul(perm))
                rows.append(row)
        return rows


@dataclass
class CochainWT:
    space: CochainSpace
    values: dict

    @property
    def w(self):
        return self.space.w

    @property
    def t(self):
        return self.space.t

    def is_zero(self):
        return self.space.values_are_zero(self.values)


def _action_matrix(P: HorizontalResolutionAlgebra, M, sym, m_deg, pq_x, xvec, side):
    """Matrix of m -> mu(m, rho(x)) (side='left') or mu(rho(x), m) on ambient
    coordinates of M; zero when x has positive horizontal degree."""
    ring = P.ring
    src = M.module(m_deg)
    tgt = M.module(m_deg + pq_x[1])
    out = Matrix.zeros(ring, tgt.ambient_rank, src.ambient_rank)
    if pq_x[0] != 0:
        return out
    rho_x = P.rho_vec(pq_x, xvec)
    H = P.H
    for s in range(src.ambient_rank):
        unit = [ring.zero()] * src.ambient_rank
        unit[s] = ring.one()
        if side == "left":
            col = H.mul_vec(sym, m_deg, unit, pq_x[1], rho_x)
        else:
            col = H.mul_vec(sym, pq_x[1], rho_x, m_deg, unit)
        for r, c in enumerate(col):
            out.data[r][s] = c
    return out


class _Assembler:
    """Accumulates d(psi) values given a psi lookup."""

    def __init__(self, space_out: CochainSpace, psi_space: CochainSpace, psi_values):
        self.out_space = space_out
        self.psi_space = psi_space
        self.psi = psi_values
        self.ring = space_out.P.ring
        self.out = space_out.zero_values()
        self.complete = True

    def add(self, out_key, vec, sign_exp):
        if out_key not in self.out_space.offset:
            return
        ring = self.ring
        s = ring.from_int(-1 if sign_exp % 2 else 1)
        acc = self.out[out_key]
        for k, x in enumerate(vec):
            acc[k] = ring.add(acc[k], ring.mul(s, x))

    def add_psi0_of(self, out_key, pq, vec, sign_exp):
        """out += sign * psi_0(1; vec) for a cell vector."""
        ring = self.ring
        if pq[0] != self.psi_space.w:
            return
        P = self.psi_space.P
        for i, c in enumerate(vec):
            if ring.is_zero(c):
                continue
            key = (0, pq, i)
            val = self.psi.get(key)
            if val is None:
                continue
            acc = self.out[out_key] if out_key in self.out_space.offset else None
            if acc is None:
                return
            s = ring.mul(ring.from_int(-1 if sign_exp % 2 else 1), c)
            for k, x in enumerate(val):
                acc[k] = ring.add(acc[k], ring.mul(s, x))

    def add_psi1_of(self, out_key, pq1, v1, pq2, v2, sign_exp):
        """out += sign * psi_1(s mu; v1, v2) extended bilinearly."""
        ring = self.ring
        if pq1[0] + pq2[0] != self.psi_space.w - 1:
            return
        if out_key not in self.out_space.offset:
            return
        acc = self.out[out_key]
        for i, a in enumerate(v1):
            if ring.is_zero(a):
                continue
            for j, b in enumerate(v2):
                if ring.is_zero(b):
                    continue
                val = self.psi.get((1, pq1, i, pq2, j))
                if val is None:
                    continue
                s = ring.mul(ring.from_int(-1 if sign_exp % 2 else 1), ring.mul(a, b))
                for k, x in enumerate(val):
                    acc[k] = ring.add(acc[k], ring.mul(s, x))

    def add_psi2_of(self, out_key, pqs, vecs, sign_exp):
        ring = self.ring
        if sum(pq[0] for pq in pqs) != self.psi_space.w - 2:
            return
        if out_key not in self.out_space.offset:
            return
        acc = self.out[out_key]
        for i, a in enumerate(vecs[0]):
            if ring.is_zero(a):
                continue
            for j, b in enumerate(vecs[1]):
                if ring.is_zero(b):
                    continue
                for k, c in enumerate(vecs[2]):
                    if ring.is_zero(c):
                        continue
                    val = self.psi.get((2, pqs[0], i, pqs[1], j, pqs[2], k))
                    if val is None:
                        continue
                    s = ring.mul(
                        ring.from_int(-1 if sign_exp % 2 else 1),
                        ring.mul(ring.mul(a, b), c),
                    )
                    for r, x in enumerate(val):
                        acc[r] = ring.add(acc[r], ring.mul(s, x))


def cochain_differential(psi: CochainWT) -> CochainWT:
    """d: C^{w,t} -> C^{w+1,t}, the displayed instance formulas verbatim."""
    space = psi.space
    P, M, w, t = space.P, space.M, space.w, space.t
    out_space = CochainSpace(P, M, w + 1, t)
    asm = _Assembler(out_space, space, psi.values)
    ring = P.ring
    gen = P.preset.generator

    for key in out_space.keys:
        if key[0] == 0:
            _, pq, i = key
            dvec = P.d1_vec(pq, P_unit(P, pq, i))
            asm.add_psi0_of(key, (pq[0] - 1, pq[1]), dvec, w + 1)
        elif key[0] == 1:
            _, pq1, i, pq2, j = key
            sym = gen.symbol
            x1 = P_unit(P, pq1, i)
            x2 = P_unit(P, pq2, j)
            degs = (pq1[0] + pq1[1], pq2[0] + pq2[1])
            # first sum: mu with one M-valued slot through psi_0
            for slot in (1, 2):
                beta = sum(degs[: slot - 1]) % 2
                exp = (t + (beta + 1) * (w + t)) % 2
                if slot == 1:
                    mdeg = pq1[1] - t
                    act = _action_matrix(P, M, sym, mdeg, pq2, x2, "left")
                    val = _lookup0(space, psi.values, pq1, i)
                else:
                    mdeg = pq2[1] - t
                    act = _action_matrix(P, M, sym, mdeg, pq1, x1, "right")
                    val = _lookup0(space, psi.values, pq2, j)
                if val is not None:
                    asm.add(key, act.mul_vec(val), exp)
            # second term: -(-1)^w psi_0(1; mu(x1, x2))
            prod = P.product_vec(sym, pq1, x1, pq2, x2)
            asm.add_psi0_of(key, (pq1[0] + pq2[0], pq1[1] + pq2[1]), prod, w + 1)
            # third sum: +(-1)^{w+beta} psi_1(s mu; .. d1 x_i ..)
            asm.add_psi1_of(key, (pq1[0] - 1, pq1[1]), P.d1_vec(pq1, x1), pq2, x2, w)
            asm.add_psi1_of(key, pq1, x1, (pq2[0] - 1, pq2[1]), P.d1_vec(pq2, x2), (w + degs[0]) % 2)
        else:
            _, pq1, i, pq2, j, pq3, k = key
            rel = P.preset.relations[0]
            pqs = (pq1, pq2, pq3)
            vecs = (P_unit(P, pq1, i), P_unit(P, pq2, j), P_unit(P, pq3, k))
            degs = tuple(pq[0] + pq[1] for pq in pqs)
            for term in rel.terms:
                ppq = permute_inputs(term.sigma, pqs)
                pv = permute_inputs(term.sigma, vecs)
                alpha = alpha_sign_exponent(term.sigma, degs)
                inv = _inv_deglist(term.sigma, degs)
                l = term.position
                before = sum(inv[: l - 1]) % 2
                theta = (alpha + w + (1 + w + t) * before) % 2
                delta = alpha % 2
                csign = 0 if term.coeff == 1 else 1
                # first: mu1 acting on the psi_1(s mu2; ..) value
                if l == 1:
                    mdeg = ppq[0][1] + ppq[1][1] - t
                    act = _action_matrix(P, M, term.mu1, mdeg, ppq[2], pv[2], "left")
                    val = _lookup1(space, psi.values, ppq[0], pv[0], ppq[1], pv[1])
                else:
                    mdeg = ppq[1][1] + ppq[2][1] - t
                    act = _action_matrix(P, M, term.mu1, mdeg, ppq[0], pv[0], "right")
                    val = _lookup1(space, psi.values, ppq[1], pv[1], ppq[2], pv[2])
                if val is not None:
                    asm.add(key, act.mul_vec(val), theta + csign)
                # second: psi_1(s mu1; with mu2-product inside)
                if l == 1:
                    prod = P.product_vec(term.mu2, ppq[0], pv[0], ppq[1], pv[1])
                    ipq = (ppq[0][0] + ppq[1][0], ppq[0][1] + ppq[1][1])
                    asm.add_psi1_of(key, ipq, prod, ppq[2], pv[2], (w + delta + csign) % 2)
                else:
                    prod = P.product_vec(term.mu2, ppq[1], pv[1], ppq[2], pv[2])
                    ipq = (ppq[1][0] + ppq[2][0], ppq[1][1] + ppq[2][1])
                    asm.add_psi1_of(key, ppq[0], pv[0], ipq, prod, (w + delta + csign) % 2)
            # last sum: -(-1)^{w+gamma} psi_2(s^2 Gamma; .. d1 x_i ..)
            for slot in (1, 2, 3):
                gammae = sum(degs[: slot - 1]) % 2
                npqs = list(pqs)
                nvecs = list(vecs)
                npqs[slot - 1] = (pqs[slot - 1][0] - 1, pqs[slot - 1][1])
                nvecs[slot - 1] = P.d1_vec(pqs[slot - 1], vecs[slot - 1])
                asm.add_psi2_of(key, tuple(npqs), tuple(nvecs), (w + gammae + 1) % 2)
    return CochainWT(out_space, asm.out)


def P_unit(P, pq, i):
    ring = P.ring
    v = [ring.zero()] * P.rank(pq)
    v[i] = ring.one()
    return v


def _inv_deglist(sigma, degs):
    return [d for d in permute_inputs(sigma, degs)]


def _lookup0(space, values, pq, i):
    key = (0, pq, i)
    return values.get(key)


def _lookup1(space, values, pq1, v1, pq2, v2):
    """Bilinear psi_1 lookup on cell vectors; None when out of support."""
    ring = space.P.ring
    if pq1[0] + pq2[0] != space.w - 1:
        return None
    out = None
    for i, a in enumerate(v1):
        if ring.is_zero(a):
            continue
        for j, b in enumerate(v2):
            if ring.is_zero(b):
                continue
            val = values.get((1, pq1, i, pq2, j))
            if val is None:
                continue
            if out is None:
                out = [ring.zero()] * len(val)
            c = ring.mul(a, b)
            for k, x in enumerate(val):
                out[k] = ring.add(out[k], ring.mul(c, x))
    return out


def differential_matrix(space: CochainSpace):
    """The differential C^{w,t} -> C^{w+1,t} as a coordinate matrix."""
    ring = space.P.ring
    out_space = CochainSpace(space.P, space.M, space.w + 1, space.t)
    D = Matrix.zeros(ring, out_space.dim, space.dim)
    for key in space.keys:
        off = space.offset[key]
        rank = space.M.module(space.target[key]).ambient_rank
        for s in range(rank):
            values = space.zero_values()
            values[key][s] = ring.one()
            img = cochain_differential(CochainWT(space, values))
            col = img.space.to_vec(img.values)
            for r, c in enumerate(col):
                D.data[r][off + s] = c
    return D, out_space


@dataclass
class CohomologyWindowResult:
    module: object
    complete: bool


def cohomology_window(P, M, w, t) -> CohomologyWindowResult:
    """ker/im of the split complex at (w, t) within the window.

    The completeness flag drops when the outgoing differential has
    unmaterialized weight-three components (non-initial presets at w >= 2)
    or when the window clips contributing cells.
    """
    space = CochainSpace(P, M, w, t)
    D_out, _ = differential_matrix(space)
    complete = space.complete
    if P.preset.generator is not None and w + 1 >= 3:
        complete = False
    boundaries = None
    if w >= 1:
        prev = CochainSpace(P, M, w - 1, t)
        D_in, _ = differential_matrix(prev)
        C_prev = prev.constraint_matrix()
        if C_prev.rows:
            K = kernel_with_lattice(C_prev, None)
            boundaries = D_in.mul(K)
        else:
            boundaries = D_in
    out_space = CochainSpace(P, M, w + 1, t)
    target_rel = out_space.relation_lattice()
    constraints = space.constraint_matrix()
    outgoing = D_out
    lattice = target_rel if target_rel.cols else None
    if constraints.rows:
        ring = P.ring
        stacked = Matrix.zeros(ring, D_out.rows + constraints.rows, space.dim)
        for i in range(D_out.rows):
            stacked.data[i] = list(D_out.data[i])
        for i in range(constraints.rows):
            stacked.data[D_out.rows + i] = list(constraints.data[i])
        outgoing = stacked
        if lattice is not None:
            lat2 = Matrix.zeros(ring, stacked.rows, lattice.cols)
            for i in range(D_out.rows):
                lat2.data[i] = list(lattice.data[i])
            lattice = lat2
    sq = subquotient(
        P.ring,
        space.dim,
        outgoing,
        boundaries,
        ambient_relations=space.relation_lattice(),
        outgoing_target_relations=lattice,
    )
    return CohomologyWindowResult(sq.module, complete)


def universal_massey_cocycle(
    M_frag: MinimalModelFragment,
    f: InfinityMorphismFragment,
    H,
    P: HorizontalResolutionAlgebra | None = None,
) -> CochainWT:
    """(m_0, m_1, m_2) = (rho d_2, rho (s mu)_1, rho (s^2 Gamma)_0) at (2, -1)."""
    if P is None:
        P = induced_horizontal_resolution(f, M_frag, H)
    space = CochainSpace(P, H, 2, -1)
    values = space.zero_values()
    for key in space.keys:
        if key[0] == 0:
            _, pq, i = key
            img = M_frag.d2_vec(pq, M_frag.basis_vec(pq, i))
            values[key] = P.rho_vec((pq[0] - 2, pq[1] + 1), img)
        elif key[0] == 1:
            _, pq1, i, pq2, j = key
            sym = P.preset.generator.symbol
            img = M_frag.prod1_vec(sym, pq1, M_frag.basis_vec(pq1, i), pq2, M_frag.basis_vec(pq2, j))
            values[key] = P.rho_vec((pq1[0] + pq2[0] - 1, pq1[1] + pq2[1] + 1), img)
        else:
            _, pq1, i, pq2, j, pq3, k = key
            rel = P.preset.relations[0]
            img = M_frag.rel0_vec(
                rel.symbol,
                (pq1, pq2, pq3),
                (M_frag.basis_vec(pq1, i), M_frag.basis_vec(pq2, j), M_frag.basis_vec(pq3, k)),
            )
            values[key] = P.rho_vec(
                (pq1[0] + pq2[0] + pq3[0], pq1[1] + pq2[1] + pq3[1] + 1), img
            )
    return CochainWT(space, values)


def is_coboundary(psi: CochainWT):
    """Solve d(phi) = psi for phi one weight lower, subject to the preset's
    cochain symmetry constraints.

    Returns (verdict, witness) with verdict in {"coboundary",
    "not-coboundary-in-window", "inconclusive"}; the witness is a CochainWT
    or None.
    """
    space = psi.space
    P, M = space.P, space.M
    ring = P.ring
    prev = CochainSpace(P, M, space.w - 1, space.t)
    D, out_space = differential_matrix(prev)
    target = out_space.to_vec(psi.values)
    constraints = prev.constraint_matrix()
    if constraints.rows:
        stacked = Matrix.zeros(ring, D.rows + constraints.rows, prev.dim)
        for i in range(D.rows):
            stacked.data[i] = list(D.data[i])
        for i in range(constraints.rows):
            stacked.data[D.rows + i] = list(constraints.data[i])
        D_full = stacked
        target = target + [ring.zero()] * constraints.rows
    else:
        D_full = D
    lattice = out_space.relation_lattice()
    if lattice.cols:
        lat = Matrix.zeros(ring, D_full.rows, lattice.cols)
        for i in range(min(D.rows, lattice.rows)):
            lat.data[i] = list(lattice.data[i])
    else:
        lat = None
    sol = solve_with_lattice(D_full, target, lat)
    if sol is not None:
        return "coboundary", CochainWT(prev, prev.from_vec(sol))
    if space.complete and prev.complete:
        return "not-coboundary-in-window", None
    return "inconclusive", None


def unit_universal_massey(C: ChainComplex):
    """Extension classes Ext^2(H_q, H_{q+1}) for every checkable degree q."""
    H = homology(C)
    out = {}
    for q in C.reliable_degrees():
        if q + 1 in H.groups and q + 2 in C.window and q - 1 in C.window:
            out[q] = extension_class(C, q, H)
    return out
