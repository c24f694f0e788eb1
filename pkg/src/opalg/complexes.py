"""Chain complexes, bicomplexes, homology with lifts, and 2-extension classes.

Everything lives in a finite degree window.  Homology is only reported for
degrees whose neighbours are inside the window; queries outside that
reliable range raise ``DegreeUnavailable`` instead of returning zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import (
    Matrix,
    PresentedModule,
    Subquotient,
    ext_with_data,
    kernel_with_lattice,
    solve_matrix,
    solve_with_lattice,
    subquotient,
)


class DegreeUnavailable(Exception):
    """Raised when a degree outside the reliable window is queried."""


@dataclass(frozen=True)
class DegreeWindow:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("window lo must be <= hi")

    def __contains__(self, q):
        return self.lo <= q <= self.hi

    def degrees(self):
        return range(self.lo, self.hi + 1)


def _implicit_relations(ring, rank):
    """Ambient relations of a degreewise-free module (none; Z/n is implicit)."""
    return None


class ChainComplex:
    """Degreewise-free chain complex in a window, differential of degree -1."""

    def __init__(self, ring, window: DegreeWindow, basis, diffs):
        self.ring = ring
        self.window = window
        # basis: {q: [labels]}; absent degrees are zero
        self.basis = {q: list(basis.get(q, [])) for q in window.degrees()}
        self.diffs = {}
        for q in window.degrees():
            if q - 1 < window.lo:
                continue
            d = diffs.get(q)
            if d is None:
                d = Matrix.zeros(ring, self.rank(q - 1), self.rank(q))
            if d.rows != self.rank(q - 1) or d.cols != self.rank(q):
                raise ValueError(f"differential at degree {q} has wrong shape")
            self.diffs[q] = d
        self._check_d_squared()

    def rank(self, q):
        return len(self.basis.get(q, []))

    def diff(self, q):
        if q in self.diffs:
            return self.diffs[q]
        return Matrix.zeros(self.ring, self.rank(q - 1), self.rank(q))

    def _check_d_squared(self):
        for q in self.window.degrees():
            if q + 1 > self.window.hi or q - 1 < self.window.lo:
                continue
            comp = self.diff(q).mul(self.diff(q + 1))
            if not comp.is_zero():
                raise ValueError(f"d^2 != 0 at degree {q + 1}")

    def reliable_degrees(self):
        return range(self.window.lo + 1, self.window.hi)


@dataclass
class HomologyData:
    """Per-degree homology modules with cycle lifts and projections."""

    complex: ChainComplex
    groups: dict = field(default_factory=dict)  # q -> Subquotient

    def available(self, q):
        return q in self.groups

    def module(self, q) -> PresentedModule:
        if q not in self.groups:
            raise DegreeUnavailable(f"homology at degree {q} is outside the reliable window")
        return self.groups[q].module

    def cycle_lift(self, q, coords):
        if q not in self.groups:
            raise DegreeUnavailable(f"homology at degree {q} is outside the reliable window")
        return self.groups[q].lift_vec(coords)

    def project(self, q, chain_vec):
        if q not in self.groups:
            raise DegreeUnavailable(f"homology at degree {q} is outside the reliable window")
        return self.groups[q].project(chain_vec)


def homology(C: ChainComplex) -> HomologyData:
    """H_q = ker d_q / im d_{q+1} for every reliable degree q."""
    data = HomologyData(C)
    for q in C.reliable_degrees():
        data.groups[q] = subquotient(C.ring, C.rank(q), C.diff(q), C.diff(q + 1))
    return data


# ---------------------------------------------------------------------------
# Bicomplexes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BidegreeWindow:
    hmax: int
    vlo: int
    vhi: int

    def __post_init__(self):
        if self.hmax < 0:
            raise ValueError("horizontal bound must be >= 0 (right half plane)")
        if self.vlo > self.vhi:
            raise ValueError("vertical window lo must be <= hi")

    def cells(self):
        for p in range(0, self.hmax + 1):
            for q in range(self.vlo, self.vhi + 1):
                yield (p, q)

    def __contains__(self, pq):
        p, q = pq
        return 0 <= p <= self.hmax and self.vlo <= q <= self.vhi


class Bicomplex:
    """Right-half-plane bicomplex: d1 of bidegree (-1,0), d0 of (0,-1)."""

    def __init__(self, ring, window: BidegreeWindow, basis, d1, d0=None):
        self.ring = ring
        self.window = window
        self.basis = {pq: list(basis.get(pq, [])) for pq in window.cells()}
        self.d1 = dict(d1)
        self.d0 = dict(d0 or {})

    def rank(self, pq):
        return len(self.basis.get(pq, []))

    def mat_d1(self, p, q):
        m = self.d1.get((p, q))
        if m is None:
            return Matrix.zeros(self.ring, self.rank((p - 1, q)), self.rank((p, q)))
        return m

    def mat_d0(self, p, q):
        m = self.d0.get((p, q))
        if m is None:
            return Matrix.zeros(self.ring, self.rank((p, q - 1)), self.rank((p, q)))
        return m


def verify_bicomplex(B: Bicomplex):
    """Check d0^2 = 0, d1^2 = 0 and d0*d1 + d1*d0 = 0; list violations."""
    failures = []
    W = B.window
    for (p, q) in W.cells():
        if (p - 2, q) in W:
            if not B.mat_d1(p - 1, q).mul(B.mat_d1(p, q)).is_zero():
                failures.append(("d1^2", (p, q)))
        if (p, q - 2) in W:
            if not B.mat_d0(p, q - 1).mul(B.mat_d0(p, q)).is_zero():
                failures.append(("d0^2", (p, q)))
        if (p - 1, q - 1) in W and (p - 1, q) in W and (p, q - 1) in W:
            anti = B.mat_d0(p - 1, q).mul(B.mat_d1(p, q)).add(
                B.mat_d1(p, q - 1).mul(B.mat_d0(p, q))
            )
            if not anti.is_zero():
                failures.append(("anticommute", (p, q)))
    return VerificationReport(failures)


@dataclass
class VerificationReport:
    failures: list

    @property
    def ok(self):
        return not self.failures

    def __repr__(self):
        if self.ok:
            return "VerificationReport(ok)"
        return f"VerificationReport(failures={self.failures})"


# ---------------------------------------------------------------------------
# Graded modules and graded algebras (shared by dga / cochains / massey)
# ---------------------------------------------------------------------------


class GradedModule:
    """A finite window of presented modules over one ring.

    ``known_degrees`` distinguishes degrees that are genuinely zero from
    degrees outside the computed window; None means every degree is known.
    """

    def __init__(self, ring, components, known_degrees=None):
        self.ring = ring
        # components: {q: PresentedModule}; missing degrees are zero modules
        self.components = dict(components)
        self.known_degrees = known_degrees

    def module(self, q) -> PresentedModule:
        m = self.components.get(q)
        if m is None:
            return PresentedModule.zero(self.ring)
        return m

    def rank(self, q):
        return self.module(q).ambient_rank

    def degrees(self):
        return sorted(self.components)


class GradedAlgebra(GradedModule):
    """Graded module plus product tables for each operad generator symbol.

    ``products[sym][(q1, q2)]`` is a list-of-lists table: entry [i][j] is
    the ambient vector of the product of generator i of degree q1 with
    generator j of degree q2.
    """

    def __init__(self, ring, components, products, known_degrees=None):
        super().__init__(ring, components, known_degrees)
        self.products = products

    def product(self, sym, q1, i, q2, j):
        table = self.products.get(sym, {}).get((q1, q2))
        if table is None:
            return self.module(q1 + q2).zero_vec()
        return list(table[i][j])

    def mul_vec(self, sym, q1, v1, q2, v2):
        """Bilinear extension of the generator product table."""
        R = self.ring
        out = self.module(q1 + q2).zero_vec()
        for i, a in enumerate(v1):
            if R.is_zero(a):
                continue
            for j, b in enumerate(v2):
                if R.is_zero(b):
                    continue
                c = R.mul(a, b)
                prod = self.product(sym, q1, i, q2, j)
                for k, x in enumerate(prod):
                    out[k] = R.add(out[k], R.mul(c, x))
        return out


# ---------------------------------------------------------------------------
# Two-extension classes of a chain complex (initial-operad universal class)
# ---------------------------------------------------------------------------


@dataclass
class ExtensionClass2:
    """An element of Ext^2(H_q, H_{q+1}) attached to degree q."""

    q: int
    ext_module: PresentedModule
    value: list  # coordinates in ext_module's ambient generators

    def is_zero(self):
        return self.ext_module.element_is_zero(self.value)


def extension_class(C: ChainComplex, q: int, H: HomologyData | None = None) -> ExtensionClass2:
    """Class in Ext^2(H_q, H_{q+1}) of the two-extension

        H_{q+1} -> C_{q+1}/d(C_{q+2}) -> ker(C_q -> C_{q-1}) ->> H_q

    with the global sign flipped (the class of the opposite extension), as
    the derived universal Massey product of a complex demands.  Computed by
    lifting a free resolution of H_q through the extension.
    """
    W = C.window
    for d in (q - 1, q, q + 1, q + 2):
        if d not in W:
            raise DegreeUnavailable(f"extension class at q={q} needs degrees {q-1}..{q+2} in window")
    if H is None:
        H = homology(C)
    ring = C.ring
    Hq = H.groups[q]
    Hq1 = H.groups[q + 1]

    # E0 = ker(d_q) presented on Hq's cycle generators; the projection
    # E0 ->> H_q is then the identity on coordinates.
    e0_gens = Hq.lift  # ambient C_q columns
    # E1 = C_{q+1} / d(C_{q+2}): ambient generators of C_{q+1}, relations d_{q+2}
    e1_rel = C.diff(q + 2)
    # delta: E1 -> E0: x -> d_{q+1} x expressed in E0 generators
    delta_amb = C.diff(q + 1)
    delta = solve_matrix(e0_gens, delta_amb, None)
    if delta is None:
        raise AssertionError("boundary image does not lie in the cycle generators")
    # iota: H_{q+1} -> E1 on generators: cycle lifts, in E1 coordinates
    iota = Hq1.lift

    # free resolution of H_q (as presented module) and the comparison lift
    xd = ext_with_data(Hq.module, Hq1.module, 2)
    res = xd.resolution
    # phi0: F_0 -> E0 with pi*phi0 = augmentation; since pi is the identity
    # on coordinates, phi0 = aug.
    phi0 = res.aug
    # phi1: F_1 -> E1 with delta*phi1 = phi0*d1, solved modulo the genuine
    # coordinate relations of E0 (not modulo boundaries)
    e0_rel = kernel_with_lattice(e0_gens, None)
    rhs1 = phi0.mul(res.mat(1))
    phi1 = solve_matrix(delta, rhs1, e0_rel if e0_rel.cols else None)
    if phi1 is None:
        raise AssertionError("extension lift phi1 does not exist")
    # phi2: F_2 -> H_{q+1} with iota*phi2 = phi1*d2 (solve modulo E1 relations)
    rhs2 = phi1.mul(res.mat(2))
    phi2 = solve_matrix(iota, rhs2, e1_rel if e1_rel.cols else None)
    if phi2 is None:
        raise AssertionError("extension lift phi2 does not exist")
    value = xd.project_hom(phi2.neg())
    return ExtensionClass2(q, xd.module, value)


# ---------------------------------------------------------------------------
# Horizontal resolutions of graded algebras
# ---------------------------------------------------------------------------


class HorizontalResolutionAlgebra:
    """Minimal bicomplex algebra P with augmentation rho onto a graded algebra.

    ``products[sym][((p1,q1),(p2,q2))]`` maps basis pairs to vectors in the
    cell (p1+p2, q1+q2).  ``rho[q]`` is a matrix from P_{0,q} coordinates to
    ambient coordinates of H_q.
    """

    def __init__(self, ring, preset, window: BidegreeWindow, basis, d1, products, rho, H: GradedAlgebra):
        self.ring = ring
        self.preset = preset
        self.window = window
        self.basis = {pq: list(basis.get(pq, [])) for pq in window.cells()}
        self.d1 = dict(d1)
        self.products = products
        self.rho = dict(rho)
        self.H = H

    def rank(self, pq):
        return len(self.basis.get(pq, []))

    def mat_d1(self, p, q):
        m = self.d1.get((p, q))
        if m is None:
            return Matrix.zeros(self.ring, self.rank((p - 1, q)), self.rank((p, q)))
        return m

    def d1_vec(self, pq, vec):
        p, q = pq
        if p - 1 < 0:
            return []
        return self.mat_d1(p, q).mul_vec(vec)

    def product_vec(self, sym, pq1, v1, pq2, v2):
        """Bilinear product of cell vectors; zero when the target cell is absent."""
        R = self.ring
        target = (pq1[0] + pq2[0], pq1[1] + pq2[1])
        out = [R.zero()] * self.rank(target)
        table = self.products.get(sym, {}).get((pq1, pq2))
        if table is None:
            return out
        for i, a in enumerate(v1):
            if R.is_zero(a):
                continue
            for j, b in enumerate(v2):
                if R.is_zero(b):
                    continue
                c = R.mul(a, b)
                entry = table[i][j]
                for k, x in enumerate(entry):
                    out[k] = R.add(out[k], R.mul(c, x))
        return out

    def rho_vec(self, pq, vec):
        """rho applied to a cell vector: zero off horizontal degree 0."""
        p, q = pq
        Hq = self.H.module(q)
        if p != 0:
            return Hq.zero_vec()
        m = self.rho.get(q)
        if m is None:
            return Hq.zero_vec()
        return m.mul_vec(vec)

    def bicomplex(self) -> Bicomplex:
        return Bicomplex(self.ring, self.window, self.basis, self.d1)


def verify_horizontal_resolution(P: HorizontalResolutionAlgebra):
    """Rows exact in positive horizontal degrees (inside the window), rho an
    isomorphism onto H at horizontal degree 0, and rho multiplicative."""
    failures = []
    ring = P.ring
    W = P.window
    rep = verify_bicomplex(P.bicomplex())
    failures.extend(rep.failures)
    for q in range(W.vlo, W.vhi + 1):
        # exactness at 0 < p < hmax
        for p in range(1, W.hmax):
            h = subquotient(ring, P.rank((p, q)), P.mat_d1(p, q), P.mat_d1(p + 1, q))
            if not h.module.is_zero_module():
                failures.append(("row-not-exact", (p, q)))
        # augmentation: coker(d1: P_{1,q} -> P_{0,q}) == H_q via rho; degrees
        # with no homology data (window edges) cannot be checked
        if q not in P.H.components:
            continue
        Hq = P.H.module(q)
        rho_m = P.rho.get(q, Matrix.zeros(ring, Hq.ambient_rank, P.rank((0, q))))
        # rho kills im(d1)
        if P.rank((1, q)):
            img = rho_m.mul(P.mat_d1(1, q))
            for j in range(img.cols):
                if not Hq.element_is_zero(img.col(j)):
                    failures.append(("rho-not-killing-d1", (0, q)))
                    break
        # surjectivity: every H_q ambient generator is hit modulo relations
        for i in range(Hq.ambient_rank):
            target = Hq.zero_vec()
            target[i] = ring.one()
            if solve_with_lattice(rho_m, target, Hq.relations if Hq.relations.cols else None) is None:
                failures.append(("rho-not-surjective", (0, q)))
                break
        # injectivity of the induced map coker(d1) -> H_q: ker(rho) = im(d1)
        kr = kernel_with_lattice(rho_m, Hq.relations if Hq.relations.cols else None)
        d1m = P.mat_d1(1, q)
        for j in range(kr.cols):
            if solve_with_lattice(d1m, kr.col(j), None) is None:
                failures.append(("rho-kernel-not-boundaries", (0, q)))
                break
    # multiplicativity of rho on horizontal degree 0 pairs with homology data
    for sym in P.products:
        for ((pq1, pq2), table) in P.products[sym].items():
            if pq1[0] != 0 or pq2[0] != 0:
                continue
            q1, q2 = pq1[1], pq2[1]
            if any(q not in P.H.components for q in (q1, q2, q1 + q2)):
                continue
            Ht = P.H.module(q1 + q2)
            for i in range(P.rank(pq1)):
                vi = [ring.zero()] * P.rank(pq1)
                vi[i] = ring.one()
                ri = P.rho_vec(pq1, vi)
                for j in range(P.rank(pq2)):
                    vj = [ring.zero()] * P.rank(pq2)
                    vj[j] = ring.one()
                    rj = P.rho_vec(pq2, vj)
                    lhs = P.rho_vec((0, q1 + q2), table[i][j])
                    rhs = P.H.mul_vec(sym, q1, ri, q2, rj)
                    diff = [ring.sub(a, b) for a, b in zip(lhs, rhs)]
                    if not Ht.element_is_zero(diff):
                        failures.append(("rho-not-multiplicative", (sym, pq1, i, pq2, j)))
    return VerificationReport(failures)
