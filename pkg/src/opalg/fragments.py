"""Minimal-model fragments and infinity-morphism fragments, fully verified.

A fragment is input data (built by hand or loaded from JSON), never
synthesized: the bigraded basis of a minimal derived homotopy algebra in a
window, the maps d1 (bidegree (-1,0)) and d2 ((-2,+1)), the bidegree-additive
products, the weight-one homotopies with shift (-1,+1), and the weight-two
operation with shift (0,+1).  The verifier checks exactly the structure
equation families recalled for minimal objects, on every basis tuple whose
output cell lies inside the window; boundary tuples are skipped and counted.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import (
    BidegreeWindow,
    GradedAlgebra,
    HorizontalResolutionAlgebra,
    VerificationReport,
    verify_horizontal_resolution,
)
from .dga import DGAlgebra, HomologyAlgebra
from .linalg import Matrix, kernel_with_lattice, solve_with_lattice, subquotient
from .operads import OperadPreset, alpha_sign_exponent, permute_inputs


class FragmentWindowError(Exception):
    """A required lift or cell falls outside the fragment window."""


@dataclass
class MinimalModelFragment:
    ring: object
    preset: OperadPreset
    window: BidegreeWindow
    cells: dict  # (p,q) -> [labels]
    d1: dict = field(default_factory=dict)  # (p,q) -> Matrix to (p-1,q)
    d2: dict = field(default_factory=dict)  # (p,q) -> Matrix to (p-2,q+1)
    prod0: dict = field(default_factory=dict)  # sym -> {(pq1,pq2): table}
    prod1: dict = field(default_factory=dict)  # sym -> {(pq1,pq2): table}, shift (-1,+1)
    rel0: dict = field(default_factory=dict)  # relsym -> {(pq1,pq2,pq3): table}, shift (0,+1)

    def rank(self, pq):
        return len(self.cells.get(pq, ()))

    def zero_vec(self, pq):
        return [self.ring.zero()] * self.rank(pq)

    def basis_vec(self, pq, i):
        v = self.zero_vec(pq)
        v[i] = self.ring.one()
        return v

    def total_degree(self, pq):
        return pq[0] + pq[1]

    def mat_d1(self, pq):
        m = self.d1.get(pq)
        if m is None:
            return Matrix.zeros(self.ring, self.rank((pq[0] - 1, pq[1])), self.rank(pq))
        return m

    def mat_d2(self, pq):
        m = self.d2.get(pq)
        if m is None:
            return Matrix.zeros(self.ring, self.rank((pq[0] - 2, pq[1] + 1)), self.rank(pq))
        return m

    def d1_vec(self, pq, vec):
        return self.mat_d1(pq).mul_vec(vec)

    def d2_vec(self, pq, vec):
        return self.mat_d2(pq).mul_vec(vec)

    def _table_vec(self, tables, pq1, v1, pq2, v2, target):
        R = self.ring
        out = [R.zero()] * self.rank(target)
        table = tables.get((pq1, pq2))
        if table is None:
            return out
        for i, a in enumerate(v1):
            if R.is_zero(a):
                continue
            for j, b in enumerate(v2):
                if R.is_zero(b):
                    continue
                c = R.mul(a, b)
                for k, x in enumerate(table[i][j]):
                    out[k] = R.add(out[k], R.mul(c, x))
        return out

    def prod0_vec(self, sym, pq1, v1, pq2, v2):
        target = (pq1[0] + pq2[0], pq1[1] + pq2[1])
        return self._table_vec(self.prod0.get(sym, {}), pq1, v1, pq2, v2, target)

    def prod1_vec(self, sym, pq1, v1, pq2, v2):
        target = (pq1[0] + pq2[0] - 1, pq1[1] + pq2[1] + 1)
        return self._table_vec(self.prod1.get(sym, {}), pq1, v1, pq2, v2, target)

    def rel0_vec(self, relsym, pqs, vecs):
        R = self.ring
        target = (
            pqs[0][0] + pqs[1][0] + pqs[2][0],
            pqs[0][1] + pqs[1][1] + pqs[2][1] + 1,
        )
        out = [R.zero()] * self.rank(target)
        table = self.rel0.get(relsym, {}).get(tuple(pqs))
        if table is None:
            return out
        for i, a in enumerate(vecs[0]):
            if R.is_zero(a):
                continue
            for j, b in enumerate(vecs[1]):
                if R.is_zero(b):
                    continue
                for k, c in enumerate(vecs[2]):
                    if R.is_zero(c):
                        continue
                    coeff = R.mul(R.mul(a, b), c)
                    for s, x in enumerate(table[i][j][k]):
                        out[s] = R.add(out[s], R.mul(coeff, x))
        return out

    def apply_op(self, level, op_terms, pqs, vecs):
        """Evaluate a (weight-1, piece ``level``) operation element.

        ``op_terms`` is a list of (generator symbol, sigma, coeff); Koszul
        signs use total degrees of the inputs.
        """
        R = self.ring
        degrees = [self.total_degree(pq) for pq in pqs]
        if level == 0:
            target = (pqs[0][0] + pqs[1][0], pqs[0][1] + pqs[1][1])
        else:
            target = (pqs[0][0] + pqs[1][0] - 1, pqs[0][1] + pqs[1][1] + 1)
        out = [R.zero()] * self.rank(target)
        for sym, sigma, coeff in op_terms:
            s = coeff * (1 if alpha_sign_exponent(sigma, degrees) % 2 == 0 else -1)
            ppq = permute_inputs(sigma, pqs)
            pv = permute_inputs(sigma, vecs)
            if level == 0:
                term = self.prod0_vec(sym, ppq[0], pv[0], ppq[1], pv[1])
            else:
                term = self.prod1_vec(sym, ppq[0], pv[0], ppq[1], pv[1])
            for k, x in enumerate(term):
                out[k] = R.add(out[k], R.mul(R.from_int(s), x))
        return out

    def op_element(self, name):
        gen = self.preset.generator
        if gen is None:
            raise ValueError(f"the {self.preset.kind} operad has no binary operations")
        if name == gen.symbol:
            return ((gen.symbol, (1, 2), 1),)
        if self.preset.kind == "assoc":
            if name == "mu_op":
                return ((gen.symbol, (2, 1), 1),)
            if name == "ell":
                return ((gen.symbol, (1, 2), 1), (gen.symbol, (2, 1), -1))
        raise ValueError(f"unknown operation {name!r} for preset {self.preset.kind}")


@dataclass
class InfinityMorphismFragment:
    """Structure maps of a derived infinity morphism into a DG algebra."""

    algebra: DGAlgebra
    f1: dict  # i -> {q: Matrix}: M_{i,q} -> A_{q+i}
    fmu0: dict = field(default_factory=dict)  # sym -> {(pq1,pq2): table} -> A_{q1+q2+1}
    fmu1: dict = field(default_factory=dict)  # sym -> {(pq1,pq2): table} -> A_{q1+q2+2}

    def f1_vec(self, M: MinimalModelFragment, i, pq, vec):
        p, q = pq
        A = self.algebra
        target = q + i
        if p != i or target not in A.window:
            return A.zero_vec(target) if target in A.window else []
        m = self.f1.get(i, {}).get(q)
        if m is None:
            return A.zero_vec(target)
        return m.mul_vec(vec)

    def _ftable_vec(self, tables, M, pq1, v1, pq2, v2, target_deg):
        A = self.algebra
        R = A.ring
        if target_deg not in A.window:
            return []
        out = A.zero_vec(target_deg)
        table = tables.get((pq1, pq2))
        if table is None:
            return out
        for i, a in enumerate(v1):
            if R.is_zero(a):
                continue
            for j, b in enumerate(v2):
                if R.is_zero(b):
                    continue
                c = R.mul(a, b)
                for k, x in enumerate(table[i][j]):
                    out[k] = R.add(out[k], R.mul(c, x))
        return out

    def fmu0_vec(self, M, sym, pq1, v1, pq2, v2):
        if pq1[0] + pq2[0] != 0:
            t = pq1[1] + pq2[1] + 1
            return self.algebra.zero_vec(t) if t in self.algebra.window else []
        return self._ftable_vec(self.fmu0.get(sym, {}), M, pq1, v1, pq2, v2, pq1[1] + pq2[1] + 1)

    def fmu1_vec(self, M, sym, pq1, v1, pq2, v2):
        if pq1[0] + pq2[0] != 1:
            t = pq1[1] + pq2[1] + 2
            return self.algebra.zero_vec(t) if t in self.algebra.window else []
        return self._ftable_vec(self.fmu1.get(sym, {}), M, pq1, v1, pq2, v2, pq1[1] + pq2[1] + 2)


def _add_failure(failures, tag, loc, ring, defect):
    if any(not ring.is_zero(x) for x in defect):
        failures.append((tag, loc))


def _e2_in_window(M, pq1, pq2):
    W = M.window
    if not (W.vlo <= pq1[1] + pq2[1] + 1 <= W.vhi):
        return False
    for p, q in (pq1, pq2):
        # the d2-image cell is only knowable inside the window
        if p >= 2 and not (W.vlo <= q + 1 <= W.vhi):
            return False
    return True


def _rel_terms_in_window(M, rel, pqs, with_shift):
    """Whether every term's intermediate cell is inside the vertical window."""
    W = M.window
    for term in rel.terms:
        ppq = permute_inputs(term.sigma, pqs)
        pair = (ppq[0], ppq[1]) if term.position == 1 else (ppq[1], ppq[2])
        s = pair[0][1] + pair[1][1]
        if not (W.vlo <= s <= W.vhi):
            return False
        if with_shift and pair[0][0] + pair[1][0] >= 1 and not (W.vlo <= s + 1 <= W.vhi):
            return False
    return True


def verify_minimal_fragment(M: MinimalModelFragment) -> VerificationReport:
    """Check the minimal structure equations on all in-window basis tuples."""
    failures = []
    skipped = 0
    R = M.ring
    W = M.window

    # d1^2 = 0,  d1 d2 + d2 d1 = 0,  d2^2 = 0
    for pq in W.cells():
        p, q = pq
        if M.rank(pq) == 0:
            continue
        if p >= 2:
            comp = M.mat_d1((p - 1, q)).mul(M.mat_d1(pq))
            if not comp.is_zero():
                failures.append(("d1d1", pq))
        if p >= 3 and (p - 3, q + 1) in W:
            a = M.mat_d1((p - 2, q + 1)).mul(M.mat_d2(pq))
            b = M.mat_d2((p - 1, q)).mul(M.mat_d1(pq))
            if not a.add(b).is_zero():
                failures.append(("d1d2+d2d1", pq))
        if p >= 4 and (p - 4, q + 2) in W:
            comp = M.mat_d2((p - 2, q + 1)).mul(M.mat_d2(pq))
            if not comp.is_zero():
                failures.append(("d2d2", pq))

    gen = M.preset.generator
    if gen is not None:
        sym = gen.symbol
        cells = [pq for pq in W.cells() if M.rank(pq)]
        for pq1 in cells:
            for pq2 in cells:
                if not _e2_in_window(M, pq1, pq2):
                    skipped += 1
                    continue
                for i in range(M.rank(pq1)):
                    x1 = M.basis_vec(pq1, i)
                    for j in range(M.rank(pq2)):
                        x2 = M.basis_vec(pq2, j)
                        defect = _equation_E2(M, sym, pq1, x1, pq2, x2)
                        _add_failure(failures, "big_E_2", (pq1, i, pq2, j), R, defect)
        for rel in M.preset.relations:
            for pq1 in cells:
                for pq2 in cells:
                    for pq3 in cells:
                        Q = pq1[1] + pq2[1] + pq3[1]
                        pqs = (pq1, pq2, pq3)
                        check_r1 = (W.vlo <= Q + 1 <= W.vhi) and _rel_terms_in_window(
                            M, rel, pqs, with_shift=True
                        )
                        check_o0 = (W.vlo <= Q <= W.vhi) and _rel_terms_in_window(
                            M, rel, pqs, with_shift=False
                        )
                        if not check_r1 and not check_o0:
                            skipped += 1
                            continue
                        for i in range(M.rank(pq1)):
                            for j in range(M.rank(pq2)):
                                for k in range(M.rank(pq3)):
                                    vecs = (
                                        M.basis_vec(pq1, i),
                                        M.basis_vec(pq2, j),
                                        M.basis_vec(pq3, k),
                                    )
                                    if check_r1:
                                        defect = _equation_R1(M, rel, (pq1, pq2, pq3), vecs)
                                        _add_failure(
                                            failures, "big_R_1", (pq1, i, pq2, j, pq3, k), R, defect
                                        )
                                    if check_o0:
                                        defect = _equation_O0(M, rel, (pq1, pq2, pq3), vecs)
                                        _add_failure(
                                            failures, "big_O_0", (pq1, i, pq2, j, pq3, k), R, defect
                                        )
    report = VerificationReport(failures)
    report.skipped = skipped
    return report


def _equation_E2(M: MinimalModelFragment, sym, pq1, x1, pq2, x2):
    """d1((s mu)_1(x1,x2)) + d2(mu(x1,x2))
       - sum_i (-1)^beta (mu(..d2 x_i..) + (s mu)_1(..d1 x_i..))."""
    R = M.ring
    P, Q = pq1[0] + pq2[0], pq1[1] + pq2[1]
    target = (P - 2, Q + 1)
    out = [R.zero()] * M.rank(target)

    def acc(vec, sgn=1):
        for k, x in enumerate(vec):
            out[k] = R.add(out[k], R.mul(R.from_int(sgn), x))

    acc(M.d1_vec((P - 1, Q + 1), M.prod1_vec(sym, pq1, x1, pq2, x2)))
    acc(M.d2_vec((P, Q), M.prod0_vec(sym, pq1, x1, pq2, x2)))
    degs = (M.total_degree(pq1), M.total_degree(pq2))
    for i in (1, 2):
        beta = sum(degs[: i - 1]) % 2
        s = -1 if beta else 1
        if i == 1:
            d2x = M.d2_vec(pq1, x1)
            acc(M.prod0_vec(sym, (pq1[0] - 2, pq1[1] + 1), d2x, pq2, x2), -s)
            d1x = M.d1_vec(pq1, x1)
            acc(M.prod1_vec(sym, (pq1[0] - 1, pq1[1]), d1x, pq2, x2), -s)
        else:
            d2x = M.d2_vec(pq2, x2)
            acc(M.prod0_vec(sym, pq1, x1, (pq2[0] - 2, pq2[1] + 1), d2x), -s)
            d1x = M.d1_vec(pq2, x2)
            acc(M.prod1_vec(sym, pq1, x1, (pq2[0] - 1, pq2[1]), d1x), -s)
    return out


def _equation_R1(M: MinimalModelFragment, rel, pqs, vecs):
    """d1((s^2 Gamma)_0(x)) + sum_i (-1)^gamma (s^2 Gamma)_0(..d1 x_i..)
       - sum_terms (-1)^delta (mu1(.., (s mu2)_1(..), ..) + (s mu1)_1(.., mu2(..), ..))."""
    R = M.ring
    P = sum(pq[0] for pq in pqs)
    Q = sum(pq[1] for pq in pqs)
    target = (P - 1, Q + 1)
    out = [R.zero()] * M.rank(target)

    def acc(vec, sgn=1):
        for k, x in enumerate(vec):
            out[k] = R.add(out[k], R.mul(R.from_int(sgn), x))

    acc(M.d1_vec((P, Q + 1), M.rel0_vec(rel.symbol, pqs, vecs)))
    degs = tuple(M.total_degree(pq) for pq in pqs)
    for i in (1, 2, 3):
        g = sum(degs[: i - 1]) % 2
        s = -1 if g else 1
        dpq = (pqs[i - 1][0] - 1, pqs[i - 1][1])
        dvec = M.d1_vec(pqs[i - 1], vecs[i - 1])
        npqs = list(pqs)
        nvecs = list(vecs)
        npqs[i - 1] = dpq
        nvecs[i - 1] = dvec
        acc(M.rel0_vec(rel.symbol, tuple(npqs), nvecs), s)
    for term in rel.terms:
        ppq = permute_inputs(term.sigma, pqs)
        pv = permute_inputs(term.sigma, vecs)
        pdeg = [M.total_degree(pq) for pq in ppq]
        # delta = alpha_sigma + |mu2| * (degrees before the slot); generators
        # have degree 0 so only alpha survives
        alpha = alpha_sign_exponent(term.sigma, degs)
        s = term.coeff * (-1 if alpha % 2 else 1)
        l = term.position
        if l == 1:
            inner1 = M.prod1_vec(term.mu2, ppq[0], pv[0], ppq[1], pv[1])
            ipq1 = (ppq[0][0] + ppq[1][0] - 1, ppq[0][1] + ppq[1][1] + 1)
            t1 = M.prod0_vec(term.mu1, ipq1, inner1, ppq[2], pv[2])
            inner0 = M.prod0_vec(term.mu2, ppq[0], pv[0], ppq[1], pv[1])
            ipq0 = (ppq[0][0] + ppq[1][0], ppq[0][1] + ppq[1][1])
            t2 = M.prod1_vec(term.mu1, ipq0, inner0, ppq[2], pv[2])
        else:
            inner1 = M.prod1_vec(term.mu2, ppq[1], pv[1], ppq[2], pv[2])
            ipq1 = (ppq[1][0] + ppq[2][0] - 1, ppq[1][1] + ppq[2][1] + 1)
            t1 = M.prod0_vec(term.mu1, ppq[0], pv[0], ipq1, inner1)
            inner0 = M.prod0_vec(term.mu2, ppq[1], pv[1], ppq[2], pv[2])
            ipq0 = (ppq[1][0] + ppq[2][0], ppq[1][1] + ppq[2][1])
            t2 = M.prod1_vec(term.mu1, ppq[0], pv[0], ipq0, inner0)
        acc(t1, -s)
        acc(t2, -s)
    return out


def _equation_O0(M: MinimalModelFragment, rel, pqs, vecs):
    """The bicomplex-algebra relation: Gamma evaluated on the products."""
    R = M.ring
    P = sum(pq[0] for pq in pqs)
    Q = sum(pq[1] for pq in pqs)
    out = [R.zero()] * M.rank((P, Q))
    degs = tuple(M.total_degree(pq) for pq in pqs)
    for term in rel.terms:
        ppq = permute_inputs(term.sigma, pqs)
        pv = permute_inputs(term.sigma, vecs)
        alpha = alpha_sign_exponent(term.sigma, degs)
        s = term.coeff * (-1 if alpha % 2 else 1)
        l = term.position
        if l == 1:
            inner = M.prod0_vec(term.mu2, ppq[0], pv[0], ppq[1], pv[1])
            ipq = (ppq[0][0] + ppq[1][0], ppq[0][1] + ppq[1][1])
            t = M.prod0_vec(term.mu1, ipq, inner, ppq[2], pv[2])
        else:
            inner = M.prod0_vec(term.mu2, ppq[1], pv[1], ppq[2], pv[2])
            ipq = (ppq[1][0] + ppq[2][0], ppq[1][1] + ppq[2][1])
            t = M.prod0_vec(term.mu1, ppq[0], pv[0], ipq, inner)
        for k, x in enumerate(t):
            out[k] = R.add(out[k], R.mul(R.from_int(s), x))
    return out


def weight3_certification(M: MinimalModelFragment) -> VerificationReport:
    """Bicomplex-algebra relation check standing in for the weight-3 cocycle
    component, which is never materialized."""
    failures = []
    if M.preset.generator is None:
        return VerificationReport(failures)
    cells = [pq for pq in M.window.cells() if M.rank(pq)]
    for rel in M.preset.relations:
        for pq1 in cells:
            for pq2 in cells:
                for pq3 in cells:
                    Q = pq1[1] + pq2[1] + pq3[1]
                    if not (M.window.vlo <= Q <= M.window.vhi):
                        continue
                    if not _rel_terms_in_window(M, rel, (pq1, pq2, pq3), with_shift=False):
                        continue
                    for i in range(M.rank(pq1)):
                        for j in range(M.rank(pq2)):
                            for k in range(M.rank(pq3)):
                                vecs = (
                                    M.basis_vec(pq1, i),
                                    M.basis_vec(pq2, j),
                                    M.basis_vec(pq3, k),
                                )
                                defect = _equation_O0(M, rel, (pq1, pq2, pq3), vecs)
                                _add_failure(
                                    failures, "relation", (rel.symbol, pq1, i, pq2, j, pq3, k),
                                    M.ring, defect,
                                )
    return VerificationReport(failures)


def verify_infinity_fragment(
    f: InfinityMorphismFragment, M: MinimalModelFragment, H: HomologyAlgebra
) -> VerificationReport:
    """Check the four recalled morphism equation families plus the
    E^2-equivalence conditions (rows exact, f(1)_0 induces iso onto H)."""
    failures = []
    R = M.ring
    A = f.algebra
    W = M.window

    def in_awin(q):
        return q in A.window

    # (1_0): d f(1)_0 = 0 on M_{0,q}
    for q in range(W.vlo, W.vhi + 1):
        pq = (0, q)
        if M.rank(pq) == 0 or not in_awin(q) or q - 1 not in A.window:
            continue
        for i in range(M.rank(pq)):
            img = f.f1_vec(M, 0, pq, M.basis_vec(pq, i))
            defect = A.diff_vec(q, img)
            _add_failure(failures, "morphism_1_0", (pq, i), R, defect)
    # (1_1): d f(1)_1(x) - f(1)_0 d1(x) = 0 on M_{1,q}
    for q in range(W.vlo, W.vhi + 1):
        pq = (1, q)
        if M.rank(pq) == 0 or not in_awin(q + 1) or not in_awin(q):
            continue
        for i in range(M.rank(pq)):
            x = M.basis_vec(pq, i)
            lhs = A.diff_vec(q + 1, f.f1_vec(M, 1, pq, x))
            rhs = f.f1_vec(M, 0, (0, q), M.d1_vec(pq, x))
            defect = [R.sub(a, b) for a, b in zip(lhs, rhs)]
            _add_failure(failures, "morphism_1_1", (pq, i), R, defect)
    # (1_2): d f(1)_2(x) - f(1)_0 d2(x) - f(1)_1 d1(x) = 0 on M_{2,q}
    for q in range(W.vlo, W.vhi + 1):
        pq = (2, q)
        if M.rank(pq) == 0 or not in_awin(q + 2) or not in_awin(q + 1):
            continue
        if not (W.vlo <= q + 1 <= W.vhi):
            continue
        for i in range(M.rank(pq)):
            x = M.basis_vec(pq, i)
            lhs = A.diff_vec(q + 2, f.f1_vec(M, 2, pq, x))
            t1 = f.f1_vec(M, 0, (0, q + 1), M.d2_vec(pq, x))
            t2 = f.f1_vec(M, 1, (1, q), M.d1_vec(pq, x))
            defect = [R.sub(a, R.add(b, c)) for a, b, c in zip(lhs, t1, t2)]
            _add_failure(failures, "morphism_1_2", (pq, i), R, defect)
    # (E_1) on pairs of total horizontal degree 1
    gen = M.preset.generator
    if gen is not None:
        sym = gen.symbol
        cells = [pq for pq in W.cells() if M.rank(pq)]
        for pq1 in cells:
            for pq2 in cells:
                Q = pq1[1] + pq2[1]
                if pq1[0] + pq2[0] != 1:
                    continue
                if not in_awin(Q + 1) or not in_awin(Q + 2):
                    continue
                # intermediate cells must be knowable: the product cell (1,Q),
                # the homotopy cell (0,Q+1), and the f1-image of the
                # horizontal-degree-one slot
                if not (W.vlo <= Q <= W.vhi and W.vlo <= Q + 1 <= W.vhi):
                    continue
                if any(p == 1 and not in_awin(q + 1) for p, q in (pq1, pq2)):
                    continue
                for i in range(M.rank(pq1)):
                    for j in range(M.rank(pq2)):
                        defect = _equation_E1(f, M, sym, pq1, M.basis_vec(pq1, i), pq2, M.basis_vec(pq2, j))
                        _add_failure(failures, "morphism_E_1", (pq1, i, pq2, j), R, defect)

    # E^2-equivalence: rows exact in positive horizontal degrees ...
    for q in range(W.vlo, W.vhi + 1):
        for p in range(1, W.hmax):
            h = subquotient(R, M.rank((p, q)), M.mat_d1((p, q)), M.mat_d1((p + 1, q)))
            if not h.module.is_zero_module():
                failures.append(("row-not-exact", (p, q)))
    # ... and f(1)_0 induces an isomorphism coker(d1) -> H_q(A)
    for q in range(W.vlo, W.vhi + 1):
        if not H.available(q):
            continue
        Hq = H.module(q)
        rank0 = M.rank((0, q))
        rho = Matrix.zeros(R, Hq.ambient_rank, rank0)
        ok = True
        for i in range(rank0):
            img = f.f1_vec(M, 0, (0, q), M.basis_vec((0, q), i))
            try:
                coords = H.project(q, img)
            except ValueError:
                failures.append(("f1_0-not-a-cycle", (0, q, i)))
                ok = False
                break
            for s, c in enumerate(coords):
                rho.data[s][i] = c
        if not ok:
            continue
        for i in range(Hq.ambient_rank):
            target = Hq.zero_vec()
            target[i] = R.one()
            if solve_with_lattice(rho, target, Hq.relations if Hq.relations.cols else None) is None:
                failures.append(("induced-map-not-surjective", (0, q)))
                break
        kr = kernel_with_lattice(rho, Hq.relations if Hq.relations.cols else None)
        d1m = M.mat_d1((1, q))
        for j in range(kr.cols):
            if solve_with_lattice(d1m, kr.col(j), None) is None:
                failures.append(("induced-map-not-injective", (0, q)))
                break
    return VerificationReport(failures)


def _equation_E1(f: InfinityMorphismFragment, M, sym, pq1, x1, pq2, x2):
    """d f(s mu)_1(x1,x2) + sum_i (-1)^beta f(s mu)_0(..d1 x_i..)
       = f(1)_0 (s mu)_1(x1,x2) + f(1)_1 mu(x1,x2)
         - sum_i mu(f0 x1, .., f1 x_i, .., f0 xr)."""
    A = f.algebra
    R = A.ring
    Q = pq1[1] + pq2[1]
    out = A.zero_vec(Q + 1)

    def acc(vec, sgn=1):
        for k, x in enumerate(vec):
            out[k] = R.add(out[k], R.mul(R.from_int(sgn), x))

    acc(A.diff_vec(Q + 2, f.fmu1_vec(M, sym, pq1, x1, pq2, x2)))
    degs = (M.total_degree(pq1), M.total_degree(pq2))
    d1x1 = M.d1_vec(pq1, x1)
    acc(f.fmu0_vec(M, sym, (pq1[0] - 1, pq1[1]), d1x1, pq2, x2), 1)
    s2 = -1 if degs[0] % 2 else 1
    d1x2 = M.d1_vec(pq2, x2)
    acc(f.fmu0_vec(M, sym, pq1, x1, (pq2[0] - 1, pq2[1]), d1x2), s2)
    # minus the right-hand side
    p1v = M.prod1_vec(sym, pq1, x1, pq2, x2)
    acc(f.f1_vec(M, 0, (pq1[0] + pq2[0] - 1, Q + 1), p1v), -1)
    p0v = M.prod0_vec(sym, pq1, x1, pq2, x2)
    acc(f.f1_vec(M, 1, (pq1[0] + pq2[0], Q), p0v), -1)
    f0x1 = f.f1_vec(M, 0, pq1, x1)
    f0x2 = f.f1_vec(M, 0, pq2, x2)
    f1x1 = f.f1_vec(M, 1, pq1, x1)
    f1x2 = f.f1_vec(M, 1, pq2, x2)
    if pq1[0] == 1:
        acc(A.mul_gen(sym, pq1[1] + 1, f1x1, pq2[1], f0x2), 1)
    if pq2[0] == 1:
        acc(A.mul_gen(sym, pq1[1], f0x1, pq2[1] + 1, f1x2), 1)
    return out


def induced_horizontal_resolution(
    f: InfinityMorphismFragment, M: MinimalModelFragment, H: HomologyAlgebra
) -> HorizontalResolutionAlgebra:
    """P = underlying bicomplex algebra of M, rho = (project to H) o f(1)_0."""
    R = M.ring
    rho = {}
    for q in range(M.window.vlo, M.window.vhi + 1):
        if not H.available(q):
            continue
        Hq = H.module(q)
        rank0 = M.rank((0, q))
        m = Matrix.zeros(R, Hq.ambient_rank, rank0)
        for i in range(rank0):
            img = f.f1_vec(M, 0, (0, q), M.basis_vec((0, q), i))
            coords = H.project(q, img)
            for s, c in enumerate(coords):
                m.data[s][i] = c
        rho[q] = m
    d1 = {pq: M.mat_d1(pq) for pq in M.window.cells() if M.rank(pq) and pq[0] >= 1}
    P = HorizontalResolutionAlgebra(
        R, M.preset, M.window, M.cells, d1, M.prod0, rho, H
    )
    rep = verify_horizontal_resolution(P)
    if not rep.ok:
        raise ValueError(f"induced horizontal resolution fails verification: {rep.failures[:3]}")
    return P
