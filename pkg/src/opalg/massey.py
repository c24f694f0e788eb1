"""Torsion Massey products: the direct definition and the model routes.

A torsion Massey product <mu; t_1,...,t_r>(x_1,...,x_r) is defined for an
operation element mu (a combination of the preset's binary generators),
scalars with sum zero, and homology classes with t_i x_i = 0.  The result
is a coset: a representative class in H_n (n = |x_1|+...+|x_r|+1 for our
degree-0 operations) together with the indeterminacy submodule generated by
the slotwise products mu(x_1, .., H_{|x_i|+1}, .., x_r).

Vanishing is a tri-state verdict: truncation never fakes a zero, so any
computation that would need a degree outside the window raises
WindowInsufficient instead of answering.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import DegreeUnavailable
from .dga import DGAlgebra, HomologyAlgebra
from .fragments import InfinityMorphismFragment, MinimalModelFragment
from .linalg import Matrix, solve, solve_with_lattice


class WindowInsufficient(Exception):
    """The degree window is too small to decide the requested computation."""


class InvalidMasseyInput(ValueError):
    """Preconditions on the scalars or classes are violated."""


@dataclass
class MasseyInput:
    homology: HomologyAlgebra
    op_name: str
    scalars: list
    degrees: list  # degrees |x_i| of the classes
    classes: list  # ambient coordinate vectors in H_{|x_i|}

    def __post_init__(self):
        H = self.homology
        R = H.ring
        r = len(self.scalars)
        if not (len(self.degrees) == len(self.classes) == r):
            raise InvalidMasseyInput("scalars, degrees and classes must have equal length")
        gen = H.algebra.preset.generator
        if gen is None:
            raise InvalidMasseyInput(f"the {H.algebra.preset.kind} operad has no operations")
        if r != gen.arity:
            raise InvalidMasseyInput(f"expected {gen.arity} inputs for a binary operation")
        total = R.zero()
        for t in self.scalars:
            total = R.add(total, t)
        if not R.is_zero(total):
            raise InvalidMasseyInput("scalars must sum to zero")
        for t, q, x in zip(self.scalars, self.degrees, self.classes):
            if not H.available(q):
                raise WindowInsufficient(f"homology at degree {q} is not reliable in this window")
            tx = [R.mul(t, c) for c in x]
            if not H.module(q).element_is_zero(tx):
                raise InvalidMasseyInput(f"t*x is nonzero in H_{q}")


@dataclass
class MasseyCoset:
    degree: int
    module: object  # PresentedModule H_n
    representative: list  # coordinates in H_n
    indeterminacy: Matrix  # columns: generators of the indeterminacy submodule
    complete: bool = True

    def contains_zero(self):
        lat = self.module.relations
        full = self.indeterminacy if lat.cols == 0 else self.indeterminacy.hstack(lat)
        return solve_with_lattice(full, self.representative, None) is not None

    def verdict(self):
        if not self.complete:
            return "window-insufficient"
        return "vanishes" if self.contains_zero() else "nonvanishing"

    def same_coset(self, other_rep):
        """Whether another representative lies in this coset."""
        R = self.module.ring
        diff = [R.sub(a, b) for a, b in zip(self.representative, other_rep)]
        lat = self.module.relations
        full = self.indeterminacy if lat.cols == 0 else self.indeterminacy.hstack(lat)
        return solve_with_lattice(full, diff, None) is not None


def is_vanishing(coset: MasseyCoset) -> bool:
    if not coset.complete:
        raise WindowInsufficient("indeterminacy exceeds the reliable window")
    return coset.contains_zero()


def indeterminacy(H: HomologyAlgebra, op_name, degrees, classes):
    """Submodule of H_n generated by mu(x_1, .., h, .., x_r), h over H-basis.

    Returns (matrix of generator columns, complete flag).  The flag is False
    when some slot degree lies outside the reliable window while its
    companion classes are nonzero (a truncation could hide generators).
    """
    R = H.ring
    n = sum(degrees) + 1
    if not H.available(n):
        raise WindowInsufficient(f"homology at degree {n} is not reliable in this window")
    Hn = H.module(n)
    cols = []
    complete = True
    r = len(degrees)
    for i in range(r):
        slot = degrees[i] + 1
        others = [classes[j] for j in range(r) if j != i]
        if not H.available(slot):
            if any(any(not R.is_zero(c) for c in x) for x in others):
                complete = False
            continue
        m = H.module(slot).ambient_rank
        for g in range(m):
            h = [R.zero()] * m
            h[g] = R.one()
            ds = list(degrees)
            ds[i] = slot
            xs = list(classes)
            xs[i] = h
            cols.append(H.op_on_classes(op_name, tuple(ds), xs))
    out = Matrix.zeros(R, Hn.ambient_rank, len(cols))
    for j, c in enumerate(cols):
        for i in range(Hn.ambient_rank):
            out.data[i][j] = c[i]
    return out, complete


def torsion_massey(inp: MasseyInput, lift_choice=None) -> MasseyCoset:
    """The coset of Definition-style torsion Massey products.

    Representatives: y_i are the stored cycle lifts of x_i (optionally
    perturbed through ``lift_choice`` for choice-independence tests), z_i
    the first solutions of d z_i = t_i y_i, and the representative is
    sum_i (-1)^{sum_{j<i} |x_j|} mu(y_1, .., z_i, .., y_r), a cycle.
    """
    H = inp.homology
    A = H.algebra
    R = A.ring
    W = A.window
    r = len(inp.scalars)
    n = sum(inp.degrees) + 1
    if n not in W or n + 1 not in W or n - 1 not in W:
        raise WindowInsufficient(f"representative degree {n} is not reliable in this window")
    ys = []
    zs = []
    for i in range(r):
        q = inp.degrees[i]
        y = H.cycle_lift(q, inp.classes[i])
        if lift_choice is not None:
            y = lift_choice(i, q, y)
        if q + 1 not in W:
            raise WindowInsufficient(f"degree {q + 1} needed for a bounding element")
        ty = [R.mul(inp.scalars[i], c) for c in y]
        z = solve(A.diff(q + 1), ty)
        if z is None:
            raise WindowInsufficient(f"d z = t y unsolvable inside the window at degree {q + 1}")
        zs.append(z)
        ys.append(y)
    op = A.op_element(inp.op_name)
    rep_chain = [R.zero()] * A.rank(n)
    for i in range(r):
        beta = sum(inp.degrees[:i]) % 2
        s = R.from_int(-1 if beta else 1)
        degs = list(inp.degrees)
        degs[i] = inp.degrees[i] + 1
        vecs = list(ys)
        vecs[i] = zs[i]
        term = A.apply_op(op, degs, vecs)
        for k, x in enumerate(term):
            rep_chain[k] = R.add(rep_chain[k], R.mul(s, x))
    # the representative must be a cycle
    boundary = A.diff_vec(n, rep_chain)
    if any(not R.is_zero(x) for x in boundary):
        raise AssertionError("torsion Massey representative is not a cycle")
    rep = H.project(n, rep_chain)
    indet, complete = indeterminacy(H, inp.op_name, inp.degrees, inp.classes)
    return MasseyCoset(n, H.module(n), rep, indet, complete)


# ---------------------------------------------------------------------------
# Minimal-model routes
# ---------------------------------------------------------------------------


def torsion_massey_via_model(
    M: MinimalModelFragment,
    f: InfinityMorphismFragment,
    P_rho: dict,
    H: HomologyAlgebra,
    op_name,
    scalars,
    degrees,
    classes,
):
    """Class of sum (-1)^beta rho (s mu)_1(u_1,..,v_i,..,u_r) - rho d2(w).

    ``P_rho`` maps q to the rho matrix of the induced horizontal resolution.
    u_i solve rho(u_i) = x_i, v_i solve d1 v_i = t_i u_i, and w bounds the
    signed sum of products with one v-slot.  Raises FragmentWindowError-like
    WindowInsufficient when any lift is missing.
    """
    R = M.ring
    r = len(scalars)
    us = []
    vs = []
    for i in range(r):
        q = degrees[i]
        rho = P_rho.get(q)
        if rho is None:
            raise WindowInsufficient(f"fragment has no augmentation at degree {q}")
        Hq = H.module(q)
        u = solve_with_lattice(rho, classes[i], Hq.relations if Hq.relations.cols else None)
        if u is None:
            raise WindowInsufficient(f"class at degree {q} not hit by the fragment augmentation")
        us.append(u)
        tu = [R.mul(scalars[i], c) for c in u]
        v = solve(M.mat_d1((1, q)), tu)
        if v is None:
            raise WindowInsufficient(f"d1 v = t u unsolvable in the fragment at degree {q}")
        vs.append(v)
    op = M.op_element(op_name)
    n = sum(degrees) + 1
    # right-hand side for w: sum (-1)^beta (s mu)_0(u_1,..,v_i,..,u_r)
    rhs_cell = (1, n - 1)
    rhs = M.zero_vec(rhs_cell)
    for i in range(r):
        beta = sum(degrees[:i]) % 2
        s = R.from_int(-1 if beta else 1)
        pqs = [(0, degrees[j]) for j in range(r)]
        vecs = list(us)
        pqs[i] = (1, degrees[i])
        vecs[i] = vs[i]
        term = M.apply_op(0, op, tuple(pqs), vecs)
        for k, x in enumerate(term):
            rhs[k] = R.add(rhs[k], R.mul(s, x))
    w = solve(M.mat_d1((2, n - 1)), rhs)
    if w is None:
        raise WindowInsufficient("d1 w unsolvable in the fragment window")
    # the class: sum (-1)^beta rho (s mu)_1(u_1,..,v_i,..,u_r) - rho d2(w)
    Hn = H.module(n)
    out = Hn.zero_vec()
    rho_n = P_rho.get(n)
    if rho_n is None:
        raise WindowInsufficient(f"fragment has no augmentation at degree {n}")
    for i in range(r):
        beta = sum(degrees[:i]) % 2
        s = R.from_int(-1 if beta else 1)
        pqs = [(0, degrees[j]) for j in range(r)]
        vecs = list(us)
        pqs[i] = (1, degrees[i])
        vecs[i] = vs[i]
        term = M.apply_op(1, op, tuple(pqs), vecs)
        img = rho_n.mul_vec(term)
        for k, x in enumerate(img):
            out[k] = R.add(out[k], R.mul(s, x))
    d2w = M.d2_vec((2, n - 1), w)
    img = rho_n.mul_vec(d2w)
    for k, x in enumerate(img):
        out[k] = R.sub(out[k], x)
    return out


def gamma_massey_via_model(
    M: MinimalModelFragment,
    f: InfinityMorphismFragment,
    H: HomologyAlgebra,
    rel_symbol,
    degrees,
    us,
):
    """Class of f(1)_0((s^2 Gamma)_0(u_1,...,u_r)) in H_{sum deg + 1}."""
    if rel_symbol not in M.rel0 and not any(
        rel.symbol == rel_symbol for rel in M.preset.relations
    ):
        raise ValueError(f"fragment carries no weight-two operation {rel_symbol!r}")
    n = sum(degrees) + 1
    pqs = tuple((0, q) for q in degrees)
    val = M.rel0_vec(rel_symbol, pqs, us)
    img = f.f1_vec(M, 0, (0, n), val)
    A = f.algebra
    boundary = A.diff_vec(n, img)
    if any(not A.ring.is_zero(x) for x in boundary):
        raise AssertionError("gamma Massey cycle is not closed")
    return H.project(n, img)
