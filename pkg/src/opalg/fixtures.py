"""Bundled example algebras, complexes, and verified model fragments.

Every fixture is constructed programmatically from exact tables.  The
registry names match the CLI's ``--fixture`` flag:

    sagave-zp2          Z/4[x]/(x^2), d(x) = 2, as a chain complex (initial operad)
    dugger-shipley-p2   Z<e, x^{+-1}>/(e^2, ex+xe-x^2), d(e) = 2 (associative)
    dugger-shipley-p3   same with d(e) = 3
    comm-qt-quotient    the small commutative Q[t] algebra with 6 relations
    comm-qt-free        the free commutative version
    lie-qt-quotient     the small Lie Q[t] algebra
    lie-qt-free         the free Lie version
    f2-triple-massey    F_2<a, s>, d(s) = a*a (associative, field case)
    formal-comm         free commutative Q-algebra on one generator, d = 0
    formal-zp2          the Z/4 complex with zero differential

Fragments (minimal model data together with the infinity morphism into the
algebra) are provided for the fixtures where the torsion-Massey model routes
and the universal cocycle are exercised.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import BidegreeWindow, ChainComplex, DegreeWindow
from .dga import AlgebraPresentation, DGAlgebra, HomologyAlgebra, homology_algebra, realize
from .fragments import InfinityMorphismFragment, MinimalModelFragment
from .linalg import Matrix
from .operads import preset_from_name
from .rings import QQ, QT, ZZ, PrimeField, Zmod


@dataclass
class FixtureBundle:
    name: str
    algebra: DGAlgebra
    classes: dict  # name -> (degree, homology coordinates)
    fragment: tuple | None = None  # (MinimalModelFragment, InfinityMorphismFragment)
    _homology: HomologyAlgebra | None = None

    @property
    def homology(self) -> HomologyAlgebra:
        if self._homology is None:
            self._homology = homology_algebra(self.algebra)
        return self._homology


def _vec(ring, entries, rank):
    v = [ring.zero()] * rank
    for i, c in entries:
        v[i] = ring.add(v[i], c)
    return v


# ---------------------------------------------------------------------------
# Sagave's Z/4 complex
# ---------------------------------------------------------------------------


def sagave_complex(ring=None) -> ChainComplex:
    # window up to 4 so that H_3 = 0 is certified, not merely unavailable
    ring = ring or Zmod(4)
    return ChainComplex(
        ring,
        DegreeWindow(0, 4),
        {1: ["a1"], 2: ["a2"]},
        {2: Matrix.from_int_rows(ring, [[2]])},
    )


def _initial_algebra_from_complex(C: ChainComplex) -> DGAlgebra:
    return DGAlgebra(C.ring, preset_from_name("initial"), C.window, C.basis, C.diffs, {})


def sagave_fixture() -> FixtureBundle:
    ring = Zmod(4)
    A = _initial_algebra_from_complex(sagave_complex(ring))
    M, f = sagave_fragment(A)
    return FixtureBundle("sagave-zp2", A, {}, (M, f))


def sagave_fragment(A: DGAlgebra):
    """Twisted-complex minimal model of the Z/4 complex: period-two rows
    with a nonzero second differential forced by d(e) = 2."""
    ring = A.ring
    W = BidegreeWindow(3, 1, 2)
    cells = {(p, q): [f"m{p}{q}"] for p in range(4) for q in (1, 2)}
    two = Matrix.from_int_rows(ring, [[2]])
    d1 = {(p, q): two for p in range(1, 4) for q in (1, 2)}
    d2 = {
        (2, 1): Matrix.from_int_rows(ring, [[1]]),
        (3, 1): Matrix.from_int_rows(ring, [[3]]),
    }
    M = MinimalModelFragment(ring, preset_from_name("initial"), W, cells, d1, d2)
    f1 = {
        0: {1: Matrix.from_int_rows(ring, [[1]]), 2: Matrix.from_int_rows(ring, [[2]])},
        1: {1: Matrix.from_int_rows(ring, [[1]])},
        2: {},
    }
    f = InfinityMorphismFragment(A, f1)
    return M, f


def formal_zp2_fixture() -> FixtureBundle:
    ring = Zmod(4)
    C = ChainComplex(ring, DegreeWindow(0, 3), {1: ["a1"], 2: ["a2"]}, {})
    A = _initial_algebra_from_complex(C)
    W = BidegreeWindow(2, 1, 2)
    cells = {(0, 1): ["m01"], (0, 2): ["m02"]}
    M = MinimalModelFragment(ring, preset_from_name("initial"), W, cells)
    one = Matrix.from_int_rows(ring, [[1]])
    f = InfinityMorphismFragment(A, {0: {1: one, 2: one}})
    return FixtureBundle("formal-zp2", A, {}, (M, f))


# ---------------------------------------------------------------------------
# Dugger--Shipley algebras over Z
# ---------------------------------------------------------------------------


def dugger_shipley_algebra(p: int, window=(-2, 4)) -> DGAlgebra:
    """Z<e, x^{+-1}> / (e^2, ex + xe - x^2) with d(e) = p, d(x) = 0.

    Normal form per degree n: x^n and x^{n-1}e, using e x^{2k} = x^{2k} e
    and e x^{2k+1} = x^{2k+2} - x^{2k+1} e.
    """
    ring = ZZ
    lo, hi = window
    W = DegreeWindow(lo, hi)
    basis = {n: [f"x^{n}", f"x^{n-1}e"] for n in W.degrees()}
    diffs = {}
    for n in W.degrees():
        if n - 1 < lo:
            continue
        m = Matrix.zeros(ring, 2, 2)
        # d(x^{n-1}e) = (-1)^{n-1} p x^{n-1}
        m.data[0][1] = ring.from_int(p if (n - 1) % 2 == 0 else -p)
        diffs[n] = m
    tables = {}
    for a in W.degrees():
        for b in W.degrees():
            if a + b not in W:
                continue
            table = [[None, None], [None, None]]
            table[0][0] = _vec(ring, [(0, 1)], 2)  # x^a * x^b
            table[0][1] = _vec(ring, [(1, 1)], 2)  # x^a * x^{b-1}e
            if b % 2 == 0:
                table[1][0] = _vec(ring, [(1, 1)], 2)
                table[1][1] = _vec(ring, [(1, 1)], 2)  # e x^{b-1} e = x^b e, b even
            else:
                table[1][0] = _vec(ring, [(0, 1), (1, -1)], 2)
                table[1][1] = _vec(ring, [], 2)  # e x^{b-1} e = 0, b odd
            table = [[list(table[i][j]) for j in range(2)] for i in range(2)]
            tables[(a, b)] = table
    products = {"mu": tables}
    unit = (0, _vec(ring, [(0, 1)], 2))
    return DGAlgebra(ring, preset_from_name("assoc"), W, basis, diffs, products, unit=unit)


def dugger_shipley_fixture(p: int) -> FixtureBundle:
    A = dugger_shipley_algebra(p)
    classes = {"one": (0, [ZZ.one()]), "x": (1, [ZZ.one()])}
    fragment = dugger_shipley_fragment(A) if p == 2 else None
    return FixtureBundle(f"dugger-shipley-p{p}", A, classes, fragment)


def dugger_shipley_fragment(A: DGAlgebra):
    """Minimal model fragment for p = 2: one-step rows Z --2--> Z resolving
    Z/2 in each degree, with the weight-one homotopy carrying the
    obstruction (the second differential vanishes)."""
    ring = ZZ
    lo, hi = A.window.lo, A.window.hi
    W = BidegreeWindow(2, lo, hi)
    cells = {}
    for q in range(lo, hi + 1):
        cells[(0, q)] = [f"u{q}"]
        cells[(1, q)] = [f"v{q}"]
    two = Matrix.from_int_rows(ring, [[2]])
    d1 = {(1, q): two for q in range(lo, hi + 1)}

    def tbl(c):
        return [[[ring.from_int(c)]]]

    prod0 = {"mu": {}}
    prod1 = {"mu": {}}
    for a in range(lo, hi + 1):
        for b in range(lo, hi + 1):
            if lo <= a + b <= hi:
                prod0["mu"][((0, a), (0, b))] = tbl(1)
                prod0["mu"][((0, a), (1, b))] = tbl(1 if a % 2 == 0 else -1)
                prod0["mu"][((1, a), (0, b))] = tbl(1)
            if lo <= a + b + 1 <= hi:
                # (s mu)_1(v_a, u_b) = (-1)^a [b odd] u_{a+b+1}
                if b % 2 == 1:
                    prod1["mu"][((1, a), (0, b))] = tbl(1 if a % 2 == 0 else -1)
                    prod1["mu"][((1, a), (1, b))] = tbl(-1)
    M = MinimalModelFragment(ring, preset_from_name("assoc"), W, cells, d1, {}, prod0, prod1)
    f1_0 = {}
    f1_1 = {}
    for q in range(lo, hi + 1):
        col = Matrix.zeros(ring, 2, 1)
        col.data[0][0] = ring.one()  # u_q -> x^q
        f1_0[q] = col
        if q + 1 <= hi:
            col = Matrix.zeros(ring, 2, 1)
            col.data[1][0] = ring.from_int(1 if q % 2 == 0 else -1)  # v_q -> (-1)^q x^q e
            f1_1[q] = col
    f = InfinityMorphismFragment(A, {0: f1_0, 1: f1_1, 2: {}})
    return M, f


# ---------------------------------------------------------------------------
# Q[t] commutative and Lie examples
# ---------------------------------------------------------------------------


def _qt_presentation(preset, quotient):
    t = QT.t()
    rel = None
    if quotient:
        if preset == "comm":
            rel = {
                "monomials": [
                    ("x", "x"), ("y", "y"), ("x", "y"),
                    ("x", "x_t"), ("y", "y_t"), ("x_t", "y"),
                ]
            }
        else:
            rel = {
                "brackets": [
                    ("x", "y"), ("x", "x_t"), ("y", "x_t"), ("y", "y_t"),
                    ("x_t", "x_t"), ("y_t", "y_t"),
                ],
                "kill_length_at_least": 3,
            }
    return AlgebraPresentation(
        preset=preset,
        generators=[("x", 2), ("y", 2), ("x_t", 3), ("y_t", 3)],
        differential={"x_t": [(t, ("x",))], "y_t": [(t, ("y",))]},
        window=(0, 6),
        relations=rel,
    )


def qt_algebra(preset: str, quotient: bool) -> DGAlgebra:
    return realize(QT, _qt_presentation(preset, quotient))


def _qt_classes(A: DGAlgebra, H: HomologyAlgebra):
    # x and y are the first two homology generators in degree 2
    one = QT.one()
    x = H.project(2, A.basis_vec(2, A.basis[2].index("x")))
    y = H.project(2, A.basis_vec(2, A.basis[2].index("y")))
    return {"x": (2, x), "y": (2, y)}


def qt_fixture(preset: str, quotient: bool) -> FixtureBundle:
    A = qt_algebra(preset, quotient)
    H = homology_algebra(A)
    bundle = FixtureBundle(
        f"{preset}-qt-{'quotient' if quotient else 'free'}",
        A,
        _qt_classes(A, H),
        qt_quotient_fragment(A, preset) if quotient else None,
    )
    bundle._homology = H
    return bundle


def qt_quotient_fragment(A: DGAlgebra, preset: str):
    """Minimal model fragment of the quotient Q[t] algebras: rows at 2 and 5
    resolve the t-torsion homology; the weight-one homotopy hits the
    degree-5 class on the (x, y_t)-type pairs."""
    ring = QT
    t = QT.t()
    one = QT.one()
    W = BidegreeWindow(2, 0, 5)
    cells = {
        (0, 2): ["X", "Y"],
        (1, 2): ["Xt", "Yt"],
        (0, 5): ["W"],
        (1, 5): ["Wt"],
    }
    d1 = {
        (1, 2): Matrix(ring, [[t, ring.zero()], [ring.zero(), t]]),
        (1, 5): Matrix(ring, [[t]]),
    }
    z = ring.zero()

    def tab22(entries):
        # entries[i][j]: scalar coefficient on the single target generator
        return [[[entries[i][j]] for j in range(2)] for i in range(2)]

    sym = "mu" if preset == "comm" else "ell"
    sgn = one if preset == "comm" else ring.neg(one)
    prod1 = {
        sym: {
            # (s mu)_1 on (0,2)x(1,2): only (X, Yt) hits W
            ((0, 2), (1, 2)): tab22([[z, one], [z, z]]),
            # on (1,2)x(0,2): only (Yt, X) hits W, sign depends on the preset
            ((1, 2), (0, 2)): tab22([[z, z], [sgn, z]]),
            # on (1,2)x(1,2): target Wt
            ((1, 2), (1, 2)): tab22([[z, one], [ring.neg(sgn), z]]),
        }
    }
    M = MinimalModelFragment(ring, preset_from_name(preset), W, cells, d1, {}, {sym: {}}, prod1)

    def amb(label_list, deg):
        m = Matrix.zeros(ring, A.rank(deg), len(label_list))
        for j, lab in enumerate(label_list):
            m.data[A.basis[deg].index(lab)][j] = one
        return m

    if preset == "comm":
        lab2, lab3, lab5, lab6 = ["x", "y"], ["x_t", "y_t"], ["x*y_t"], ["x_t*y_t"]
    else:
        lab2, lab3, lab5, lab6 = ["x", "y"], ["x_t", "y_t"], ["[x,y_t]"], ["[x_t,y_t]"]
    f1 = {
        0: {2: amb(lab2, 2), 5: amb(lab5, 5)},
        1: {2: amb(lab3, 3), 5: amb(lab6, 6)},
        2: {},
    }
    f = InfinityMorphismFragment(A, f1)
    return M, f


# ---------------------------------------------------------------------------
# Field-case associative algebra with a classical triple Massey product
# ---------------------------------------------------------------------------


def f2_massey_algebra() -> DGAlgebra:
    F2 = PrimeField(2)
    pres = AlgebraPresentation(
        preset="assoc",
        generators=[("a", 1), ("s", 3)],
        differential={"s": [(F2.one(), ("a", "a"))]},
        window=(0, 5),
    )
    return realize(F2, pres)


def f2_massey_fixture() -> FixtureBundle:
    A = f2_massey_algebra()
    H = homology_algebra(A)
    ring = A.ring
    W = BidegreeWindow(2, 1, 4)
    cells = {(0, 1): ["alpha"], (0, 4): ["beta"]}
    # the weight-two operation is the transferred triple product: m3(a,a,a) = [as+sa]
    rel0 = {"gamma": {((0, 1), (0, 1), (0, 1)): [[[[ring.one()]]]]}}
    M = MinimalModelFragment(ring, preset_from_name("assoc"), W, cells, rel0=rel0)
    # cycle representatives: alpha -> a, beta -> as + sa
    a_vec = A.basis_vec(1, A.basis[1].index("a"))
    beta_vec = [ring.zero()] * A.rank(4)
    beta_vec[A.basis[4].index("a*s")] = ring.one()
    beta_vec[A.basis[4].index("s*a")] = ring.one()
    m01 = Matrix(ring, [[c] for c in a_vec])
    m04 = Matrix(ring, [[c] for c in beta_vec])
    f = InfinityMorphismFragment(A, {0: {1: m01, 4: m04}})
    bundle = FixtureBundle("f2-triple-massey", A, {"a": (1, None)}, (M, f))
    bundle._homology = H
    bundle.classes["a"] = (1, H.project(1, a_vec))
    return bundle


def formal_comm_fixture() -> FixtureBundle:
    pres = AlgebraPresentation(
        preset="comm",
        generators=[("x", 2)],
        differential={},
        window=(0, 6),
    )
    A = realize(QQ, pres)
    H = homology_algebra(A)
    ring = A.ring
    W = BidegreeWindow(2, 1, 5)
    cells = {(0, q): list(A.basis[q]) for q in range(1, 6) if A.rank(q)}
    prod0 = {"mu": {}}
    for (p1, q1) in cells:
        for (p2, q2) in cells:
            qt = q1 + q2
            if (0, qt) not in cells:
                continue
            table = []
            for i in range(A.rank(q1)):
                row = []
                for j in range(A.rank(q2)):
                    row.append(A.mul_gen("mu", q1, A.basis_vec(q1, i), q2, A.basis_vec(q2, j)))
                table.append(row)
            prod0["mu"][((0, q1), (0, q2))] = table
    M = MinimalModelFragment(ring, preset_from_name("comm"), W, cells, prod0=prod0)
    f1_0 = {q: Matrix.identity(ring, A.rank(q)) for q in range(1, 6)}
    f = InfinityMorphismFragment(A, {0: f1_0})
    bundle = FixtureBundle("formal-comm", A, {}, (M, f))
    bundle._homology = H
    return bundle


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------


_BUILDERS = {
    "sagave-zp2": sagave_fixture,
    "dugger-shipley-p2": lambda: dugger_shipley_fixture(2),
    "dugger-shipley-p3": lambda: dugger_shipley_fixture(3),
    "comm-qt-quotient": lambda: qt_fixture("comm", True),
    "comm-qt-free": lambda: qt_fixture("comm", False),
    "lie-qt-quotient": lambda: qt_fixture("lie", True),
    "lie-qt-free": lambda: qt_fixture("lie", False),
    "f2-triple-massey": f2_massey_fixture,
    "formal-comm": formal_comm_fixture,
    "formal-zp2": formal_zp2_fixture,
}

FIXTURE_NAMES = sorted(_BUILDERS)

FRAGMENT_FIXTURES = [
    "sagave-zp2",
    "dugger-shipley-p2",
    "comm-qt-quotient",
    "lie-qt-quotient",
    "f2-triple-massey",
    "formal-comm",
    "formal-zp2",
]


def load_fixture(name: str) -> FixtureBundle:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; available: {FIXTURE_NAMES}") from None
    return builder()
