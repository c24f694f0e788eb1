"""Operad presets and the Koszul sign calculus.

The four supported operads are the initial operad (no generators), the
associative, commutative, and Lie operads, each presented by one binary
degree-0 generator and one arity-3 relation given as an explicit term list

    Gamma = sum coeff * (mu1 o_l mu2) . sigma.

Commutative cochains reuse the associative relation data (the associativity
element lies in the commutative relation module as well); the commutative
preset additionally carries a shuffle-vanishing predicate.

All sign functions compute the exponents displayed with the split cochain
differential; they depend only on the parities of their degree arguments.
In the exponents attached to the weight-decomposition formulas the
generator degrees enter unsuspended (our presets have degree 0), while the
structure-relation exponent ``eta`` takes the suspended degrees of the
Koszul-dual elements.
"""

from __future__ import annotations

from dataclasses import dataclass


# ---------------------------------------------------------------------------
# Permutations: sigma is a tuple (sigma(1), ..., sigma(r)) in one-line form.
# ---------------------------------------------------------------------------


def identity_perm(r):
    return tuple(range(1, r + 1))


def invert_perm(sigma):
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma, start=1):
        inv[s - 1] = i
    return tuple(inv)


def permute_inputs(sigma, items):
    """(x_1,...,x_r) -> (x_{sigma^{-1}(1)}, ..., x_{sigma^{-1}(r)})."""
    inv = invert_perm(sigma)
    return tuple(items[inv[i - 1] - 1] for i in range(1, len(sigma) + 1))


def alpha_sign_exponent(sigma, degrees):
    """alpha_sigma = sum over inversions s<t, sigma(s)>sigma(t) of |x_s||x_t|."""
    total = 0
    r = len(sigma)
    for s in range(r):
        for t in range(s + 1, r):
            if sigma[s] > sigma[t]:
                total += degrees[s] * degrees[t]
    return total % 2


def beta_exponent(mu_degree, degrees, i):
    """beta = |mu| + sum_{j<i} |x_j| (i is 1-based)."""
    return (mu_degree + sum(degrees[: i - 1])) % 2


def gamma_exponent(rel_degree, degrees, i):
    return (rel_degree + sum(degrees[: i - 1])) % 2


def _sum_before_slot(sigma, degrees, l):
    inv = invert_perm(sigma)
    return sum(degrees[inv[m] - 1] for m in range(1, l))


def delta_exponent(sigma, mu2_degree, degrees, l):
    return (alpha_sign_exponent(sigma, degrees) + mu2_degree * _sum_before_slot(sigma, degrees, l)) % 2


def epsilon_exponent(sigma, mu1_degree, mu2_degree, degrees, l):
    return (
        alpha_sign_exponent(sigma, degrees)
        + mu1_degree
        + (mu2_degree + 1) * _sum_before_slot(sigma, degrees, l)
    ) % 2


def eta_exponent(sigma, mu1_degree, mu2_degree, degrees, l, n):
    return (
        alpha_sign_exponent(sigma, degrees)
        + mu1_degree * n
        + (mu2_degree + n) * _sum_before_slot(sigma, degrees, l)
    ) % 2


def theta_exponent(sigma, mu1_degree, mu2_degree, degrees, l, w, t):
    return (
        alpha_sign_exponent(sigma, degrees)
        + w
        + mu1_degree * (w + t + 1)
        + (mu2_degree + 1 + w + t) * _sum_before_slot(sigma, degrees, l)
    ) % 2


_SIGN_FUNCS = {
    "alpha": lambda sigma, degrees: alpha_sign_exponent(sigma, degrees),
    "beta": lambda mu_degree, degrees, i: beta_exponent(mu_degree, degrees, i),
    "gamma": lambda rel_degree, degrees, i: gamma_exponent(rel_degree, degrees, i),
    "delta": lambda sigma, mu2_degree, degrees, l: delta_exponent(sigma, mu2_degree, degrees, l),
    "epsilon": lambda sigma, mu1, mu2, degrees, l: epsilon_exponent(sigma, mu1, mu2, degrees, l),
    "eta": lambda sigma, mu1, mu2, degrees, l, n: eta_exponent(sigma, mu1, mu2, degrees, l, n),
    "theta": lambda sigma, mu1, mu2, degrees, l, w, t: theta_exponent(sigma, mu1, mu2, degrees, l, w, t),
}


def koszul_sign(name, *args):
    """(-1)^exponent for the named sign function."""
    try:
        f = _SIGN_FUNCS[name]
    except KeyError:
        raise ValueError(f"unknown sign function {name!r}") from None
    return -1 if f(*args) % 2 else 1


# ---------------------------------------------------------------------------
# Presets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Generator:
    symbol: str
    arity: int = 2
    degree: int = 0
    # expansion of mu.(1 2) in the generator basis: list of (symbol, coeff)
    transposition_action: tuple = ()


@dataclass(frozen=True)
class RelationTerm:
    mu1: str
    position: int  # l, 1-based slot where mu2 is plugged into mu1
    mu2: str
    sigma: tuple
    coeff: int  # +1 or -1


@dataclass(frozen=True)
class Relation:
    symbol: str
    arity: int
    degree: int
    terms: tuple


@dataclass(frozen=True)
class OperadPreset:
    kind: str
    generators: tuple
    relations: tuple
    symmetry: str  # "none" | "free" | "symmetric" | "antisymmetric"
    needs_rationals: bool

    @property
    def generator(self):
        return self.generators[0] if self.generators else None

    def check_ring(self, ring):
        if self.needs_rationals and not ring.contains_rationals:
            raise ValueError(
                f"operad preset {self.kind!r} requires a ring containing the rationals, not {ring}"
            )

    def product_symmetry_sign(self):
        """Sign s with mu(y, x) = s * (-1)^{|x||y|} mu(x, y), None if free."""
        if self.symmetry == "symmetric":
            return 1
        if self.symmetry == "antisymmetric":
            return -1
        return None


_ID3 = identity_perm(3)

INITIAL = OperadPreset("initial", (), (), "none", False)

ASSOCIATIVE = OperadPreset(
    "assoc",
    (Generator("mu", transposition_action=(("mu_op", 1),)),),
    (
        Relation(
            "gamma",
            3,
            0,
            (
                RelationTerm("mu", 1, "mu", _ID3, 1),
                RelationTerm("mu", 2, "mu", _ID3, -1),
            ),
        ),
    ),
    "free",
    False,
)

COMMUTATIVE = OperadPreset(
    "comm",
    (Generator("mu", transposition_action=(("mu", 1),)),),
    (
        Relation(
            "gamma",
            3,
            0,
            (
                RelationTerm("mu", 1, "mu", _ID3, 1),
                RelationTerm("mu", 2, "mu", _ID3, -1),
            ),
        ),
    ),
    "symmetric",
    True,
)

LIE = OperadPreset(
    "lie",
    (Generator("ell", transposition_action=(("ell", -1),)),),
    (
        Relation(
            "gamma",
            3,
            0,
            (
                RelationTerm("ell", 1, "ell", _ID3, 1),
                RelationTerm("ell", 1, "ell", (2, 3, 1), 1),
                RelationTerm("ell", 1, "ell", (3, 1, 2), 1),
            ),
        ),
    ),
    "antisymmetric",
    True,
)

PRESETS = {
    "initial": INITIAL,
    "assoc": ASSOCIATIVE,
    "comm": COMMUTATIVE,
    "lie": LIE,
}


def preset_from_name(name):
    try:
        return PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown operad preset {name!r}; use one of {sorted(PRESETS)}") from None


# ---------------------------------------------------------------------------
# Infinitesimal decomposition of the weight <= 2 Koszul dual basis
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InfinitesimalTerm:
    left: str  # "1", "s_mu", "s2_gamma"
    position: int
    right: str
    sigma: tuple
    coeff: int


def infinitesimal_terms(preset: OperadPreset, x: str):
    """Term list of the infinitesimal decomposition of 1, s*mu, or s^2*Gamma."""
    if x == "1":
        return [InfinitesimalTerm("1", 1, "1", identity_perm(1), 1)]
    if preset.generator is None:
        raise ValueError(f"the {preset.kind} operad has no element {x!r}")
    r = preset.generator.arity
    if x == "s_mu":
        terms = [InfinitesimalTerm("1", 1, "s_mu", identity_perm(r), 1)]
        for i in range(1, r + 1):
            terms.append(InfinitesimalTerm("s_mu", i, "1", identity_perm(r), 1))
        return terms
    if x == "s2_gamma":
        rel = preset.relations[0]
        terms = [InfinitesimalTerm("1", 1, "s2_gamma", identity_perm(rel.arity), 1)]
        for i in range(1, rel.arity + 1):
            terms.append(InfinitesimalTerm("s2_gamma", i, "1", identity_perm(rel.arity), 1))
        for term in rel.terms:
            # the cross terms carry (-1)^{|mu1|}, trivial for degree-0 generators
            sign = -1 if preset.generator.degree % 2 else 1
            terms.append(
                InfinitesimalTerm(
                    "s_" + term.mu1, term.position, "s_" + term.mu2, term.sigma, term.coeff * sign
                )
            )
        return terms
    raise ValueError(f"infinitesimal decomposition not materialized for {x!r} (weight > 2)")
