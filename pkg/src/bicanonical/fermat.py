"""The Z_5 x Z_5 quotient of the product of two Fermat quintics.

The group element (a, b) scales the plane coordinates by (eps^a, eps^b, 1).
A bicanonical monomial on the product,

    x^i y^j z^(4-i-j) * x1^alpha y1^beta z1^(4-alpha-beta),

picks up the fifth root of unity with exponent

    l = a (2 + i + alpha - beta) + b (3 + j + alpha + 2 beta)   (mod 5)

under the graph action of (a, b) (the automorphism sends (1,0) to (1,-1) and
(0,1) to (1,2)).  Filtering all 225 monomials by l = 0 for every (a, b)
produces a 9-dimensional invariant basis; ratios of those monomials generate
the function field of the bicanonical image, and membership questions in
that field reduce to exact integer lattice computations on exponent vectors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import beauville
from .covers import make_verdict
from .exactlinalg import in_row_lattice
from .grouplib import (AbelianGroup, Automorphism, Character, GroupElement, Subgroup,
                       common_kernel, pair_elements)

FERMAT_GROUP = AbelianGroup((5, 5))
FERMAT_DEGREE = 5
FERMAT_GENUS = (FERMAT_DEGREE - 1) * (FERMAT_DEGREE - 2) // 2  # plane curve genus


def fermat_psi() -> Automorphism:
    """The gluing automorphism: (1,0) -> (1,-1) and (0,1) -> (1,2)."""
    return Automorphism.from_images(FERMAT_GROUP, [(1, -1), (1, 2)])


_VARIABLES = ("x", "y", "z", "x1", "y1", "z1")


@dataclass(frozen=True)
class BiMonomial:
    """Exponent data (i, j; alpha, beta) of the bicanonical monomial
    x^i y^j z^(4-i-j) x1^alpha y1^beta z1^(4-alpha-beta)."""

    i: int
    j: int
    alpha: int
    beta: int

    def __post_init__(self):
        if min(self.i, self.j, self.alpha, self.beta) < 0:
            raise ValueError("exponents must be nonnegative")
        if self.i + self.j > 4 or self.alpha + self.beta > 4:
            raise ValueError("each factor has total degree 4")

    def exponents(self) -> tuple[int, int, int, int, int, int]:
        return (self.i, self.j, 4 - self.i - self.j,
                self.alpha, self.beta, 4 - self.alpha - self.beta)

    def __str__(self):
        parts = []
        for var, e in zip(_VARIABLES, self.exponents()):
            if e == 0:
                continue
            parts.append(var if e == 1 else f"{var}^{e}")
        return "*".join(parts) if parts else "1"


def all_bimonomials() -> list[BiMonomial]:
    """All 225 bicanonical monomials, lexicographic in (i, j, alpha, beta)."""
    return [BiMonomial(i, j, a, b)
            for i in range(5) for j in range(5 - i)
            for a in range(5) for b in range(5 - a)]


def weight(a: int, b: int, m: BiMonomial) -> int:
    """Root-of-unity exponent picked up by the monomial under the graph
    action of the group element (a, b)."""
    return (a * (2 + m.i + m.alpha - m.beta) + b * (3 + m.j + m.alpha + 2 * m.beta)) % 5


def product_action_weight(u, v, i: int, j: int, alpha: int, beta: int) -> int:
    """First-principles weight of the element (u, v) of G x G acting
    factorwise: a bicanonical monomial of exponents (i, j) on one quintic
    transforms with exponent a(i+2) + b(j+2) under (a, b), because a regular
    1-form is the residue of g/(quintic) dx dy dz with deg g = 2 and the
    volume form itself contributes a + b."""
    (a1, b1), (a2, b2) = u, v
    return (a1 * (i + 2) + b1 * (j + 2) + a2 * (alpha + 2) + b2 * (beta + 2)) % 5


def verify_weight_derivation() -> bool:
    """Check, exhaustively over all residues mod 5, that the closed weight
    formula agrees with the factorwise action of (g, psi(g))."""
    psi = fermat_psi()
    for a, b, i, j, alpha, beta in itertools.product(range(5), repeat=6):
        g = FERMAT_GROUP.element((a, b))
        image = psi(g)
        direct = product_action_weight(g.coords, image.coords, i, j, alpha, beta)
        closed = (a * (2 + i + alpha - beta) + b * (3 + j + alpha + 2 * beta)) % 5
        if direct != closed:
            return False
    return True


def invariant_monomials() -> list[BiMonomial]:
    """The monomials invariant under the whole graph action (weight 0 for the
    two generators suffices, hence for all 25 elements)."""
    return [m for m in all_bimonomials()
            if weight(1, 0, m) == 0 and weight(0, 1, m) == 0]


@dataclass(frozen=True)
class RatioVector:
    """Exponent vector in Z^6 of a ratio of bidegree-(4,4) monomials; the
    exponents over each factor's variables sum to zero."""

    exponents: tuple[int, int, int, int, int, int]

    def __post_init__(self):
        if len(self.exponents) != 6:
            raise ValueError("need six exponents")
        if sum(self.exponents[:3]) != 0 or sum(self.exponents[3:]) != 0:
            raise ValueError("a ratio has degree zero on each factor")

    @classmethod
    def of(cls, **exps) -> "RatioVector":
        unknown = set(exps) - set(_VARIABLES)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        return cls(tuple(int(exps.get(v, 0)) for v in _VARIABLES))


def monomial_ratio(m1: BiMonomial, m2: BiMonomial) -> RatioVector:
    return RatioVector(tuple(a - b for a, b in zip(m1.exponents(), m2.exponents())))


def combination_vector(combo) -> tuple[int, ...]:
    total = [0] * 6
    for monomial, power in combo:
        for k, e in enumerate(monomial.exponents()):
            total[k] += power * e
    return tuple(total)


def verify_ratio_identity(target: RatioVector, combo) -> bool:
    """Does the product of the given monomial powers equal the target ratio?
    Exponent-vector equality is enough: the single relation on the quintic is
    additive and never identifies distinct monomials."""
    return combination_vector(combo) == target.exponents


def ratio_lattice(monomials=None) -> list[RatioVector]:
    """Generators of the lattice of ratios: m / m0 for a fixed base monomial.
    Any base gives the same lattice since differences of differences span it."""
    ms = invariant_monomials() if monomials is None else list(monomials)
    if len(ms) < 2:
        return []
    base = ms[0]
    return [monomial_ratio(m, base) for m in ms[1:]]


def field_lattice_contains(target: RatioVector, generators) -> bool:
    """Exact membership of the target in the Z-span of the generators."""
    return in_row_lattice(target.exponents, [g.exponents for g in generators])


def x5_over_z5() -> RatioVector:
    return RatioVector.of(x=5, z=-5)


def x1_5_over_z1_5() -> RatioVector:
    return RatioVector.of(x1=5, z1=-5)


def builtin_ratio_identities() -> list[tuple[str, RatioVector, list[tuple[BiMonomial, int]]]]:
    """The two displayed factorisations of the quotient-map coordinate
    functions as products of invariant monomials."""
    m = {str(mono): mono for mono in invariant_monomials()}
    first = [(m["x^3*y*x1^2*y1^2"], 1), (m["x^4*y1*z1^3"], 1),
             (m["x^2*y*z*x1*z1^3"], -1), (m["z^4*x1*y1^3"], -1)]
    second = [(m["z^4*x1*y1^3"], 2), (m["y^3*z*y1^2*z1^2"], 1),
              (m["x^3*y*x1^2*y1^2"], 2), (m["x^2*y*z*x1*z1^3"], -1),
              (m["x*y*z^2*y1^3*z1"], -4)]
    return [("x^5/z^5", x5_over_z5(), first),
            ("x1^5/z1^5", x1_5_over_z1_5(), second)]


def residual_character(m: BiMonomial) -> Character:
    """Character by which the residual group G = (G x G)/Gamma scales an
    invariant monomial, evaluated on coset representatives chosen through the
    quotient isomorphism (a, b) -> b - psi(a)."""
    psi = fermat_psi()
    iso = beauville.quotient_iso(psi)
    coords = []
    for gen in FERMAT_GROUP.generators():
        rep = pair_elements(FERMAT_GROUP.zero(), gen)
        assert iso(rep) == gen
        u, v = rep.coords[:2], rep.coords[2:]
        coords.append(product_action_weight(u, v, m.i, m.j, m.alpha, m.beta))
    return FERMAT_GROUP.character(coords)


def residual_kernel(monomials=None) -> Subgroup:
    """Elements of the residual group acting trivially on every ratio of the
    given monomials: the common kernel of the difference characters."""
    ms = invariant_monomials() if monomials is None else list(monomials)
    if len(ms) <= 1:
        return Subgroup(FERMAT_GROUP, FERMAT_GROUP.elements())
    base = residual_character(ms[0])
    diffs = [residual_character(m) - base for m in ms[1:]]
    return common_kernel(diffs, FERMAT_GROUP)


def fermat_fixed_elements() -> frozenset[GroupElement]:
    """Elements of G with fixed points on the Fermat quintic.

    (a, b) acts as diag(eps^a, eps^b, 1); a point with all coordinates
    nonzero forces a = b = 0, and the quintic meets each coordinate line
    {x = 0}, {y = 0}, {z = 0} (but no coordinate point), so the elements with
    fixed points are exactly those of shape (a, 0), (0, b) and (a, a).
    """
    fixed = set()
    for t in range(1, 5):
        fixed.add(FERMAT_GROUP.element((t, 0)))
        fixed.add(FERMAT_GROUP.element((0, t)))
        fixed.add(FERMAT_GROUP.element((t, t)))
    return frozenset(fixed)


@dataclass
class FermatReport:
    invariants: object                     # CoverInvariants of the quotient
    action_free: bool
    monomials: list[BiMonomial]
    weight_identity: bool
    ratio_checks: list[tuple[str, bool]]
    lattice_memberships: list[tuple[str, bool]]
    kernel: Subgroup
    verdict: object                        # covers.Verdict


def fermat_report() -> FermatReport:
    """End-to-end analysis of the quotient surface: invariants, invariant
    monomial basis, the function-field lattice facts, and the verdict on the
    bicanonical map."""
    psi = fermat_psi()
    fixed = fermat_fixed_elements()
    free, witness = beauville.is_free(psi, fixed, fixed)
    if not free:
        raise RuntimeError(f"the graph action has a fixed point at {witness.coords}")
    invariants = beauville.beauville_invariants(FERMAT_GENUS, FERMAT_GENUS,
                                                FERMAT_GROUP.order)
    monomials = invariant_monomials()
    gens = ratio_lattice(monomials)
    ratio_checks = [(name, verify_ratio_identity(target, combo))
                    for name, target, combo in builtin_ratio_identities()]
    memberships = [("x^5/z^5", field_lattice_contains(x5_over_z5(), gens)),
                   ("x1^5/z1^5", field_lattice_contains(x1_5_over_z1_5(), gens))]
    kernel = residual_kernel(monomials)
    return FermatReport(invariants, free, monomials, verify_weight_derivation(),
                        ratio_checks, memberships, kernel, make_verdict(kernel))
