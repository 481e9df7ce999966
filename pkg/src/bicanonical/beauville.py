"""Product-quotient surfaces S = (C1 x C2) / Gamma.

Two curves C_i are built as G-covers of P^1 from branch data; the graph
Gamma of an automorphism psi of G must act freely on the product, which is a
finite check on the inertia elements of the two covers.  The quotient is a
minimal surface of general type with chi = 1, K^2 = 8, p_g = q = 0, and its
bicanonical system decomposes along the characters of Gamma-perp as sections
of O(b1, b2) twisted down by the product eigensheaves.  Summing the pieces
must give K^2 + chi = 9; the characters with a nonzero piece determine the
subgroup of the residual group acting trivially on the bicanonical image.
"""

from __future__ import annotations

from dataclasses import dataclass

from .covers import (BranchDataP1, CoverInvariants, InternalInconsistency,
                     InvalidCoverData, Verdict, eigensheaf_degrees,
                     genus_from_eigensheaves, make_verdict, rh_genus,
                     validate_building_data)
from .grouplib import (AbelianGroup, Automorphism, Character, GroupElement, Subgroup,
                       common_kernel, graph_subgroup, orthogonal_complement, pair_elements,
                       split_character, split_element)


@dataclass
class ProductQuotientSpec:
    group: AbelianGroup
    psi: Automorphism
    branch1: BranchDataP1
    branch2: BranchDataP1
    # explicit overrides for actions not described by branch data (covers
    # constructed from equations rather than building data)
    fixed1: frozenset[GroupElement] | None = None
    fixed2: frozenset[GroupElement] | None = None


def fixed_point_elements(data: BranchDataP1) -> frozenset[GroupElement]:
    """Elements of G with fixed points on the cover curve: every nonzero
    element of an inertia subgroup <gamma> over a branch point."""
    fixed: set[GroupElement] = set()
    for gamma, deg in data.degrees.items():
        if deg == 0:
            continue
        power = gamma
        while not power.is_zero():
            fixed.add(power)
            power = power + gamma
    return frozenset(fixed)


def is_free(psi: Automorphism, fix1, fix2) -> tuple[bool, GroupElement | None]:
    """Does the graph of psi act freely?  (g, psi(g)) has a fixed point on the
    product iff g has one on the first curve and psi(g) has one on the second.
    Returns (flag, witness); the witness is the smallest violating element."""
    violations = sorted((g for g in fix1 if psi(g) in fix2 and not g.is_zero()),
                        key=lambda g: g.coords)
    if violations:
        return False, violations[0]
    return True, None


def beauville_invariants(g1: int, g2: int, order: int) -> CoverInvariants:
    """chi = 1, K^2 = 8, p_g = q = 0 for a free product-quotient of curves of
    genera g1, g2 by a group of order (g1 - 1)(g2 - 1)."""
    if (g1 - 1) * (g2 - 1) != order:
        raise InvalidCoverData(
            f"invariant mismatch: (g1-1)(g2-1) = {(g1 - 1) * (g2 - 1)} != |G| = {order}")
    return CoverInvariants(K2=8, chi=1, pg=0, q=0)


def two_k_bidegree(branch1: BranchDataP1, branch2: BranchDataP1) -> tuple[int, int]:
    """Bidegree (b1, b2) of the line bundle on P^1 x P^1 whose pullback is
    2K_S: twice the canonical class of the quadric plus the full branch
    divisor, so b_i = (total branch degree of curve i) - 4.  Only covers with
    all inertia of order 2 are supported."""
    for data in (branch1, branch2):
        for gamma in data.degrees:
            if gamma.order() != 2:
                raise InvalidCoverData(
                    "bidegree formula requires all inertia groups of order 2")
    return branch1.total_degree() - 4, branch2.total_degree() - 4


def quotient_iso(psi: Automorphism):
    """The isomorphism (G x G)/Gamma -> G sending the class of (a, b) to
    b - psi(a); the graph is exactly the kernel of this map."""
    group = psi.group

    def iso(pair: GroupElement) -> GroupElement:
        a, b = split_element(pair)
        if a.group != group:
            raise InvalidCoverData("element of the wrong product group")
        return b - psi(a)

    return iso


def induced_character(chi_pair: Character, psi: Automorphism) -> Character:
    """The character of G = (G x G)/Gamma determined by a character of G x G
    that is trivial on the graph of psi.

    Evaluating on the coset representative (0, g) gives the second-component
    character; triviality on the graph makes this independent of the chosen
    representative.
    """
    group = psi.group
    for gen in group.generators():
        if chi_pair.pairing(pair_elements(gen, psi(gen))) != 0:
            raise InvalidCoverData(
                "character does not vanish on the graph, so it does not descend")
    _, chi2 = split_character(chi_pair)
    return chi2


def _h0_p1xp1(a: int, b: int) -> int:
    return (a + 1) * (b + 1) if a >= 0 and b >= 0 else 0


@dataclass
class EigenEntry:
    character: Character                 # of G x G, lying in Gamma-perp
    factors: tuple[Character, Character]
    bidegree: tuple[int, int]            # of the product eigensheaf M_chi
    dimension: int


@dataclass
class BicanonicalReport:
    genera: tuple[int, int]
    invariants: CoverInvariants
    bidegree: tuple[int, int]
    entries: list[EigenEntry]
    p2: int
    kernel: Subgroup           # inside G, identified with (G x G)/Gamma
    verdict: Verdict

    def dimension(self, chi_pair: Character) -> int:
        for entry in self.entries:
            if entry.character == chi_pair:
                return entry.dimension
        raise KeyError(
            f"character {chi_pair.coords} is not in Gamma-perp; the eigentable "
            "is supported on Gamma-perp only")


def bicanonical_report(spec: ProductQuotientSpec) -> BicanonicalReport:
    for name, data in (("first", spec.branch1), ("second", spec.branch2)):
        report = validate_building_data(data)
        if not report.ok:
            fail = report.first_failure()
            raise InvalidCoverData(
                f"{name} curve building data invalid: {fail.name} ({fail.detail})")

    g1, g2 = rh_genus(spec.branch1), rh_genus(spec.branch2)
    invariants = beauville_invariants(g1, g2, spec.group.order)

    fix1 = spec.fixed1 if spec.fixed1 is not None else fixed_point_elements(spec.branch1)
    fix2 = spec.fixed2 if spec.fixed2 is not None else fixed_point_elements(spec.branch2)
    free, witness = is_free(spec.psi, fix1, fix2)
    if not free:
        raise InvalidCoverData(
            f"the graph action is not free: witness {witness.coords}")

    bidegree = two_k_bidegree(spec.branch1, spec.branch2)
    table1 = eigensheaf_degrees(spec.branch1)
    table2 = eigensheaf_degrees(spec.branch2)
    # the two genus routes must agree before we rely on the tables
    for g, table in ((g1, table1), (g2, table2)):
        if genus_from_eigensheaves(table) != g:
            raise InternalInconsistency("eigensheaf table disagrees with Riemann-Hurwitz")

    gamma_perp = orthogonal_complement(graph_subgroup(spec.psi))
    entries = []
    for chi_pair in gamma_perp.elements():
        chi1, chi2 = split_character(chi_pair)
        d = (table1.degree(chi1), table2.degree(chi2))
        dim = _h0_p1xp1(bidegree[0] - d[0], bidegree[1] - d[1])
        entries.append(EigenEntry(chi_pair, (chi1, chi2), d, dim))

    p2 = sum(e.dimension for e in entries)
    if p2 != invariants.K2 + invariants.chi:
        raise InternalInconsistency(
            f"eigentable sums to {p2}, expected K^2 + chi = "
            f"{invariants.K2 + invariants.chi}")

    contributing = [induced_character(e.character, spec.psi)
                    for e in entries if e.dimension > 0]
    kernel = common_kernel(contributing, spec.group)
    return BicanonicalReport((g1, g2), invariants, bidegree, entries, p2,
                             kernel, make_verdict(kernel))
