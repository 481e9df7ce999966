"""Invariants of double covers and building data for Z_2^n abelian covers.

A double cover defined by 2M = D has

    K_Y^2    = 2 (K_S + M)^2,
    chi(O_Y) = 2 chi(O_S) + M(K_S + M)/2,
    p_g(Y)   = p_g(S) + h^0(S, K_S + M),

and q = p_g + 1 - chi.  For a Z_2^n cover of P^1 given by branch divisors
D_gamma (one per nonzero gamma) the character eigensheaf has degree

    deg L_chi = (1/2) * sum of deg D_gamma over gamma outside ker chi,

which specialises on the dual basis characters to the defining relations
2 L_i = sum eps_i(gamma) D_gamma of the building data.  The genus of the
cover curve then comes out of either Riemann-Hurwitz or the eigensheaf
table; the two routes are independent and are cross-checked throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .grouplib import AbelianGroup, Character, GroupElement, Subgroup, common_kernel
from .piclattice import DivisorClass, Lattice, canonical_class


class InvalidCoverData(ValueError):
    """Branch data or numeric cover input that fails a validity condition."""


class InternalInconsistency(RuntimeError):
    """A consistency identity (eigentable sum, plurigenus bookkeeping) failed."""


@dataclass(frozen=True)
class CoverInvariants:
    K2: int
    chi: int
    pg: int
    q: int

    def __post_init__(self):
        if self.q != self.pg + 1 - self.chi:
            raise InvalidCoverData("q must equal p_g + 1 - chi")
        if self.pg < 0:
            raise InvalidCoverData("p_g must be >= 0")

    def is_geometric(self) -> bool:
        """Whether the tuple can belong to a connected surface (q >= 0).
        Formal inputs (e.g. branch data of a disconnected cover) may fail this."""
        return self.q >= 0

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.K2, self.chi, self.pg, self.q)


@dataclass(frozen=True)
class DoubleCoverInput:
    """Numerics of a double cover 2M = D: the base invariants, the two
    intersection numbers of M, and h^0(K_S + M)."""

    label: str
    chi_base: int
    pg_base: int
    K2_base: int
    M_sq: int
    M_K: int
    h0_K_plus_M: int

    def __post_init__(self):
        if self.h0_K_plus_M < 0:
            raise InvalidCoverData("a section-space dimension cannot be negative")

    @classmethod
    def from_classes(cls, label: str, chi_base: int, pg_base: int,
                     K: DivisorClass, M: DivisorClass, h0_K_plus_M: int,
                     branch: DivisorClass | None = None) -> "DoubleCoverInput":
        if branch is not None and 2 * M != branch:
            raise InvalidCoverData("branch class is not twice the square root M")
        return cls(label, chi_base, pg_base, K.dot(K), M.dot(M), M.dot(K), h0_K_plus_M)


def double_cover_invariants(inp: DoubleCoverInput) -> CoverInvariants:
    m_k_plus_m = inp.M_K + inp.M_sq
    if m_k_plus_m % 2 != 0:
        raise InvalidCoverData(
            f"{inp.label}: M(K+M) = {m_k_plus_m} is odd, so chi is not an integer")
    K2 = 2 * (inp.K2_base + 2 * inp.M_K + inp.M_sq)
    chi = 2 * inp.chi_base + m_k_plus_m // 2
    pg = inp.pg_base + inp.h0_K_plus_M
    return CoverInvariants(K2, chi, pg, pg + 1 - chi)


@dataclass(frozen=True)
class ValidationCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[ValidationCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[ValidationCheck]:
        return [c for c in self.checks if not c.passed]

    def first_failure(self) -> ValidationCheck | None:
        fails = self.failures()
        return fails[0] if fails else None


class BranchDataP1:
    """Branch data of an abelian cover of P^1.

    entries maps nonzero group elements to branch divisors, given either as a
    plain degree or as a tuple of distinct point labels; line_bundles holds
    the degrees of L_1..L_n attached to the dual basis characters.  Zero
    divisors may simply be omitted.
    """

    def __init__(self, group: AbelianGroup, entries, line_bundles=None):
        self.group = group
        degrees: dict[GroupElement, int] = {}
        points: dict[GroupElement, tuple[str, ...]] = {}
        for gamma, value in entries.items():
            if not isinstance(gamma, GroupElement) or gamma.group != group:
                raise InvalidCoverData("branch divisors must be indexed by group elements")
            if gamma.is_zero():
                raise InvalidCoverData("only nonzero elements carry branch divisors")
            if isinstance(value, int):
                deg = value
            else:
                pts = tuple(value)
                if len(set(pts)) != len(pts):
                    raise InvalidCoverData(f"repeated branch point in D_{gamma.coords}")
                points[gamma] = pts
                deg = len(pts)
            if deg < 0:
                raise InvalidCoverData("a branch divisor has nonnegative degree")
            if deg:
                degrees[gamma] = deg
        self.degrees = degrees
        self.points = points
        self.line_bundles = None if line_bundles is None else tuple(int(x) for x in line_bundles)
        if self.line_bundles is not None and len(self.line_bundles) != group.rank:
            raise InvalidCoverData("need one line bundle degree per generator")

    def total_degree(self) -> int:
        return sum(self.degrees.values())

    def degree_of(self, gamma: GroupElement) -> int:
        return self.degrees.get(gamma, 0)

    def charged_degree(self, chi: Character) -> int:
        """Total branch degree on elements outside ker(chi)."""
        return sum(d for g, d in self.degrees.items() if not chi.annihilates(g))

    def sorted_entries(self) -> list[tuple[GroupElement, int]]:
        return sorted(self.degrees.items(), key=lambda item: item[0].coords)


def dual_basis_degrees(group: AbelianGroup, data: BranchDataP1) -> tuple[int, ...]:
    """The line bundle degrees forced by the branch divisors (degree of L_i is
    half the branch degree charged by the i-th dual basis character)."""
    out = []
    for chi in _dual_basis(group):
        s = data.charged_degree(chi)
        if s % 2 != 0:
            raise InvalidCoverData(
                f"charged branch degree {s} for character {chi.coords} is odd")
        out.append(s // 2)
    return tuple(out)


def _dual_basis(group: AbelianGroup) -> list[Character]:
    return [group.character([1 if j == i else 0 for j in range(group.rank)])
            for i in range(group.rank)]


def validate_building_data(data) -> ValidationReport:
    """Check the defining relations of the building data.

    On P^1 the relations are numeric: 2 deg L_i = charged branch degree for
    each dual basis character, plus disjointness of the supports.  On a
    surface they are exact lattice identities: 2L_1 = D_2 + D_3 and
    2L_2 = D_1 + D_3.  Failures are reported, not raised.
    """
    if isinstance(data, BranchDataSurface):
        return _validate_surface(data)
    checks = []
    seen: dict[str, tuple[int, ...]] = {}
    support_ok, support_detail = True, ""
    for gamma, pts in data.points.items():
        for p in pts:
            if p in seen:
                support_ok = False
                support_detail = (f"point {p} appears in D_{seen[p]} and in "
                                  f"D_{gamma.coords}")
            seen[p] = gamma.coords
    checks.append(ValidationCheck("branch supports disjoint", support_ok, support_detail))
    if data.line_bundles is None:
        checks.append(ValidationCheck("line bundles given", False,
                                      "no line bundle degrees were supplied"))
    else:
        for i, chi in enumerate(_dual_basis(data.group)):
            charged = data.charged_degree(chi)
            ok = 2 * data.line_bundles[i] == charged
            checks.append(ValidationCheck(
                f"2L{i + 1} matches the charged branch degree", ok,
                f"2*{data.line_bundles[i]} vs {charged}"))
    return ValidationReport(tuple(checks))


def rh_genus_numeric(cover_degree: int, branch) -> int:
    """Riemann-Hurwitz over P^1 with branch points given as (count, inertia
    order) pairs: 2 - 2g = deg * (2 - sum over branch points of (1 - 1/ord))."""
    if cover_degree < 1:
        raise InvalidCoverData("a cover has degree >= 1")
    ram = Fraction(0)
    for count, order in branch:
        ram += count * (1 - Fraction(1, order))
    chi_top = cover_degree * (2 - ram)
    if chi_top.denominator != 1:
        raise InvalidCoverData("Riemann-Hurwitz gives a non-integral Euler number")
    chi_top = int(chi_top)
    if chi_top % 2 != 0:
        raise InvalidCoverData("Riemann-Hurwitz gives an odd Euler number")
    return (2 - chi_top) // 2


def rh_genus(data: BranchDataP1) -> int:
    """Genus of the cover curve: each branch point of D_gamma has cyclic
    inertia generated by gamma."""
    return rh_genus_numeric(data.group.order,
                            [(deg, gamma.order()) for gamma, deg in data.degrees.items()])


@dataclass(frozen=True)
class EigensheafTable:
    """Degree of the character eigensheaf L_chi for every character, in
    lexicographic character order; the trivial character has degree 0."""

    group: AbelianGroup
    degrees: tuple[tuple[Character, int], ...]

    def degree(self, chi: Character) -> int:
        for c, d in self.degrees:
            if c == chi:
                return d
        raise KeyError(f"character {chi.coords} is not in the table")

    def degree_list(self) -> list[int]:
        return [d for _, d in self.degrees]


def eigensheaf_degrees(data: BranchDataP1) -> EigensheafTable:
    """Eigensheaf degrees for a 2-elementary group: deg L_chi is half the
    charged branch degree.  Groups with a factor of order > 2 would need the
    general eigensheaf formula, which is out of scope here, so they are
    rejected outright rather than guessed at."""
    if any(m != 2 for m in data.group.moduli):
        raise InvalidCoverData(
            "eigensheaf degrees are implemented only for groups of exponent 2")
    table = []
    for chi in data.group.characters():
        s = data.charged_degree(chi)
        if s % 2 != 0:
            raise InvalidCoverData(
                f"charged branch degree {s} for character {chi.coords} is odd")
        table.append((chi, s // 2))
    return EigensheafTable(data.group, tuple(table))


def genus_from_degrees(degrees) -> int:
    """g = 1 - sum over characters of (1 - deg L_chi)."""
    return 1 - sum(1 - d for d in degrees)


def genus_from_eigensheaves(table: EigensheafTable) -> int:
    """Genus of the cover from its eigensheaf table; independent of the
    Riemann-Hurwitz route."""
    return genus_from_degrees(table.degree_list())


class BranchDataSurface:
    """Building data of a Z_2 x Z_2 cover of a rational surface: branch
    classes D_1, D_2, D_3 and line bundle classes L_1, L_2 (L_3 is forced to
    be L_1 + L_2 - D_3).  `components` may list the irreducible pieces of
    each D_i when they are known, which lets reports count the (-2)-curves
    inside the branch locus."""

    def __init__(self, lattice: Lattice, D, L, components=None):
        D = tuple(D)
        L = tuple(L)
        if len(D) != 3 or len(L) != 2:
            raise InvalidCoverData("need branch classes D1,D2,D3 and bundles L1,L2")
        for cls in (*D, *L):
            if cls.lattice != lattice:
                raise InvalidCoverData("all classes must live on the given lattice")
        self.lattice = lattice
        self.D = D
        self.L = (L[0], L[1], L[0] + L[1] - D[2])
        self.components = None
        if components is not None:
            components = tuple(tuple(part) for part in components)
            if len(components) != 3:
                raise InvalidCoverData("need one component list per branch class")
            self.components = components

    def total_branch(self) -> DivisorClass:
        return self.D[0] + self.D[1] + self.D[2]


def _validate_surface(data: BranchDataSurface) -> ValidationReport:
    checks = []
    relations = ((0, "2L1 = D2 + D3", 2 * data.L[0], data.D[1] + data.D[2]),
                 (1, "2L2 = D1 + D3", 2 * data.L[1], data.D[0] + data.D[2]))
    for _, name, lhs, rhs in relations:
        checks.append(ValidationCheck(name, lhs == rhs, f"{lhs} vs {rhs}"))
    if data.components is not None:
        for i, parts in enumerate(data.components):
            total = data.lattice.zero()
            for part in parts:
                total = total + part
            checks.append(ValidationCheck(
                f"components of D{i + 1} sum to D{i + 1}", total == data.D[i],
                f"{total} vs {data.D[i]}"))
    return ValidationReport(tuple(checks))


def z22_surface_cover_invariants(data: BranchDataSurface, h0, chi_base: int = 1) -> CoverInvariants:
    """Invariants of the Z_2 x Z_2 cover X of a rational surface:
    p_g from the three h^0(K + L_i), chi from 4*chi(base) + sum L_i(K+L_i)/2,
    and K_X^2 from 2K_X = pullback of (2K + D)."""
    report = validate_building_data(data)
    if not report.ok:
        fail = report.first_failure()
        raise InvalidCoverData(f"building data invalid: {fail.name} ({fail.detail})")
    K = canonical_class(data.lattice)
    pg = sum(h0(K + Li) for Li in data.L)
    s = sum(Li.dot(K + Li) for Li in data.L)
    if s % 2 != 0:
        raise InvalidCoverData("sum of L_i(K + L_i) is odd, so chi is not an integer")
    chi = 4 * chi_base + s // 2
    two_K_up = 2 * K + data.total_branch()
    K2 = two_K_up.dot(two_K_up)  # degree 4 cover: (2K_X)^2 = 4 (2K+D)^2
    return CoverInvariants(K2, chi, pg, pg + 1 - chi)


def projection_decomposition(total: DivisorClass, bundles, h0) -> list[tuple[str, DivisorClass, int]]:
    """Character decomposition of the sections of the pullback of `total`
    along a Z_2 x Z_2 cover: the invariant part h^0(total) and one twisted
    part h^0(total - L_i) per nontrivial character."""
    out = [("1", total, h0(total))]
    for i, Li in enumerate(bundles, start=1):
        cls = total - Li
        out.append((f"chi{i}", cls, h0(cls)))
    return out


@dataclass
class Verdict:
    """Outcome of a bicanonical-degree computation: the subgroup acting
    trivially on the bicanonical sections, and the resulting degree (1 when
    the kernel is trivial; 2 when the kernel is an involution, which is the
    maximum the degree bound allows; undetermined otherwise)."""

    kernel: Subgroup
    degree: int | None

    @property
    def birational(self) -> bool:
        return self.kernel.order == 1


def make_verdict(kernel: Subgroup) -> Verdict:
    if kernel.order == 1:
        return Verdict(kernel, 1)
    if kernel.order == 2:
        # the map factors through the involution, and the degree bound for
        # minimal surfaces with p_g = 0 and K^2 = 7, 8 caps the degree at 2
        return Verdict(kernel, 2)
    return Verdict(kernel, None)


_Z22 = AbelianGroup((2, 2))
# nonzero elements gamma_1, gamma_2, gamma_3 and for each the unique
# nontrivial character chi_i orthogonal to it
Z22_GAMMAS = (_Z22.element((1, 0)), _Z22.element((0, 1)), _Z22.element((1, 1)))
Z22_CHIS = (_Z22.character((0, 1)), _Z22.character((1, 0)), _Z22.character((1, 1)))


def z22_element_name(g: GroupElement) -> str:
    names = {(0, 0): "0", (1, 0): "γ₁", (0, 1): "γ₂", (1, 1): "γ₃"}
    return names[g.coords]


@dataclass
class Z22CoverReport:
    invariants: CoverInvariants       # of the cover X, before contractions
    K2_minimal: int | None            # after contracting the lifted (-1)-curves
    total_class: DivisorClass         # 2K + D, whose pullback is 2K_X
    eigentable: list[tuple[str, DivisorClass, int]]
    p2: int
    kernel: Subgroup
    verdict: Verdict


def inoue_building_data() -> BranchDataSurface:
    """Building data of the Z_2 x Z_2 cover of the quadrilateral blowup whose
    minimal model is the Inoue surface with K^2 = 7: branch classes assembled
    from the catalog divisors (one general member of |f_1| counted twice) and
    the two square roots L_1, L_2."""
    from .piclattice import quadrilateral_catalog

    cat = quadrilateral_catalog()
    comps = ((cat.Delta[0], cat.f[1], cat.S[0], cat.S[1]),
             (cat.Delta[1], cat.f[2]),
             (cat.Delta[2], cat.f[0], cat.f[0], cat.S[2], cat.S[3]))
    D = tuple(sum(parts, cat.lattice.zero()) for parts in comps)
    L1 = cat.lattice.cls({"l": 5, "e1": -1, "e2": -2, "e3": -1, "e4": -3, "e5": -2, "e6": -2})
    L2 = cat.lattice.cls({"l": 6, "e1": -2, "e2": -2, "e3": -2, "e4": -2, "e5": -3, "e6": -3})
    return BranchDataSurface(cat.lattice, D, (L1, L2), components=comps)


def z22_bicanonical_report(data: BranchDataSurface, h0) -> Z22CoverReport:
    """Full bicanonical analysis of a Z_2 x Z_2 cover: invariants, the
    character eigentable of the bicanonical sections, and the subgroup of the
    Galois group acting trivially on them."""
    inv = z22_surface_cover_invariants(data, h0)
    K = canonical_class(data.lattice)
    total = 2 * K + data.total_branch()
    table = projection_decomposition(total, data.L, h0)
    p2 = sum(dim for _, _, dim in table)

    K2_min = None
    if data.components is not None:
        minus_two = sum(1 for parts in data.components for part in parts
                        if part.self_intersection() == -2)
        # each (-2)-curve in the branch pulls back to two disjoint (-1)-curves
        K2_min = inv.K2 + 2 * minus_two
    if not inv.is_geometric():
        raise InternalInconsistency(
            f"computed q = {inv.q} < 0: the data does not describe a connected surface")
    if K2_min is not None and p2 != inv.chi + K2_min:
        raise InternalInconsistency(
            f"eigentable sums to {p2}, expected chi + K^2 = {inv.chi + K2_min}")

    contributing = [Z22_CHIS[i] for i, (_, _, dim) in enumerate(table[1:]) if dim > 0]
    kernel = common_kernel(contributing, _Z22)
    return Z22CoverReport(inv, K2_min, total, table, p2, kernel, make_verdict(kernel))
