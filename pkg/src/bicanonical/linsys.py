"""Exact dimensions of linear systems of plane curves with assigned base
multiplicities.

h^0 of a class d*l - sum(m_i e_i) on the blowup of P^2 equals the dimension of
the space of degree-d forms vanishing to order m_i at the corresponding
points.  That dimension is (d+1)(d+2)/2 minus the rank of the interpolation
matrix whose rows are all partial-derivative conditions of order < m_i at
P_i, and the rank is computed exactly over the rationals.  On special point
configurations (such as the complete quadrilateral) this rank drops below the
generic count, which is precisely the phenomenon the computations here need
to capture; no genericity assumption is ever made.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactlinalg import exact_rank
from .piclattice import DivisorClass

Coord = Fraction


def _to_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("point coordinates must be exact (int, Fraction or 'p/q' string)")
    return Fraction(x)


@dataclass(frozen=True)
class ProjectivePoint:
    coords: tuple[Fraction, Fraction, Fraction]

    def __post_init__(self):
        if len(self.coords) != 3 or all(c == 0 for c in self.coords):
            raise ValueError("a projective point needs three coordinates, not all zero")

    @classmethod
    def of(cls, x, y, z) -> "ProjectivePoint":
        return cls((_to_fraction(x), _to_fraction(y), _to_fraction(z)))

    def same_point(self, other: "ProjectivePoint") -> bool:
        a, b = self.coords, other.coords
        return (a[0] * b[1] == a[1] * b[0] and a[0] * b[2] == a[2] * b[0]
                and a[1] * b[2] == a[2] * b[1])


def collinear(p: ProjectivePoint, q: ProjectivePoint, r: ProjectivePoint) -> bool:
    a, b, c = p.coords, q.coords, r.coords
    det = (a[0] * (b[1] * c[2] - b[2] * c[1])
           - a[1] * (b[0] * c[2] - b[2] * c[0])
           + a[2] * (b[0] * c[1] - b[1] * c[0]))
    return det == 0


@dataclass(frozen=True)
class PointConfig:
    """Labelled points with exact coordinates plus incidence assertions.

    Each incidence ((i, j), k) asserts that point k lies on the line through
    points i and j (1-based labels); all assertions and pairwise distinctness
    are verified exactly at construction time.
    """

    points: tuple[ProjectivePoint, ...]
    labels: tuple[str, ...]
    incidences: tuple[tuple[tuple[int, int], int], ...] = ()

    def __post_init__(self):
        if len(self.points) != len(self.labels):
            raise ValueError("one label per point, please")
        for a in range(len(self.points)):
            for b in range(a + 1, len(self.points)):
                if self.points[a].same_point(self.points[b]):
                    raise ValueError(f"points {self.labels[a]} and {self.labels[b]} coincide")
        for (i, j), k in self.incidences:
            if not collinear(self.points[i - 1], self.points[j - 1], self.points[k - 1]):
                raise ValueError(
                    f"asserted incidence fails: {self.labels[k - 1]} is not on the "
                    f"line {self.labels[i - 1]}{self.labels[j - 1]}")

    @property
    def n_points(self) -> int:
        return len(self.points)

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    def point_collinear(self, i: int, j: int, k: int) -> bool:
        """Collinearity of three points by 1-based index."""
        return collinear(self.points[i - 1], self.points[j - 1], self.points[k - 1])


def quadrilateral_config() -> PointConfig:
    """The six special points of a complete quadrilateral: vertices P1..P4 and
    the two extra diagonal points P5 = P1P2 ^ P3P4, P6 = P1P4 ^ P2P3."""
    pts = (ProjectivePoint.of(1, 0, 0), ProjectivePoint.of(0, 1, 0),
           ProjectivePoint.of(0, 0, 1), ProjectivePoint.of(1, 1, 1),
           ProjectivePoint.of(1, 1, 0), ProjectivePoint.of(0, 1, 1))
    return PointConfig(
        points=pts,
        labels=("P1", "P2", "P3", "P4", "P5", "P6"),
        incidences=(((1, 2), 5), ((3, 4), 5), ((1, 4), 6), ((2, 3), 6)),
    )


@dataclass(frozen=True)
class FatPointSystem:
    degree: int
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be >= 0")
        if any(m < 0 for m in self.multiplicities):
            raise ValueError("multiplicities must be >= 0")


def _monomials(d: int) -> list[tuple[int, int, int]]:
    return [(a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1)]


def _falling(base: int, k: int) -> int:
    out = 1
    for t in range(k):
        out *= base - t
    return out


def _derivative_row(mono, order, point) -> Fraction | int:
    """Value at `point` of the (dx,dy,dz) partial derivative of x^a y^b z^c."""
    (a, b, c), (dx, dy, dz) = mono, order
    if a < dx or b < dy or c < dz:
        return 0
    coef = _falling(a, dx) * _falling(b, dy) * _falling(c, dz)
    x, y, z = point.coords
    return coef * x ** (a - dx) * y ** (b - dy) * z ** (c - dz)


def interpolation_matrix(cfg: PointConfig, system: FatPointSystem) -> list[list]:
    """One row per vanishing condition, one column per degree-d monomial."""
    monos = _monomials(system.degree)
    rows = []
    for idx, m in enumerate(system.multiplicities):
        point = cfg.points[idx]
        for total in range(m):
            for dx in range(total, -1, -1):
                for dy in range(total - dx, -1, -1):
                    dz = total - dx - dy
                    rows.append([_derivative_row(mono, (dx, dy, dz), point) for mono in monos])
    return rows


def h0_fat_points(cfg: PointConfig, system: FatPointSystem) -> int:
    """dim of degree-d forms with multiplicity >= m_i at each P_i."""
    if len(system.multiplicities) != cfg.n_points:
        raise ValueError("need one multiplicity per configured point")
    n_monomials = (system.degree + 1) * (system.degree + 2) // 2
    rows = interpolation_matrix(cfg, system)
    return n_monomials - exact_rank(rows)


def h0_class(cfg: PointConfig, cls: DivisorClass, trace: list[str] | None = None) -> int:
    """h^0 of a divisor class d*l - sum(m_i e_i) on the blowup at the
    configured points.

    Negative multiplicities (a summand +e_i) are removed one copy at a time
    as fixed components; each removal is legitimate because the class meets
    e_i negatively at that step, and is recorded in `trace` when given.
    """
    if cls.lattice.kind != "blowup" or cls.lattice.rank != cfg.n_points + 1:
        raise ValueError("class does not live on the blowup at the configured points")
    d = cls.coefficient("l")
    if d < 0:
        if trace is not None:
            trace.append(f"negative degree d={d}: empty system")
        return 0
    mult = [-cls.coefficient(f"e{i}") for i in range(1, cfg.n_points + 1)]
    for i in range(cfg.n_points):
        while mult[i] < 0:
            # cls . e_i equals the current m_i, so a negative value certifies
            # that e_i is a fixed component
            if trace is not None:
                trace.append(f"removed fixed component e{i + 1} (class meets it in {mult[i]})")
            mult[i] += 1
    return h0_fat_points(cfg, FatPointSystem(d, tuple(mult)))


def apply_projectivity(cfg: PointConfig, matrix) -> PointConfig:
    """Transform every point by an exact invertible 3x3 matrix; incidence
    assertions carry over (projectivities preserve collinearity)."""
    mat = [[_to_fraction(x) for x in row] for row in matrix]
    det = (mat[0][0] * (mat[1][1] * mat[2][2] - mat[1][2] * mat[2][1])
           - mat[0][1] * (mat[1][0] * mat[2][2] - mat[1][2] * mat[2][0])
           + mat[0][2] * (mat[1][0] * mat[2][1] - mat[1][1] * mat[2][0]))
    if det == 0:
        raise ValueError("projectivity matrix is singular")
    new_points = tuple(
        ProjectivePoint(tuple(sum(mat[r][c] * p.coords[c] for c in range(3))
                              for r in range(3)))
        for p in cfg.points)
    return PointConfig(new_points, cfg.labels, cfg.incidences)
