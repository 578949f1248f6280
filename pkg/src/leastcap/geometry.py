"""Triangles, barycentric coordinates and similarity transforms."""

from dataclasses import dataclass
import math

import numpy as np

from .errors import BoundaryError, DomainError


@dataclass(frozen=True)
class Triangle:
    """Three vertices in counterclockwise order.

    Use :meth:`from_points` to accept vertices in either orientation.
    """

    v: tuple

    def __post_init__(self):
        v = tuple(complex(p) for p in self.v)
        if len(v) != 3:
            raise DomainError("a triangle needs exactly three vertices")
        object.__setattr__(self, "v", v)
        longest = max(abs(v[1] - v[0]), abs(v[2] - v[1]), abs(v[0] - v[2]))
        area = self.signed_area
        if not all(math.isfinite(p.real) and math.isfinite(p.imag) for p in v):
            raise DomainError("vertices must be finite")
        if abs(area) <= 1e-12 * longest**2:
            raise DomainError("degenerate triangle")
        if area < 0:
            raise DomainError("vertices must be in counterclockwise order")

    @classmethod
    def from_points(cls, a, b, c):
        a, b, c = complex(a), complex(b), complex(c)
        if ((b - a).conjugate() * (c - a)).imag < 0:
            b, c = c, b
        return cls((a, b, c))

    @property
    def signed_area(self):
        a, b, c = self.v
        return 0.5 * ((b - a).conjugate() * (c - a)).imag

    @property
    def sides(self):
        """Side lengths; side k is opposite vertex k."""
        a, b, c = self.v
        return (abs(c - b), abs(a - c), abs(b - a))

    @property
    def diameter(self):
        return max(self.sides)

    @property
    def angles(self):
        """Interior angles divided by pi (the SC exponents alpha_k)."""
        out = []
        for k in range(3):
            p, q, r = self.v[k], self.v[(k + 1) % 3], self.v[(k + 2) % 3]
            ang = abs(np.angle((r - p) / (q - p)))
            out.append(ang / math.pi)
        return tuple(out)

    @property
    def centroid(self):
        return sum(self.v) / 3.0

    def barycentric(self, z):
        a, b, c = self.v
        z = complex(z)
        area2 = 2.0 * self.signed_area
        l1 = ((c - b).conjugate() * (z - b)).imag / area2
        l2 = ((a - c).conjugate() * (z - c)).imag / area2
        return (l1, l2, 1.0 - l1 - l2)

    def from_barycentric(self, b1, b2, b3=None):
        if b3 is None:
            b3 = 1.0 - b1 - b2
        a, b, c = self.v
        return b1 * a + b2 * b + b3 * c

    def boundary_distance(self, z):
        """Signed distance to the boundary, positive inside."""
        lam = self.barycentric(z)
        # height of vertex k over side k is 2*area/side_k
        heights = [2.0 * self.signed_area / s for s in self.sides]
        return min(l * h for l, h in zip(lam, heights))

    def side_distance(self, z, k):
        """Perpendicular distance from z to the line through side k."""
        return abs(self.barycentric(z)[k]) * 2.0 * self.signed_area / self.sides[k]

    def shortest_side(self):
        """Index of the shortest side; ties go to the first in vertex order."""
        s = self.sides
        return min(range(3), key=lambda k: (s[k], k))

    def contains(self, z, tol=0.0):
        """True when z lies in the closed triangle grown by ``tol`` (absolute)."""
        return self.boundary_distance(z) >= -tol

    def require_interior(self, z, margin=0.0, what="point"):
        d = self.boundary_distance(z)
        if d < 0:
            raise DomainError(f"{what} {complex(z)} lies outside the triangle")
        if d <= margin:
            raise BoundaryError(f"{what} {complex(z)} is within {margin:g} of the boundary")

    def boundary_points(self, per_side):
        """Points spaced evenly along each side, vertices excluded."""
        t = (np.arange(per_side) + 1.0) / (per_side + 1.0)
        pts = []
        for k in range(3):
            p, q = self.v[k], self.v[(k + 1) % 3]
            pts.append(p + t * (q - p))
        return np.concatenate(pts)


@dataclass(frozen=True)
class Similarity:
    """Map ``z -> a*z + b`` or, when ``reflect``, ``z -> a*conj(z) + b``."""

    a: complex
    b: complex
    reflect: bool = False

    def __call__(self, z):
        z = np.conj(z) if self.reflect else z
        return self.a * z + self.b

    def inverse(self, w):
        z = (w - self.b) / self.a
        return np.conj(z) if self.reflect else z

    @property
    def scale(self):
        return abs(self.a)


def similarity_between(src, dst, reflect=False):
    """Similarity taking ``src`` vertices 0 and 1 onto ``dst`` vertices 0 and 1."""
    p0, p1 = src[0], src[1]
    if reflect:
        p0, p1 = p0.conjugate(), p1.conjugate()
    a = (dst[1] - dst[0]) / (p1 - p0)
    b = dst[0] - a * p0
    return Similarity(a, b, reflect)


def match_shape(tri, canonical, tol=1e-9):
    """Similarity from ``tri`` onto ``canonical`` when their angles agree.

    Returns None if the shapes differ. Vertices are matched by angle; an
    orientation-reversing similarity is used when the cyclic order of the
    angles differs.
    """
    src = tri.angles
    dst = canonical.angles
    if max(abs(x - y) for x, y in zip(sorted(src), sorted(dst))) > tol:
        return None
    for reflect in (False, True):
        for shift in range(3):
            if reflect:
                order = [(shift - k) % 3 for k in range(3)]
            else:
                order = [(shift + k) % 3 for k in range(3)]
            if all(abs(src[order[k]] - dst[k]) <= tol for k in range(3)):
                pts = [tri.v[j] for j in order]
                sim = similarity_between(pts, canonical.v, reflect)
                err = max(abs(sim(p) - q) for p, q in zip(pts, canonical.v))
                if err <= 1e-9 * canonical.diameter:
                    return sim
    return None
