"""Chain coordinates, planar base domains, cone membership, and samplers.

COORDINATE CONVENTION
=====================
A chain of k levels in dimension d is placed in canonical coordinates

    w_j = (eta_1, ..., eta_j, 0, ..., 0),      eta_j = sqrt(xi_j^2 - xi_{j-1}^2),

so that ||w_j|| = xi_j and (w_j - w_i) is orthogonal to w_i for i < j.  Base
membership then reduces to coordinate comparisons, no linear solves.

Two cone variants share this frame:

  simplex variant (k = d)      base = conv{w_1, ..., w_d}
  wedge variant   (k = d - 2)  base = conv({w_1, ..., w_{d-3}} u lifted domain)

where the planar domain lives in the terminal 2-plane spanned by the last
two axes, with local origin at the chain endpoint w_{d-2}.  A scaled point
y in the base hyperplane {x_1 = xi_1} belongs to the simplex base iff

    1 >= y_2/eta_2 >= ... >= y_d/eta_d >= 0,

and to the wedge base iff the inequalities hold through level d-2 with
a = y_{d-2}/eta_{d-2}, and (y_{d-1}/a, y_d/a) lies in the domain.

Uniform sampling uses the ordered-uniform representation of the simplex and
the join decomposition y = (1-t) p + t q for the wedge, whose join parameter
t = y_{d-2}/eta_{d-2} carries density proportional to t^2 (1-t)^(d-4),
a Beta(3, d-3) law.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import betaincinv

from .formulas import (
    EDGE_TOL,
    chain_floor,
    chain_height,
    sector_geometry,
    truncation_scalars,
)

__all__ = [
    "ChainSpec",
    "canonical_chain",
    "PlanarDomain",
    "Triangle",
    "Sector",
    "Disc",
    "DiscSquare",
    "DiscPolygon",
    "UnionDomain",
    "wedge_domain",
    "sector_domain",
    "triangle_domain",
    "truncation_domain",
    "WedgeConfig",
    "canonical_simplex",
    "canonical_wedge",
    "sector_wedge",
    "truncated_wedge",
    "cone_contains",
    "cone_contains_many",
    "lead_transform",
    "sample_base",
    "sample_base_params",
    "assemble_base_points",
    "base_volume",
]


# ---------------------------------------------------------------------------
# chains


@dataclass(frozen=True)
class ChainSpec:
    """A k-level chain in dimension d with per-level norms xi_1 <= ... <= xi_k.

    Norms must respect the floors xi_i >= m_i = sqrt(2i/(i+1)); the canonical
    chain has equality everywhere.
    """

    d: int
    k: int
    xi: tuple[float, ...]
    eta: tuple[float, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"dimension must be >= 2, got {self.d}")
        if not (1 <= self.k <= self.d):
            raise ValueError(f"levels k must satisfy 1 <= k <= d, got k={self.k}, d={self.d}")
        if len(self.xi) != self.k:
            raise ValueError(f"expected {self.k} norms, got {len(self.xi)}")
        prev = 0.0
        etas = []
        for i, x in enumerate(self.xi, start=1):
            floor = chain_floor(i)
            if x < floor - EDGE_TOL:
                raise ValueError(f"norm xi_{i}={x} below floor {floor}")
            if x <= prev:
                raise ValueError(f"norms must increase strictly, xi_{i}={x} after {prev}")
            etas.append(math.sqrt(max(x * x - prev * prev, 0.0)))
            prev = x
        object.__setattr__(self, "xi", tuple(float(x) for x in self.xi))
        object.__setattr__(self, "eta", tuple(etas))

    @property
    def eta_array(self) -> np.ndarray:
        return np.asarray(self.eta)

    def vertices(self) -> np.ndarray:
        """Chain vertex coordinates, shape (k, d), row j-1 holding w_j."""
        out = np.zeros((self.k, self.d))
        for j in range(self.k):
            out[j, : j + 1] = self.eta[: j + 1]
        return out

    def is_canonical(self, tol: float = EDGE_TOL) -> bool:
        return all(abs(x - chain_floor(i + 1)) <= tol for i, x in enumerate(self.xi))


def canonical_chain(d: int, k: int) -> ChainSpec:
    """Chain with xi_i = m_i exactly."""
    if not (1 <= k <= d):
        raise ValueError(f"levels k must satisfy 1 <= k <= d, got k={k}, d={d}")
    return ChainSpec(d=d, k=k, xi=tuple(chain_floor(i) for i in range(1, k + 1)))


# ---------------------------------------------------------------------------
# planar domains (local coordinates, origin at the chain endpoint)


def _as_points(pts) -> np.ndarray:
    arr = np.atleast_2d(np.asarray(pts, dtype=float))
    if arr.shape[-1] != 2:
        raise ValueError(f"expected 2D points, got shape {arr.shape}")
    return arr


def _fan_measure(r: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Angular measure at radii r of the triangle (origin, a, b).

    Assumes the edge a -> b subtends less than pi as seen from the origin
    (always true for edges of a convex region containing the origin and for
    triangle fans).  Degenerate edges through the origin contribute zero.
    """
    r = np.asarray(r, dtype=float)
    na, nb = math.hypot(*a), math.hypot(*b)
    cross_ab = a[0] * b[1] - a[1] * b[0]
    if na < 1e-15 or nb < 1e-15 or abs(cross_ab) < 1e-30:
        return np.zeros_like(r)
    span = math.atan2(cross_ab, float(np.dot(a, b)))
    sign = 1.0
    if span < 0:
        a, b = b, a
        span = -span
        sign = -1.0
    e = b - a
    p = abs(a[0] * b[1] - a[1] * b[0]) / math.hypot(*e)
    # angle of the foot of the perpendicular, measured from a
    foot = a + (np.dot(-a, e) / np.dot(e, e)) * e
    cross_af = a[0] * foot[1] - a[1] * foot[0]
    delta = math.atan2(cross_af, float(np.dot(a, foot)))
    with np.errstate(invalid="ignore", divide="ignore"):
        c = np.where(r > p, np.arccos(np.clip(p / np.maximum(r, 1e-300), -1.0, 1.0)), 0.0)
    lo = np.maximum(0.0, delta - c)
    hi = np.minimum(span, delta + c)
    removed = np.maximum(0.0, hi - lo)
    return sign * (span - removed)


def _segment_circle_area(a: np.ndarray, b: np.ndarray, R: float) -> float:
    """Green contribution of directed edge a -> b to area(polygon ^ disc(R))."""
    pts = [a]
    e = b - a
    ee = float(np.dot(e, e))
    if ee > 0.0:
        # solve |a + s e|^2 = R^2 for s in (0, 1)
        ae = float(np.dot(a, e))
        disc = ae * ae - ee * (float(np.dot(a, a)) - R * R)
        if disc > 0.0:
            root = math.sqrt(disc)
            for s in sorted(((-ae - root) / ee, (-ae + root) / ee)):
                if 1e-14 < s < 1.0 - 1e-14:
                    pts.append(a + s * e)
    pts.append(b)
    total = 0.0
    for p, q in zip(pts[:-1], pts[1:]):
        mid = 0.5 * (p + q)
        if float(np.dot(mid, mid)) <= R * R:
            total += 0.5 * (p[0] * q[1] - p[1] * q[0])
        else:
            ang = math.atan2(p[0] * q[1] - p[1] * q[0], float(np.dot(p, q)))
            total += 0.5 * R * R * ang
    return total


class PlanarDomain:
    """Common surface for the 2D base regions.

    Concrete kinds provide: ``kind``, ``area``, ``max_radius``, vectorized
    ``contains``, uniform ``sample``, the radial mass density ``radial_mass``
    (so that integral of radial_mass over [0, max_radius] equals the area)
    and ``radial_breakpoints`` where that density has kinks.
    """

    kind: str = "abstract"
    area: float
    max_radius: float

    def contains(self, pts, tol: float = EDGE_TOL):
        raise NotImplementedError

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        raise NotImplementedError

    def radial_mass(self, r) -> np.ndarray:
        raise NotImplementedError

    def radial_breakpoints(self) -> list[float]:
        return [0.0, self.max_radius]

    def _rejection_sample(self, n, rng, lo, hi):
        out = np.empty((n, 2))
        got = 0
        while got < n:
            m = max(2 * (n - got), 64)
            cand = rng.uniform(lo, hi, size=(m, 2))
            keep = cand[self.contains(cand)]
            take = min(n - got, len(keep))
            out[got : got + take] = keep[:take]
            got += take
        return out


class Triangle(PlanarDomain):
    kind = "triangle"

    def __init__(self, v0, v1, v2):
        verts = np.asarray([v0, v1, v2], dtype=float)
        e1, e2 = verts[1] - verts[0], verts[2] - verts[0]
        area2 = float(e1[0] * e2[1] - e1[1] * e2[0])
        if area2 < 0:
            verts = verts[::-1]
            area2 = -area2
        if area2 <= 0:
            raise ValueError("degenerate triangle")
        self.vertices = verts
        self.area = 0.5 * area2
        self.max_radius = float(np.max(np.hypot(verts[:, 0], verts[:, 1])))

    def contains(self, pts, tol: float = EDGE_TOL):
        p = _as_points(pts)
        ok = np.ones(len(p), dtype=bool)
        v = self.vertices
        for i in range(3):
            a, b = v[i], v[(i + 1) % 3]
            e = b - a
            ln = math.hypot(*e)
            signed = (e[0] * (p[:, 1] - a[1]) - e[1] * (p[:, 0] - a[0])) / ln
            ok &= signed >= -tol
        return ok

    def sample(self, n, rng):
        u = rng.random((n, 2))
        flip = u.sum(axis=1) > 1.0
        u[flip] = 1.0 - u[flip]
        v = self.vertices
        return v[0] + u[:, :1] * (v[1] - v[0]) + u[:, 1:] * (v[2] - v[0])

    def radial_mass(self, r):
        r = np.asarray(r, dtype=float)
        v = self.vertices
        meas = np.zeros_like(r)
        for i in range(3):
            meas = meas + _fan_measure(r, v[i], v[(i + 1) % 3])
        return r * np.maximum(meas, 0.0)

    def radial_breakpoints(self):
        v = self.vertices
        pts = {0.0, self.max_radius}
        for i in range(3):
            a, b = v[i], v[(i + 1) % 3]
            e = b - a
            ee = float(np.dot(e, e))
            if ee > 0:
                s = float(np.dot(-a, e)) / ee
                foot = a + np.clip(s, 0.0, 1.0) * e
                pts.add(float(math.hypot(*foot)))
            pts.add(float(math.hypot(*a)))
        return sorted(x for x in pts if x <= self.max_radius + 1e-15)


class Sector(PlanarDomain):
    """Circular sector centered at the origin, angles [ang0, ang1], span < pi."""

    kind = "sector"

    def __init__(self, radius, ang0, ang1):
        if radius <= 0:
            raise ValueError("sector radius must be positive")
        if not (0 < ang1 - ang0 < math.pi):
            raise ValueError("sector span must lie in (0, pi)")
        self.radius = float(radius)
        self.ang0 = float(ang0)
        self.ang1 = float(ang1)
        self.area = 0.5 * radius * radius * (ang1 - ang0)
        self.max_radius = float(radius)
        self._u0 = np.array([math.cos(ang0), math.sin(ang0)])
        self._u1 = np.array([math.cos(ang1), math.sin(ang1)])

    def contains(self, pts, tol: float = EDGE_TOL):
        p = _as_points(pts)
        r = np.hypot(p[:, 0], p[:, 1])
        side0 = self._u0[0] * p[:, 1] - self._u0[1] * p[:, 0]
        side1 = self._u1[0] * p[:, 1] - self._u1[1] * p[:, 0]
        return (r <= self.radius + tol) & (side0 >= -tol) & (side1 <= tol)

    def sample(self, n, rng):
        ang = rng.uniform(self.ang0, self.ang1, size=n)
        r = self.radius * np.sqrt(rng.random(n))
        return np.column_stack([r * np.cos(ang), r * np.sin(ang)])

    def radial_mass(self, r):
        r = np.asarray(r, dtype=float)
        return np.where(r <= self.radius, (self.ang1 - self.ang0) * r, 0.0)


class Disc(PlanarDomain):
    kind = "disc"

    def __init__(self, radius):
        if radius <= 0:
            raise ValueError("disc radius must be positive")
        self.radius = float(radius)
        self.area = math.pi * radius * radius
        self.max_radius = float(radius)

    def contains(self, pts, tol: float = EDGE_TOL):
        p = _as_points(pts)
        return np.hypot(p[:, 0], p[:, 1]) <= self.radius + tol

    def sample(self, n, rng):
        ang = rng.uniform(0.0, 2.0 * math.pi, size=n)
        r = self.radius * np.sqrt(rng.random(n))
        return np.column_stack([r * np.cos(ang), r * np.sin(ang)])

    def radial_mass(self, r):
        r = np.asarray(r, dtype=float)
        return np.where(r <= self.radius, 2.0 * math.pi * r, 0.0)


class DiscSquare(PlanarDomain):
    """Disc of radius R intersected with the square [-g, g]^2.

    Area and radial mass use exact circular-segment arithmetic.
    """

    kind = "disc_cap_square"

    def __init__(self, radius, half_width):
        if radius <= 0 or half_width <= 0:
            raise ValueError("radius and half_width must be positive")
        self.radius = float(radius)
        self.half_width = float(half_width)
        R, g = self.radius, self.half_width
        if R <= g:
            self.area = math.pi * R * R
        elif R >= g * math.sqrt(2.0):
            self.area = 4.0 * g * g
        else:
            self.area = math.pi * R * R - 4.0 * (
                R * R * math.acos(g / R) - g * math.sqrt(R * R - g * g)
            )
        self.max_radius = float(min(R, g * math.sqrt(2.0)))

    def contains(self, pts, tol: float = EDGE_TOL):
        p = _as_points(pts)
        r = np.hypot(p[:, 0], p[:, 1])
        box = (np.abs(p[:, 0]) <= self.half_width + tol) & (np.abs(p[:, 1]) <= self.half_width + tol)
        return box & (r <= self.radius + tol)

    def sample(self, n, rng):
        R, g = self.radius, self.half_width
        if R <= g:
            return Disc(R).sample(n, rng)
        if R >= g * math.sqrt(2.0):
            return rng.uniform(-g, g, size=(n, 2))
        out = np.empty((n, 2))
        got = 0
        while got < n:
            m = max(2 * (n - got), 64)
            ang = rng.uniform(0.0, 2.0 * math.pi, size=m)
            r = R * np.sqrt(rng.random(m))
            cand = np.column_stack([r * np.cos(ang), r * np.sin(ang)])
            keep = cand[(np.abs(cand[:, 0]) <= g) & (np.abs(cand[:, 1]) <= g)]
            take = min(n - got, len(keep))
            out[got : got + take] = keep[:take]
            got += take
        return out

    def radial_mass(self, r):
        r = np.asarray(r, dtype=float)
        g = self.half_width
        with np.errstate(invalid="ignore", divide="ignore"):
            angle = np.where(
                r <= g,
                2.0 * math.pi,
                2.0 * math.pi - 8.0 * np.arccos(np.clip(g / np.maximum(r, 1e-300), 0.0, 1.0)),
            )
        angle = np.maximum(angle, 0.0)
        return np.where(r <= self.max_radius, angle * r, 0.0)

    def radial_breakpoints(self):
        pts = sorted({0.0, min(self.half_width, self.max_radius), self.max_radius})
        return pts


class DiscPolygon(PlanarDomain):
    """Disc of radius R intersected with a convex polygon containing the origin."""

    kind = "disc_cap_polygon"

    def __init__(self, radius, vertices):
        if radius <= 0:
            raise ValueError("disc radius must be positive")
        verts = np.asarray(vertices, dtype=float)
        if verts.ndim != 2 or verts.shape[0] < 3 or verts.shape[1] != 2:
            raise ValueError("polygon needs at least 3 planar vertices")
        # orient counterclockwise
        area2 = 0.0
        for i in range(len(verts)):
            a, b = verts[i], verts[(i + 1) % len(verts)]
            area2 += a[0] * b[1] - a[1] * b[0]
        if area2 < 0:
            verts = verts[::-1].copy()
        self._edge_dist = []
        for i in range(len(verts)):
            a, b = verts[i], verts[(i + 1) % len(verts)]
            e = b - a
            f = verts[(i + 2) % len(verts)] - b
            cr = float(e[0] * f[1] - e[1] * f[0])
            if cr < -1e-12:
                raise ValueError("polygon must be convex")
            p = (a[0] * b[1] - a[1] * b[0]) / math.hypot(*e)
            if p <= 0:
                raise ValueError("polygon must contain the origin strictly")
            self._edge_dist.append(p)
        self.radius = float(radius)
        self.vertices = verts
        self.area = sum(
            _segment_circle_area(verts[i], verts[(i + 1) % len(verts)], self.radius)
            for i in range(len(verts))
        )
        self.max_radius = float(
            min(self.radius, float(np.max(np.hypot(verts[:, 0], verts[:, 1]))))
        )

    def contains(self, pts, tol: float = EDGE_TOL):
        p = _as_points(pts)
        r = np.hypot(p[:, 0], p[:, 1])
        ok = r <= self.radius + tol
        v = self.vertices
        for i in range(len(v)):
            a, b = v[i], v[(i + 1) % len(v)]
            e = b - a
            ln = math.hypot(*e)
            signed = (e[0] * (p[:, 1] - a[1]) - e[1] * (p[:, 0] - a[0])) / ln
            ok &= signed >= -tol
        return ok

    def sample(self, n, rng):
        # the polygon contains disc(min edge distance), so acceptance from the
        # enclosing disc is at least (min_dist/R)^2
        out = np.empty((n, 2))
        got = 0
        R = self.radius
        while got < n:
            m = max(2 * (n - got), 64)
            ang = rng.uniform(0.0, 2.0 * math.pi, size=m)
            r = R * np.sqrt(rng.random(m))
            cand = np.column_stack([r * np.cos(ang), r * np.sin(ang)])
            keep = cand[self.contains(cand, tol=0.0)]
            take = min(n - got, len(keep))
            out[got : got + take] = keep[:take]
            got += take
        return out

    def radial_mass(self, r):
        r = np.asarray(r, dtype=float)
        v = self.vertices
        meas = np.zeros_like(r)
        for i in range(len(v)):
            meas = meas + _fan_measure(r, v[i], v[(i + 1) % len(v)])
        return np.where(r <= self.radius, r * np.maximum(meas, 0.0), 0.0)

    def radial_breakpoints(self):
        pts = {0.0, self.max_radius}
        v = self.vertices
        for i in range(len(v)):
            pts.add(float(math.hypot(*v[i])))
            pts.add(self._edge_dist[i])
        return sorted(x for x in pts if x <= self.max_radius + 1e-15)


class UnionDomain(PlanarDomain):
    """Disjoint union of planar domains (components may share boundary only)."""

    kind = "union"

    def __init__(self, components):
        comps = list(components)
        if not comps:
            raise ValueError("empty union")
        self.components = comps
        self.area = sum(c.area for c in comps)
        self.max_radius = max(c.max_radius for c in comps)

    def contains(self, pts, tol: float = EDGE_TOL):
        p = _as_points(pts)
        ok = np.zeros(len(p), dtype=bool)
        for c in self.components:
            ok |= c.contains(p, tol)
        return ok

    def sample(self, n, rng):
        weights = np.array([c.area for c in self.components])
        weights = weights / weights.sum()
        counts = rng.multinomial(n, weights)
        parts = [c.sample(int(m), rng) for c, m in zip(self.components, counts) if m > 0]
        pts = np.concatenate(parts, axis=0)
        rng.shuffle(pts, axis=0)
        return pts

    def radial_mass(self, r):
        r = np.asarray(r, dtype=float)
        total = np.zeros_like(r)
        for c in self.components:
            total = total + c.radial_mass(r)
        return total

    def radial_breakpoints(self):
        pts = set()
        for c in self.components:
            pts.update(c.radial_breakpoints())
        return sorted(pts)


def triangle_domain(d: int) -> Triangle:
    """Right triangle with legs h_{d-1}, h_d at the chain endpoint."""
    if d < 4:
        raise ValueError(f"triangle domain needs d >= 4, got {d}")
    a, b = chain_height(d - 1), chain_height(d)
    return Triangle((0.0, 0.0), (a, 0.0), (a, b))


def sector_domain(d: int) -> Sector:
    """Circular sector closing the corner angle of the triangle to pi/4."""
    geo = sector_geometry(d)
    return Sector(geo.radius, geo.alpha, math.pi / 4.0)


def wedge_domain(d: int) -> UnionDomain:
    """Triangle and sector joined along the common corner ray.

    Local coordinates sit in the terminal 2-plane with origin at the chain
    endpoint; the union subtends exactly the angle pi/4 there.
    """
    return UnionDomain([triangle_domain(d), sector_domain(d)])


def truncation_domain(d: int, h: float, shape: str = "disc", vertices=None) -> PlanarDomain:
    """Trace disc of radius g0(h), optionally capped by a square or polygon.

    The square has half-width g(h).  A polygon must be admissible: every
    vertex outside the open trace disc and every side line at distance at
    least g(h) from the center.
    """
    g0, g = truncation_scalars(d, h)
    if shape == "disc":
        return Disc(g0)
    if shape == "disc_cap_square":
        return DiscSquare(g0, g)
    if shape == "disc_cap_polygon":
        if vertices is None:
            raise ValueError("polygon shape requires vertices")
        dom = DiscPolygon(g0, vertices)
        for v in dom.vertices:
            if math.hypot(*v) < g0 - EDGE_TOL:
                raise ValueError(f"polygon vertex {tuple(v)} inside the trace disc (g0={g0})")
        for p in dom._edge_dist:
            if p < g - EDGE_TOL:
                raise ValueError(f"polygon side at distance {p} closer than clearance g={g}")
        return dom
    raise ValueError(f"unknown truncation shape {shape!r}")


# ---------------------------------------------------------------------------
# cone configurations


@dataclass(frozen=True)
class WedgeConfig:
    """A cone with apex at the origin over a simplex or joined base.

    chain.k == chain.d with no domain gives the simplex variant; chain.k ==
    chain.d - 2 with a planar domain gives the wedge variant.
    """

    chain: ChainSpec
    domain: PlanarDomain | None = None

    def __post_init__(self):
        if self.domain is None:
            if self.chain.k != self.chain.d:
                raise ValueError("simplex variant requires k == d")
        else:
            if self.chain.d < 4:
                raise ValueError("wedge variant requires d >= 4")
            if self.chain.k != self.chain.d - 2:
                raise ValueError("wedge variant requires k == d - 2")

    @property
    def d(self) -> int:
        return self.chain.d

    @property
    def is_simplex(self) -> bool:
        return self.domain is None


def canonical_simplex(d: int) -> WedgeConfig:
    return WedgeConfig(chain=canonical_chain(d, d))


def canonical_wedge(d: int) -> WedgeConfig:
    return WedgeConfig(chain=canonical_chain(d, d - 2), domain=wedge_domain(d))


def sector_wedge(d: int) -> WedgeConfig:
    return WedgeConfig(chain=canonical_chain(d, d - 2), domain=sector_domain(d))


def truncated_wedge(
    d: int,
    h: float,
    shape: str = "disc",
    vertices=None,
    chain: ChainSpec | None = None,
) -> WedgeConfig:
    """Truncated wedge at face height h over a canonical (or given) chain.

    The chain's terminal norm must equal h; by default the chain is
    (m_1, ..., m_{d-3}, h).
    """
    if chain is None:
        xi = tuple(chain_floor(i) for i in range(1, d - 2)) + (float(h),)
        chain = ChainSpec(d=d, k=d - 2, xi=xi)
    else:
        if abs(chain.xi[-1] - h) > 1e-9:
            raise ValueError("chain terminal norm must equal the face height h")
    return WedgeConfig(chain=chain, domain=truncation_domain(d, h, shape, vertices))


# ---------------------------------------------------------------------------
# membership


def cone_contains_many(config: WedgeConfig, dirs, tol: float = EDGE_TOL) -> np.ndarray:
    """Vectorized membership of rays in the cone over the base."""
    u = np.atleast_2d(np.asarray(dirs, dtype=float))
    if u.shape[1] != config.d:
        raise ValueError(f"directions must have dimension {config.d}")
    norms = np.linalg.norm(u, axis=1)
    if np.any(norms == 0.0):
        raise ValueError("zero direction vector")
    eta = config.chain.eta_array
    xi1 = config.chain.xi[0]
    out = np.zeros(len(u), dtype=bool)
    pos = u[:, 0] > 0.0
    if not np.any(pos):
        return out
    y = (xi1 / u[pos, 0])[:, None] * u[pos]
    k = config.chain.k
    tl = y[:, 1:k] / eta[1:k]
    ok = np.ones(len(y), dtype=bool)
    prev = np.ones(len(y))
    for j in range(tl.shape[1]):
        ok &= tl[:, j] <= prev + tol
        prev = tl[:, j]
    if config.is_simplex:
        if k > 1:
            ok &= tl[:, -1] >= -tol
    else:
        a = tl[:, -1] if k > 1 else np.ones(len(y))
        ok &= a >= -tol
        q1, q2 = y[:, -2], y[:, -1]
        small = a <= tol
        ok_small = small & (np.abs(q1) <= tol) & (np.abs(q2) <= tol)
        big = ok & ~small
        ok_big = np.zeros(len(y), dtype=bool)
        if np.any(big):
            pts = np.column_stack([q1[big] / a[big], q2[big] / a[big]])
            ok_big[big] = config.domain.contains(pts, tol)
        ok = (ok & ok_small) | ok_big
    out[pos] = ok
    return out


def cone_contains(config: WedgeConfig, u, tol: float = EDGE_TOL) -> bool:
    """True iff the ray from the origin through u meets the base."""
    return bool(cone_contains_many(config, np.asarray(u, dtype=float)[None, :], tol)[0])


# ---------------------------------------------------------------------------
# sampling and volume


def lead_transform(d: int, is_simplex: bool, u) -> np.ndarray:
    """Inverse CDF of the lead coordinate from uniforms.

    Simplex variant: the largest ordered coordinate, distribution u^(1/(d-1)).
    Wedge variant: the join parameter t with density t^2 (1-t)^(d-4), a
    Beta(3, d-3) law (plain t^2 when the prefix is a single vertex).
    """
    u = np.asarray(u, dtype=float)
    if is_simplex:
        return u ** (1.0 / (d - 1))
    if d == 4:
        return u ** (1.0 / 3.0)
    return betaincinv(3.0, float(d - 3), u)


def sample_base_params(config: WedgeConfig, rng: np.random.Generator, n: int, lead_u=None):
    """Draw the base parametrization (tilde, q) for n uniform base points.

    tilde holds the ordered coordinates y_i/eta_i for levels 2..k, one row
    per sample; q holds local domain points for the wedge variant (None for
    the simplex).  lead_u optionally supplies the uniforms driving the lead
    coordinate (the simplex maximum, or the wedge join parameter t), which
    is how stratified estimation plugs in.
    """
    d = config.d
    u = rng.random(n) if lead_u is None else np.asarray(lead_u, dtype=float)
    lead = lead_transform(d, config.is_simplex, u)
    if config.is_simplex:
        if d > 2:
            tail = np.sort(rng.random((n, d - 2)), axis=1)[:, ::-1]
            tilde = np.column_stack([lead, lead[:, None] * tail])
        else:
            tilde = lead[:, None]
        return tilde, None
    if d > 4:
        tail = np.sort(rng.random((n, d - 4)), axis=1)[:, ::-1]
        tilde = np.column_stack([lead[:, None] + (1.0 - lead[:, None]) * tail, lead])
    else:
        tilde = lead[:, None]
    q = config.domain.sample(n, rng)
    return tilde, q


def assemble_base_points(config: WedgeConfig, tilde, q=None) -> np.ndarray:
    """Map base parameters to points of the base in E^d."""
    tilde = np.atleast_2d(np.asarray(tilde, dtype=float))
    n = len(tilde)
    eta = config.chain.eta_array
    k = config.chain.k
    pts = np.zeros((n, config.d))
    pts[:, 0] = eta[0]
    pts[:, 1:k] = tilde * eta[1:k]
    if not config.is_simplex:
        t = tilde[:, -1] if k > 1 else np.ones(n)
        pts[:, -2:] = t[:, None] * np.asarray(q, dtype=float)
    return pts


def sample_base(config: WedgeConfig, rng: np.random.Generator, n: int = 1) -> np.ndarray:
    """n points uniformly distributed on the (d-1)-dimensional base."""
    tilde, q = sample_base_params(config, rng, n)
    return assemble_base_points(config, tilde, q)


def base_volume(config: WedgeConfig) -> float:
    """(d-1)-volume of the base.

    Simplex variant: prod(eta_2..eta_d)/(d-1)!.  Wedge variant:
    (2/(d-1)!) prod(eta_2..eta_{d-2}) * area(domain).
    """
    d = config.d
    eta = config.chain.eta
    if config.is_simplex:
        prod = 1.0
        for e in eta[1:]:
            prod *= e
        return prod / math.factorial(d - 1)
    prod = 1.0
    for e in eta[1:]:
        prod *= e
    return 2.0 * prod * config.domain.area / math.factorial(d - 1)
