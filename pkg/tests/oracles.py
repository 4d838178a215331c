"""Independent oracles used by the tests.

These deliberately avoid the library's own code paths: membership goes
through dense linear solves on the block decomposition of the join, areas
and centroids through plain 2D grids, so an indexing or ordering bug in the
production predicates cannot cancel out here.
"""

import math

import numpy as np


def membership_oracle(config, dirs, band=1e-9):
    """Classify rays against the cone by convex-combination solving.

    Returns (verdict, decided): verdict[i] is the oracle's inside/outside
    call, decided[i] is False when the ray lands within `band` of the
    boundary in any of the decomposed coordinates (those comparisons are
    float-ambiguous and excluded from agreement counts).
    """
    dirs = np.asarray(dirs, dtype=float)
    m = len(dirs)
    d = config.d
    chain = config.chain
    eta = np.asarray(chain.eta)
    xi1 = chain.xi[0]
    verdict = np.zeros(m, dtype=bool)
    decided = np.ones(m, dtype=bool)
    u1 = dirs[:, 0]
    norms = np.linalg.norm(dirs, axis=1)
    decided &= np.abs(u1) / norms > 1e-12
    pos = u1 > 0
    idx = np.where(pos & decided)[0]
    if len(idx) == 0:
        return verdict, decided
    z = (xi1 / u1[idx])[:, None] * dirs[idx]

    def simplex_weights(verts, pts):
        # unique convex-combination weights from a dense affine solve
        k = len(verts)
        mat = np.vstack([verts[:, 1:k].T, np.ones(k)])
        rhs = np.vstack([pts[:, 1:k].T, np.ones(len(pts))])
        return np.linalg.solve(mat, rhs)

    if config.is_simplex:
        verts = chain.vertices()
        weights = simplex_weights(verts, z)
        margin = weights.min(axis=0)
        ok = margin >= 0.0
        near = np.abs(margin) <= band
        verdict[idx] = ok
        decided[idx] &= ~near
        return verdict, decided

    # join decomposition z = (1-t) p + t q_lifted: t, q, p are all pinned
    # by coordinate blocks, so feasibility needs no search
    t = z[:, d - 3] / eta[d - 3]
    near = np.minimum(np.abs(t), np.abs(1.0 - t)) <= band
    ok = (t > 0.0) & (t < 1.0)
    safe_t = np.where(t > 0.0, t, np.nan)
    with np.errstate(invalid="ignore", divide="ignore"):
        q = z[:, -2:] / safe_t[:, None]
        inside_lo = config.domain.contains(np.nan_to_num(q, nan=1e6), tol=-band)
        inside_hi = config.domain.contains(np.nan_to_num(q, nan=1e6), tol=band)
    near |= ok & (inside_lo != inside_hi)
    ok &= inside_hi
    kpre = d - 3
    denom = np.where(t < 1.0, 1.0 - t, np.nan)
    with np.errstate(invalid="ignore", divide="ignore"):
        pcoords = (z[:, :kpre] - t[:, None] * eta[None, :kpre]) / denom[:, None]
    pcoords = np.nan_to_num(pcoords, nan=1e6)
    if kpre == 1:
        # the prefix simplex is the single vertex w_1 = (eta_1, 0, ...) and
        # p_1 = (z_1 - t eta_1)/(1 - t) = eta_1 identically: nothing to test
        pass
    else:
        prefix = chain.vertices()[:kpre, :kpre]
        weights = simplex_weights(prefix, pcoords)
        margin = weights.min(axis=0)
        near |= np.abs(margin) <= band
        ok &= margin >= 0.0
    verdict[idx] = ok
    decided[idx] &= ~near
    return verdict, decided


def rejection_area(domain, n, rng):
    """Unbiased bounding-box rejection estimate of the area, with stderr."""
    r = domain.max_radius
    pts = rng.uniform(-r, r, size=(n, 2))
    inside = domain.contains(pts)
    p = inside.mean()
    box = (2.0 * r) ** 2
    return p * box, box * math.sqrt(p * (1.0 - p) / n)


def mixed_directions(config, n, rng, jitter=0.05):
    """Random test rays, half Gaussian, half aimed near the base.

    Pure Gaussian directions almost never meet the (tiny) cone once d grows,
    so half the rays point at perturbed base points to exercise both sides
    of the membership predicate.
    """
    from packbounds.geometry import sample_base

    d = config.d
    half = n // 2
    gauss = rng.standard_normal((n - half, d))
    aimed = sample_base(config, rng, half)
    aimed = aimed + jitter * rng.standard_normal((half, d)) / math.sqrt(d)
    return np.vstack([gauss, aimed])


def grid_centroid(domain, cells=1500):
    r = domain.max_radius
    xs = np.linspace(-r, r, cells, endpoint=False) + r / cells
    X, Y = np.meshgrid(xs, xs)
    pts = np.column_stack([X.ravel(), Y.ravel()])
    inside = domain.contains(pts)
    sel = pts[inside]
    return sel.mean(axis=0)


def tetrahedron_corner_density() -> float:
    """Ball density in the regular simplex of edge 2 in three dimensions.

    Corner solid angle by spherical excess, corner cone volume excess/3,
    four corners, simplex volume 2 sqrt(2)/3.
    """
    excess = 3.0 * math.acos(1.0 / 3.0) - math.pi
    return (4.0 * excess / 3.0) / (2.0 * math.sqrt(2.0) / 3.0)


def planar_corner_density() -> float:
    """Ball density in the regular triangle of edge 2 (arc over area)."""
    # covered area: three pi/3 sectors of unit radius; triangle area sqrt(3)
    return (math.pi / 2.0) / math.sqrt(3.0)
