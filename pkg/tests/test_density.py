import math

import numpy as np
import pytest

from oracles import planar_corner_density, tetrahedron_corner_density
from packbounds import density as dn
from packbounds import formulas as fm
from packbounds import geometry as geo

SEED = 97531


def combined(a, b):
    return math.hypot(a.stderr, b.stderr)


# ---------------------------------------------------------------------------
# anchors


def test_planar_anchor():
    # 1D integral oracle for the d=2 value
    from scipy.integrate import quad

    oracle, _ = quad(lambda t: 1.0 / (1.0 + t * t), 0.0, 1.0 / math.sqrt(3.0))
    oracle *= math.sqrt(3.0)
    assert oracle == pytest.approx(math.pi / (2.0 * math.sqrt(3.0)), abs=1e-12)
    assert oracle == pytest.approx(planar_corner_density(), abs=1e-12)
    est = dn.simplex_density(2, 200_000, SEED)
    assert abs(est.value - oracle) <= 3.0 * est.stderr


def test_spatial_anchor():
    oracle = tetrahedron_corner_density()
    assert oracle == pytest.approx(0.7796356, abs=1e-7)
    est = dn.simplex_density(3, 200_000, SEED + 1)
    assert abs(est.value - oracle) <= 3.0 * est.stderr


def test_closed_forms():
    assert dn.closed_form_simplex_density(2).value == pytest.approx(
        0.9068997, abs=1e-7
    )
    assert dn.closed_form_simplex_density(3).value == pytest.approx(
        tetrahedron_corner_density(), abs=1e-15
    )
    assert dn.closed_form_simplex_density(3).method == "closed_form"
    with pytest.raises(ValueError):
        dn.closed_form_simplex_density(4)


def test_anchor_failure_rate_binomial():
    # 20 independent seeds per anchor; at three standard errors the expected
    # miss count is 20 * 2 * 0.0027, so three misses are already suspicious
    misses = 0
    for k in range(20):
        for d, oracle in ((2, planar_corner_density()), (3, tetrahedron_corner_density())):
            est = dn.simplex_density(d, 100_000, 1000 + k)
            if abs(est.value - oracle) > 3.0 * est.stderr:
                misses += 1
    assert misses <= 2


# ---------------------------------------------------------------------------
# estimator mechanics


def test_determinism_bit_identical():
    a = dn.wedge_density(8, 50_000, 42)
    b = dn.wedge_density(8, 50_000, 42)
    assert a.value == b.value and a.stderr == b.stderr
    c = dn.wedge_density(8, 50_000, 43)
    assert c.value != a.value


def test_density_in_unit_interval_and_integrand_bounds():
    for d in (2, 5, 9, 16):
        est = dn.simplex_density(d, 20_000, SEED + d)
        assert 0.0 < est.value < 1.0
    # canonical integrand range pins the density between the extremes
    d = 8
    lo = (2.0 * d / (d + 1)) ** (-0.5 * d)
    est = dn.simplex_density(d, 50_000, SEED)
    assert lo < est.value < 1.0


def test_stderr_scales_like_inverse_sqrt_n():
    ns = [10**4, 10**5, 10**6]
    slopes = []
    for seed in range(3):
        ses = [dn.simplex_density(8, n, 500 + seed).stderr for n in ns]
        fit = np.polyfit(np.log(ns), np.log(ses), 1)
        slopes.append(fit[0])
    assert np.mean(slopes) == pytest.approx(-0.5, abs=0.05)


def test_surface_density_rejects_bad_n():
    with pytest.raises(ValueError):
        dn.simplex_density(8, 0, SEED)
    with pytest.raises(ValueError):
        dn.simplex_density(1, 100, SEED)
    with pytest.raises(ValueError):
        dn.wedge_density(3, 100, SEED)
    with pytest.raises(ValueError):
        dn.sector_density(3, 100, SEED)


def test_antithetic_reduces_variance():
    plain = dn.wedge_density(8, 200_000, SEED, antithetic=False)
    anti = dn.wedge_density(8, 200_000, SEED, antithetic=True)
    assert anti.stderr < plain.stderr
    assert abs(anti.value - plain.value) <= 4.0 * combined(anti, plain)


# ---------------------------------------------------------------------------
# identities across configurations


def test_triangle_wedge_reproduces_simplex_density():
    # the cone over the lifted triangle is the canonical simplex cone
    d = 8
    tri_cfg = geo.WedgeConfig(geo.canonical_chain(d, d - 2), geo.triangle_domain(d))
    a = dn.surface_density(tri_cfg, 400_000, SEED + 5)
    b = dn.simplex_density(d, 400_000, SEED + 6)
    assert abs(a.value - b.value) <= 3.0 * combined(a, b)


@pytest.mark.parametrize("d", [4, 6, 8])
def test_combination_identity(d):
    n = 400_000
    sig = dn.simplex_density(d, n, SEED + 10 + d)
    lam = dn.sector_density(d, n, SEED + 20 + d)
    hat = dn.wedge_density(d, n, SEED + 30 + d)
    tri = geo.triangle_domain(d)
    sec = geo.sector_domain(d)
    mix = (tri.area * sig.value + sec.area * lam.value) / (tri.area + sec.area)
    se = math.sqrt(
        (tri.area / (tri.area + sec.area) * sig.stderr) ** 2
        + (sec.area / (tri.area + sec.area) * lam.stderr) ** 2
        + hat.stderr**2
    )
    assert abs(hat.value - mix) <= 3.0 * se


def test_improvement_gap_consistency():
    g = dn.improvement_gap(8, 400_000, SEED + 40)
    # the paired sigma agrees with the independent simplex estimate
    ind = dn.simplex_density(8, 400_000, SEED + 41)
    assert abs(g.sigma.value - ind.value) <= 3.0 * combined(g.sigma, ind)
    # the combination equals the independent wedge estimate
    hat = dn.wedge_density(8, 400_000, SEED + 42)
    assert abs(g.sigma_hat.value - hat.value) <= 3.0 * combined(g.sigma_hat, hat)
    # internal identity is exact
    tri = geo.triangle_domain(8)
    sec = geo.sector_domain(8)
    w_tri = tri.area / (tri.area + sec.area)
    assert g.sigma_hat.value == pytest.approx(
        w_tri * g.sigma.value + (1 - w_tri) * g.lam.value, abs=1e-15
    )
    assert g.gap == pytest.approx(g.sigma.value - g.sigma_hat.value, abs=1e-15)
    assert g.gap > 0 and g.gap_stderr < g.sigma.stderr


def test_ordering_below_threshold_recorded_not_asserted():
    # below d = 8 the gaps are measured and reported, whatever their sign
    g = dn.improvement_gap(5, 100_000, SEED + 50)
    assert math.isfinite(g.gap) and g.gap_stderr > 0


# ---------------------------------------------------------------------------
# limiting density


def test_limiting_density_norm_dependence_only():
    chain = geo.canonical_chain(8, 6)
    x1 = (0.1, 0.05)
    r = math.hypot(*x1)
    x2 = (r * math.cos(1.1), r * math.sin(1.1))
    a = dn.limiting_surface_density(chain, x1, 100_000, SEED + 60)
    b = dn.limiting_surface_density(chain, x2, 100_000, SEED + 61)
    assert abs(a.value - b.value) <= 3.0 * combined(a, b)
    # identical inputs and seed: identical value
    c = dn.limiting_surface_density(chain, x1, 100_000, SEED + 60)
    assert c.value == a.value


def test_limiting_density_profile_monotone_and_bounded():
    chain = geo.canonical_chain(8, 6)
    radii = np.linspace(0.0, 0.5, 6)
    prof = dn.limiting_density_profile(chain, radii, 200_000, SEED + 62)
    assert np.all(prof.values < 1.0) and np.all(prof.values > 0.0)
    for i in range(5):
        drop = prof.values[i] - prof.values[i + 1]
        assert drop >= -3.0 * prof.diff_stderr(i, i + 1)
    # pointwise integrand is below one, so the value at the chain endpoint too
    at_zero = prof.values[0]
    assert at_zero < 1.0


def test_limiting_density_validation():
    chain = geo.canonical_chain(8, 6)
    with pytest.raises(ValueError):
        dn.limiting_surface_density(chain, (0.0, 0.0, 0.0), 1000, 1)
    with pytest.raises(ValueError):
        dn.limiting_density_profile(geo.canonical_chain(8, 8), [0.1], 1000, 1)
    with pytest.raises(ValueError):
        dn.limiting_density_profile(chain, [-0.1], 1000, 1)


def test_profile_mean_reproduces_wedge_density():
    # area-weighted average of the limiting profile over the base domain
    d = 8
    chain = geo.canonical_chain(d, d - 2)
    dom = geo.wedge_domain(d)
    nodes = np.linspace(0.0, dom.max_radius, 200)
    mids = 0.5 * (nodes[:-1] + nodes[1:])
    weights = dom.radial_mass(mids) * np.diff(nodes)
    prof = dn.limiting_density_profile(chain, mids, 300_000, SEED + 63)
    mean, se = prof.mean_functional(weights)
    hat = dn.wedge_density(d, 300_000, SEED + 64)
    assert abs(mean - hat.value) <= 3.0 * math.hypot(se, hat.stderr) + 1e-5


# ---------------------------------------------------------------------------
# quadrature


def test_quadrature_anchors():
    q2 = dn.quadrature_density(geo.canonical_simplex(2))
    assert abs(q2.value - planar_corner_density()) < 1e-8
    q3 = dn.quadrature_density(geo.canonical_simplex(3))
    assert abs(q3.value - tetrahedron_corner_density()) < 1e-6
    assert q2.method == "quadrature"


@pytest.mark.parametrize(
    "cfg_make,d",
    [(geo.canonical_simplex, 5), (geo.canonical_wedge, 5), (geo.canonical_wedge, 8)],
)
def test_quadrature_cross_oracle(cfg_make, d):
    q = dn.quadrature_density(cfg_make(d), ns=256, na=256, nr=128)
    m = dn.surface_density(cfg_make(d), 400_000, SEED + d)
    assert abs(q.value - m.value) <= 3.0 * math.hypot(q.stderr, m.stderr)


def test_quadrature_guard_and_tolerance():
    with pytest.raises(ValueError):
        dn.quadrature_density(geo.canonical_simplex(13))
    with pytest.raises(RuntimeError):
        dn.quadrature_density(geo.canonical_simplex(6), ns=64, na=64, tol=1e-15)


def test_quadrature_handles_general_chain():
    # inflated chain, both oracles agree
    xi = tuple(fm.chain_floor(i) * 1.05 for i in range(1, 6))
    cfg = geo.WedgeConfig(geo.ChainSpec(d=5, k=5, xi=xi))
    q = dn.quadrature_density(cfg, ns=256, na=256)
    m = dn.surface_density(cfg, 300_000, SEED + 70)
    assert abs(q.value - m.value) <= 3.0 * math.hypot(q.stderr, m.stderr)


# ---------------------------------------------------------------------------
# packing consequences


def test_voronoi_bounds_exact_planar_case():
    vol, surf = dn.voronoi_bounds(2, dn.closed_form_simplex_density(2))
    assert vol == pytest.approx(2.0 * math.sqrt(3.0), abs=1e-12)
    assert surf == pytest.approx(2.0 * vol, abs=1e-12)


def test_voronoi_bounds_d8():
    est = dn.DensityEstimate(0.25, 0.0, 0, 0, "closed_form")
    vol, surf = dn.voronoi_bounds(8, est)
    assert vol == pytest.approx(fm.unit_ball_volume(8) / 0.25, rel=1e-12)
    assert surf == pytest.approx(8.0 * vol, rel=1e-12)
    smaller = dn.DensityEstimate(0.2, 0.0, 0, 0, "closed_form")
    vol2, _ = dn.voronoi_bounds(8, smaller)
    assert vol2 > vol
    with pytest.raises(ValueError):
        dn.voronoi_bounds(8, dn.DensityEstimate(0.0, 0.0, 0, 0, "closed_form"))


def test_bound_set_fields():
    bs = dn.bound_set(8, 100_000, SEED + 80)
    assert bs.d == 8
    assert 0 < bs.sigma_hat.value < bs.sigma.value + 3 * combined(bs.sigma, bs.sigma_hat)
    assert bs.volume_lower == pytest.approx(
        fm.unit_ball_volume(8) / bs.sigma_hat.value, rel=1e-12
    )
    assert bs.surface_lower == pytest.approx(8.0 * bs.volume_lower, rel=1e-12)


def test_density_estimate_validation():
    with pytest.raises(ValueError):
        dn.DensityEstimate(1.5, 0.0, 0, 0, "closed_form")
    with pytest.raises(ValueError):
        dn.DensityEstimate(0.5, -1.0, 0, 0, "closed_form")
