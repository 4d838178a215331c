#!/usr/bin/env python3
"""How the wedge improves on the simplex bound, and why.

Part 1 measures the gap sigma - sigma_hat with the paired estimator that
shares chain draws between the triangle and sector components; the gap
shrinks rapidly with dimension yet stays hundreds of standard errors from
zero.

Part 2 shows the mechanism: the limiting surface density at a point of the
terminal plane falls with the point's distance from the chain endpoint, and
the sector places more of its area far out than the triangle does.

Usage: python demos/gap_and_profile.py
"""

import numpy as np

from packbounds import improvement_gap, limiting_density_profile
from packbounds.formulas import sector_geometry
from packbounds.geometry import canonical_chain, sector_domain, triangle_domain

SEED = 4242


def main():
    print("Part 1: the measured gap, d = 8..16  (n = 2e5 per dimension)")
    print(f"  {'d':>3} {'sigma':>11} {'sigma_hat':>11} {'gap':>10} {'se(gap)':>9} {'gap/se':>7}")
    for d in range(8, 17):
        g = improvement_gap(d, 200_000, SEED + d)
        print(f"  {d:>3} {g.sigma.value:>11.7f} {g.sigma_hat.value:>11.7f} "
              f"{g.gap:>10.2e} {g.gap_stderr:>9.1e} {g.gap / g.gap_stderr:>7.0f}")

    d = 8
    chain = canonical_chain(d, d - 2)
    rmax = sector_geometry(d).radius
    radii = np.linspace(0.0, 1.5 * rmax, 7)
    prof = limiting_density_profile(chain, radii, 300_000, SEED)

    print(f"\nPart 2: limiting surface density along a ray, d = {d}")
    print(f"  {'radius':>9} {'density':>11} {'se':>9}")
    for r, v, s in zip(radii, prof.values, prof.stderr()):
        bar = "#" * int(round(4000 * (v - prof.values[-1])))
        print(f"  {r:>9.5f} {v:>11.7f} {s:>9.1e}  {bar}")

    tri, sec = triangle_domain(d), sector_domain(d)
    grid = np.linspace(0, rmax, 400)

    def mean_radius(dom):
        w = dom.radial_mass(grid)
        return float((grid * w).sum() / w.sum())

    print(f"\n  mean point radius in the triangle part: {mean_radius(tri):.5f}")
    print(f"  mean point radius in the sector part:   {mean_radius(sec):.5f}")
    print("  farther points mean lower density, so the sector part drags the")
    print("  wedge density strictly below the simplex value.")


if __name__ == "__main__":
    main()
