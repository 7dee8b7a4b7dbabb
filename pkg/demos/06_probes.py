#!/usr/bin/env python3
"""Probe displaceability: probes through facets, the interior sample grid,
and the sampled cross-check against the star Ewald condition."""

from fractions import Fraction

from ewaldkit import (
    cube,
    displaceable_by_probe,
    is_integrally_transverse,
    monotone_polygon,
    paffenholz_p6,
    star_ewald,
    star_probe_crosscheck,
)

print("=== a probe in the square ===")
sq = cube(2)
u = (Fraction(1, 2), Fraction(0))
probe = displaceable_by_probe(sq, u, bound=2)
print(f"point {tuple(map(str, u))}: probe through facet {probe.facet} "
      f"in direction {probe.direction}")
print(f"  enters at {tuple(map(str, probe.start))}, exits at "
      f"{tuple(map(str, probe.end))}")
print(f"the centre is never displaceable: "
      f"{displaceable_by_probe(sq, (0, 0), bound=3)}")

print()
print("=== integral transversality to a facet ===")
hex_normal = (1, 1)
for lam in [(0, -1), (-1, 0), (1, 1), (-1, -1)]:
    print(f"  direction {lam} vs normal {hex_normal}: "
          f"{is_integrally_transverse(lam, hex_normal)}")

print()
print("=== sampled cross-check: star Ewald polytopes displace every sample ===")
for name, p in [("hexagon", monotone_polygon("hexagon")), ("cube dim 3", cube(3))]:
    rep = star_probe_crosscheck(p, samples=4, bound=3)
    print(f"  {name}: star={rep.star_ewald}, displaceable "
          f"{rep.displaceable}/{rep.total} at bound {rep.bound}")

print()
print("=== the Paffenholz polytope near its star-failing vertex ===")
p6 = paffenholz_p6()
ok, failing = star_ewald(p6)
v = p6.face_vertices(failing)[0]
print(f"star Ewald fails at vertex {v}; probing scaled copies t*v:")
for num, den in [(1, 2), (3, 4), (7, 8)]:
    pt = tuple(Fraction(num * x, den) for x in v)
    for bound in (1, 2):
        got = displaceable_by_probe(p6, pt, bound)
        status = f"probe via facet {got.facet}" if got else f"not found (bound {bound})"
        print(f"  t={num}/{den}, bound {bound}: {status}")
print("(a bounded search can only report 'not found', never 'not displaceable')")
