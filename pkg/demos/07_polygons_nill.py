#!/usr/bin/env python3
"""Dimension two: quasi-smooth polygons, the T_a triangles, and lattice
bases inside Ewald sets."""

import random

from ewaldkit import (
    convex_hull,
    det,
    ewald_set,
    is_quasi_smooth_polygon,
    monotone_polygon,
    nill2d_basis,
    nill_triangle,
    weak_ewald,
)

print("=== the T_a family: interior origin but E = {0} ===")
for a in (1, 2, 3, 4, 5):
    t = nill_triangle(a)
    print(f"  T_{a}: rows {list(zip(t.normals, t.offsets))}")
    print(f"       E = {sorted(ewald_set(t).points)}, "
          f"quasi-smooth = {is_quasi_smooth_polygon(t)}")

print()
print("=== quasi-smooth polygons always carry an Ewald basis ===")
for name in ("triangle", "trapezoid", "square", "pentagon", "hexagon"):
    p = monotone_polygon(name)
    basis = nill2d_basis(p)
    print(f"  {name:10s}: basis {basis}, det {det(basis)}")

print()
print("=== random lattice polygons with the origin inside ===")
rng = random.Random(7)
shown = 0
attempts = 0
while shown < 6 and attempts < 2000:
    attempts += 1
    pts = {(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(rng.randint(3, 7))}
    try:
        p = convex_hull(pts, 2)
    except ValueError:
        continue
    if not p.origin_interior():
        continue
    qs = is_quasi_smooth_polygon(p)
    e = ewald_set(p)
    basis = nill2d_basis(p)
    print(f"  vertices {sorted(p.vertices())}")
    print(f"    quasi-smooth={qs} |E|={len(e)} "
          f"weak={weak_ewald(p)[0]} basis={basis}")
    if qs:
        assert basis is not None  # the dimension-2 theorem, in action
    if e.points == {(0, 0)}:
        assert not qs  # E = {0} happens only for non-quasi-smooth polygons
    shown += 1
