"""Probe displaceability: integrally transverse directions, probe
construction from a facet, and the sampled star-Ewald cross-check.

A probe enters through the relative interior of a facet along an integer
direction integrally transverse to it; a point on the probe is displaced by
it when it sits strictly in the first half of the segment.  The direction
search is bounded (--bound); "not found" at a finite bound is never "not
displaceable".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .ewald import star_ewald
from .classify import is_monotone
from .polytope import HPolytope, dot

__all__ = [
    "Probe",
    "is_integrally_transverse",
    "displaceable_by_probe",
    "ProbeReport",
    "star_probe_crosscheck",
    "interior_sample_grid",
]

DEFAULT_BOUND = 3


@dataclass(frozen=True)
class Probe:
    facet: int
    direction: tuple
    start: tuple  # w, in the relative interior of the facet
    end: tuple  # exit point of the open segment


def is_integrally_transverse(lam, u_f) -> bool:
    """λ extends to a unimodular basis by vectors parallel to the facet iff
    u_F·λ = ±1 for the primitive facet normal u_F."""
    lam = tuple(int(x) for x in lam)
    if not any(lam):
        raise ValueError("zero direction")
    return dot(u_f, lam) in (1, -1)


def _directions(n, bound):
    for lam in sorted(
        product(range(-bound, bound + 1), repeat=n),
        key=lambda t: (max(abs(x) for x in t), t),
    ):
        if any(lam):
            yield lam


def displaceable_by_probe(p: HPolytope, u, bound: int = DEFAULT_BOUND):
    """First probe (facets by index, directions by max-norm then lex)
    displacing the interior point u, or None within the direction bound.

    For facet F with normal u_F, an inward direction λ (u_F·λ = −1) meets
    aff(F) at w = u − t·λ with t = u_F·u − b_F < 0; the probe accepts when
    w ∈ relint(F) and the reflected point 2u − w stays strictly interior.
    """
    u = tuple(Fraction(x) for x in u)
    if not p.contains(u, strict=True):
        raise ValueError("probe base point must be strictly interior")
    dirs = list(_directions(p.dim, bound))
    for fi, (nf, cf) in enumerate(zip(p.normals, p.offsets)):
        for lam in dirs:
            if dot(nf, lam) != -1:
                continue
            t = dot(nf, u) - cf  # negative since u is interior
            w = tuple(x + t * l for x, l in zip(u, lam))
            # w on the facet hyperplane by construction; need relint(F)
            if not all(
                dot(nj, w) < cj
                for j, (nj, cj) in enumerate(zip(p.normals, p.offsets))
                if j != fi
            ):
                continue
            mirror = tuple(2 * a - b for a, b in zip(u, w))
            if p.contains(mirror, strict=True):
                exit_t = min(
                    Fraction(cj - dot(nj, w)) / dot(nj, lam)
                    for nj, cj in zip(p.normals, p.offsets)
                    if dot(nj, lam) > 0
                )
                end = tuple(a + exit_t * l for a, l in zip(w, lam))
                return Probe(fi, lam, w, end)
    return None


def interior_sample_grid(p: HPolytope, samples: int):
    """Deterministic rational grid: points q/samples strictly inside P,
    the origin excluded."""
    if samples < 1:
        raise ValueError("samples must be positive")
    lo, hi = p.bounding_box()
    ranges = []
    for a, b in zip(lo, hi):
        lo_i = int(a * samples) - 1
        hi_i = int(b * samples) + 1
        ranges.append(range(lo_i, hi_i + 1))
    out = []
    for q in product(*ranges):
        if not any(q):
            continue
        pt = tuple(Fraction(x, samples) for x in q)
        if p.contains(pt, strict=True):
            out.append(pt)
    return tuple(out)


@dataclass(frozen=True)
class ProbeReport:
    star_ewald: bool
    samples: int
    bound: int
    total: int
    displaceable: int
    undisplaceable_points: tuple

    @property
    def all_displaceable(self):
        return not self.undisplaceable_points


def star_probe_crosscheck(p: HPolytope, samples: int, bound: int) -> ProbeReport:
    """Sampled check of one direction of the star-Ewald/probe equivalence.

    When P is star Ewald, every sampled nonzero interior point must be
    displaceable by a probe; when it is not, undisplaceable samples are
    corroborating evidence only (the grid cannot certify the converse).
    """
    if not is_monotone(p):
        raise ValueError("cross-check is defined for monotone polytopes")
    star, _ = star_ewald(p)
    grid = interior_sample_grid(p, samples)
    bad = []
    good = 0
    for pt in grid:
        if displaceable_by_probe(p, pt, bound) is not None:
            good += 1
        else:
            bad.append(pt)
    return ProbeReport(
        star_ewald=star,
        samples=samples,
        bound=bound,
        total=len(grid),
        displaceable=good,
        undisplaceable_points=tuple(bad),
    )
