"""Ewald sets and the weak / strong / star Ewald and FS conditions.

The Ewald set of P is E(P) = Z^n ∩ P ∩ −P, kept negation-closed and
including 0 whenever 0 ∈ P.  (Some authors drop the origin; we do not.)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import ceil, floor

from .classify import is_monotone, is_smooth
from .intlinalg import det, find_unimodular_basis, inverse_unimodular, mat_vec
from .polytope import FaceRef, HPolytope, dot

__all__ = [
    "EwaldSet",
    "ewald_set",
    "cube_normalization",
    "weak_ewald",
    "strong_ewald",
    "StrongEwaldResult",
    "StarSets",
    "star_sets",
    "star_ewald_face",
    "star_ewald",
    "fs_property",
    "nill2d_basis",
    "verify_origin_next_to",
    "deeply_smooth_origin_vertex_basis",
    "dim3_origin_edge_basis",
]


@dataclass(frozen=True)
class EwaldSet:
    dim: int
    points: frozenset

    def __len__(self):
        return len(self.points)

    def __contains__(self, x):
        return tuple(x) in self.points

    def ordered(self) -> tuple:
        """Deterministic scan order: max-norm ascending, then lexicographic."""
        return tuple(
            sorted(self.points, key=lambda p: (max((abs(x) for x in p), default=0), p))
        )


def cube_normalization(p: HPolytope):
    """Unimodular M sending the lex-smallest vertex cone to the standard
    corner at (−1,…,−1); valid when that vertex is smooth with offsets 1."""
    v = p.vertices()[0]
    tight = sorted(p.vertex_tight_sets()[0])
    if len(tight) != p.dim:
        raise ValueError("vertex is not simple")
    if any(p.offsets[i] != 1 for i in tight):
        raise ValueError("vertex facets are not at offset 1")
    rows = tuple(tuple(-x for x in p.normals[i]) for i in tight)
    if abs(det(rows)) != 1:
        raise ValueError("vertex cone is not unimodular")
    return rows


def ewald_set(p: HPolytope) -> EwaldSet:
    """Symmetric lattice points of P, computed exactly.

    For reflexive-at-a-vertex inputs (all monotone polytopes) the scan is
    restricted to the 3^n candidates of the normalized unit cube; otherwise
    the exact bounding box of P ∩ −P is scanned.
    """
    if "ewald" in p._cache:
        return p._cache["ewald"]
    n = p.dim
    pts = set()
    try:
        m = cube_normalization(p)
        minv = inverse_unimodular(m)
    except ValueError:
        minv = None
    if minv is not None:
        for cand in product((-1, 0, 1), repeat=n):
            y = mat_vec(minv, cand)
            if p.contains(y) and p.contains(tuple(-c for c in y)):
                pts.add(y)
    else:
        lo, hi = p.bounding_box()
        ranges = [
            range(ceil(max(a, -b)), floor(min(b, -a)) + 1) for a, b in zip(lo, hi)
        ]
        for cand in product(*ranges):
            if p.contains(cand) and p.contains(tuple(-c for c in cand)):
                pts.add(cand)
    out = EwaldSet(n, frozenset(pts))
    p._cache["ewald"] = out
    return out


def _require_origin_interior(p: HPolytope):
    if not p.origin_interior():
        raise ValueError("origin is not interior")


def weak_ewald(p: HPolytope):
    """(flag, basis): does E(P) contain a unimodular basis of Z^n?"""
    _require_origin_interior(p)
    basis = find_unimodular_basis(ewald_set(p).points, p.dim)
    return basis is not None, basis


@dataclass(frozen=True)
class StrongEwaldResult:
    ok: bool
    bases: tuple  # per facet: basis tuple or None
    failing_facet: int | None


def strong_ewald(p: HPolytope) -> StrongEwaldResult:
    """Search a unimodular basis inside E(P) ∩ F for every facet F."""
    _require_origin_interior(p)
    e = ewald_set(p)
    bases = []
    for i, (u, c) in enumerate(zip(p.normals, p.offsets)):
        on_facet = [x for x in e.points if dot(u, x) == c]
        basis = find_unimodular_basis(on_facet, p.dim)
        bases.append(basis)
        if basis is None:
            return StrongEwaldResult(False, tuple(bases), i)
    return StrongEwaldResult(True, tuple(bases), None)


@dataclass(frozen=True)
class StarSets:
    """Star(f) = union of facets containing f; star(f) = union of ridges
    containing f; Star*(f) = Star(f) \\ star(f)."""

    face: FaceRef
    star_facets: tuple
    ridges: tuple  # FaceRefs of codim 2 containing the face
    parent: HPolytope

    def _tight_count(self, x) -> int:
        p = self.parent
        return sum(
            1 for i in self.star_facets if dot(p.normals[i], x) == p.offsets[i]
        )

    def in_star(self, x) -> bool:
        return self.parent.contains(x) and self._tight_count(x) >= 1

    def in_star_lower(self, x) -> bool:
        return self.parent.contains(x) and self._tight_count(x) >= 2

    def in_star_star(self, x) -> bool:
        return self.parent.contains(x) and self._tight_count(x) == 1


def star_sets(p: HPolytope, f: FaceRef) -> StarSets:
    if any(i < 0 or i >= p.nfacets for i in f.tight) or not p.face_vertices(f):
        raise ValueError("invalid face")
    ridges = tuple(
        FaceRef(pair, 2) for pair in _pairs(f.tight)
    )
    return StarSets(f, tuple(f.tight), ridges, p)


def _pairs(idx):
    idx = sorted(idx)
    return [
        (idx[a], idx[b]) for a in range(len(idx)) for b in range(a + 1, len(idx))
    ]


def star_ewald_face(p: HPolytope, f: FaceRef):
    """(flag, λ): does some λ ∈ E(P) lie in Star*(f) with −λ ∉ Star(f)?"""
    _require_origin_interior(p)
    e = ewald_set(p)
    rows = [(p.normals[i], p.offsets[i]) for i in f.tight]
    for lam in e.ordered():
        cnt = sum(1 for u, c in rows if dot(u, lam) == c)
        if cnt != 1:
            continue
        neg = tuple(-x for x in lam)
        if all(dot(u, neg) != c for u, c in rows):
            return True, lam
    return False, None


def star_ewald(p: HPolytope):
    """(flag, failing_face): the star condition over every proper face,
    scanned by increasing codimension, witness-first."""
    _require_origin_interior(p)
    for codim in range(1, p.dim + 1):
        for f in p.faces(codim):
            ok, _ = star_ewald_face(p, f)
            if not ok:
                return False, f
    return True, None


def fs_property(p: HPolytope) -> bool:
    """Every facet meets E(P).  Defined for monotone polytopes."""
    if not is_monotone(p):
        raise ValueError("FS property is defined for monotone polytopes")
    e = ewald_set(p)
    return all(
        any(dot(u, x) == c for x in e.points)
        for u, c in zip(p.normals, p.offsets)
    )


def nill2d_basis(p: HPolytope):
    """Lattice basis inside E(P) for a lattice polygon with interior origin.

    Normalizes a shortest nonzero Ewald point to (1,0) by a unimodular map,
    then looks for a point (a,1); returns the basis in original coordinates,
    or None when E(P) = {0} (or no such point exists).
    """
    if p.dim != 2:
        raise ValueError("nill2d_basis expects a polygon")
    if not p.is_lattice():
        raise ValueError("nill2d_basis expects a lattice polygon")
    _require_origin_interior(p)
    e = ewald_set(p)
    nonzero = [x for x in e.ordered() if any(x)]
    if not nonzero:
        return None
    q = nonzero[0]
    g, a, b = _xgcd(q[0], q[1])
    assert g == 1, "shortest nonzero Ewald point must be primitive"
    m = ((a, b), (-q[1], q[0]))  # m @ q == (1, 0), det m == 1
    minv = inverse_unimodular(m)
    for x in sorted(
        (mat_vec(m, x) for x in e.points),
        key=lambda t: (max(abs(v) for v in t), t),
    ):
        if x[1] == 1:
            return q, mat_vec(minv, x)
    return None


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        qq, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - qq * x1
        y0, y1 = y1, y0 - qq * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def verify_origin_next_to(p: HPolytope, f: FaceRef) -> bool:
    """True iff the origin lies in the first displacement of f, i.e. every
    facet through f is at lattice distance one from the origin."""
    _require_origin_interior(p)
    if any(i < 0 or i >= p.nfacets for i in f.tight) or not p.face_vertices(f):
        raise ValueError("invalid face")
    return all(p.offsets[i] == 1 for i in f.tight)


def deeply_smooth_origin_vertex_basis(p: HPolytope):
    """For deeply smooth P with the origin next to some vertex v, the
    primitive edge vectors at v form a lattice basis inside E(P)."""
    from .classify import is_deeply_smooth, vertex_edge_directions

    if not is_deeply_smooth(p)[0]:
        return None
    _require_origin_interior(p)
    e = ewald_set(p)
    for i in range(len(p.vertices())):
        f = FaceRef(tuple(sorted(p.vertex_tight_sets()[i])), p.dim)
        if not verify_origin_next_to(p, f):
            continue
        dirs = vertex_edge_directions(p, i)
        if all(d in e.points for d in dirs):
            return dirs
        raise AssertionError("edge vectors escaped E(P) with origin next to vertex")
    return None


def dim3_origin_edge_basis(p: HPolytope):
    """For a smooth 3-polytope with the origin next to some edge, E(P)
    contains a lattice basis; returns one, or None when no edge qualifies."""
    if p.dim != 3 or not is_smooth(p)[0]:
        raise ValueError("requires a smooth 3-polytope")
    _require_origin_interior(p)
    for f in p.faces(2):
        if verify_origin_next_to(p, f):
            basis = find_unimodular_basis(ewald_set(p).points, 3)
            if basis is None:
                raise AssertionError("origin next to an edge but no basis in E(P)")
            return basis
    return None
