"""Polytope class predicates: simple, smooth, reflexive, monotone, UT-free,
deeply smooth/monotone, quasi-smooth polygons.

Every negative answer carries a witness (offending vertex, face, or corner
point) so callers can explain failures.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .intlinalg import det, primitive_part
from .polytope import (
    FaceRef,
    HPolytope,
    Slice,
    affine_rank,
    dot,
    face_slice,
    normally_isomorphic,
)
from .polytope import _integerize, _point

__all__ = [
    "ClassReport",
    "classify",
    "is_smooth",
    "is_reflexive",
    "is_monotone",
    "is_ut_free",
    "is_deeply_smooth",
    "deeply_smooth_characterizations_agree",
    "is_quasi_smooth_polygon",
    "vertex_edge_directions",
]


def _cached(p: HPolytope, key, fn):
    if key not in p._cache:
        p._cache[key] = fn()
    return p._cache[key]


def vertex_edge_directions(p: HPolytope, vi: int) -> tuple:
    """Primitive edge directions at vertex vi of a simple polytope, sorted."""
    verts = p.vertices()
    dirs = []
    for wj in p.adjacent_vertex_indices(vi):
        diff = [a - b for a, b in zip(verts[wj], verts[vi])]
        dirs.append(_integerize(diff))
    return tuple(sorted(dirs))


def is_smooth(p: HPolytope):
    """(flag, witness): at every vertex the primitive edge directions must
    form a lattice basis; the witness is the first offending vertex."""

    def compute():
        if p.dim == 0:
            return True, None
        verts = p.vertices()
        if not p.is_simple():
            bad = next(
                v
                for v, t in zip(verts, p.vertex_tight_sets())
                if len(t) != p.dim
            )
            return False, bad
        for i, v in enumerate(verts):
            dirs = vertex_edge_directions(p, i)
            if len(dirs) != p.dim or abs(det(dirs)) != 1:
                return False, v
        return True, None

    return _cached(p, "smooth", compute)


def is_reflexive(p: HPolytope) -> bool:
    """Lattice polytope, origin interior, every facet inequality u·x <= 1."""

    def compute():
        return (
            p.dim > 0
            and p.origin_interior()
            and all(c == 1 for c in p.offsets)
            and p.is_lattice()
        )

    return _cached(p, "reflexive", compute)


def is_monotone(p: HPolytope) -> bool:
    return is_smooth(p)[0] and is_reflexive(p)


def _two_faces(p: HPolytope):
    # 2-faces as FaceRef-like tight tuples; meet-closure fallback covers the
    # non-simple polytopes that show up in displacement slices.
    if p.is_simple():
        return tuple(f.tight for f in p.faces(p.dim - 2))
    tights = [frozenset(t) for t in p.vertex_tight_sets()]
    closed = set(tights)
    frontier = set(tights)
    while frontier:
        new = set()
        for a in frontier:
            for b in tights:
                c = a & b
                if c not in closed:
                    new.add(c)
        closed |= new
        frontier = new
    out = []
    for s in closed:
        vs = [v for v, t in zip(p.vertices(), p.vertex_tight_sets()) if s <= t]
        if vs and affine_rank(vs) == 2:
            full = frozenset.intersection(*[t for t in p.vertex_tight_sets() if s <= t])
            out.append(tuple(sorted(full)))
    return tuple(sorted(set(out)))


def _face_lattice_point_count(p: HPolytope, tight) -> int:
    s = face_slice(p, tight, inset=0)
    if not all(isinstance(x, int) for x in s.origin):
        return 0  # the affine span of the face misses the lattice entirely
    if s.polytope is None:
        if s.chart_dim == 0:
            return 1 if not s.is_empty else 0
        raise ValueError("face slice degenerated unexpectedly")
    return len(s.polytope.lattice_points())


def _is_unimodular_triangle_face(p: HPolytope, tight) -> bool:
    need = set(tight)
    vs = [v for v, t in zip(p.vertices(), p.vertex_tight_sets()) if need <= t]
    if len(vs) != 3:
        return False
    if not all(all(isinstance(x, int) for x in v) for v in vs):
        return False
    return _face_lattice_point_count(p, tight) == 3


def is_ut_free(p: HPolytope):
    """(flag, witness 2-face): a 2-face is a unimodular triangle iff it has
    exactly 3 vertices and exactly 3 lattice points."""
    if not p.is_simple():
        raise ValueError("UT-freeness requires a simple polytope")

    def compute():
        if p.dim < 2:
            return True, None
        for tight in _two_faces(p):
            if _is_unimodular_triangle_face(p, tight):
                return False, FaceRef(tight, p.dim - 2)
        return True, None

    return _cached(p, "ut_free", compute)


def _ut_free_region(p: HPolytope) -> bool:
    # UT-freeness for arbitrary (possibly non-simple, non-lattice) regions.
    if p.dim < 2:
        return True
    return not any(_is_unimodular_triangle_face(p, t) for t in _two_faces(p))


def is_deeply_smooth(p: HPolytope):
    """(flag, witness corner): P must contain every vertex's corner
    parallelepiped; the witness is the first missing corner point."""
    smooth, w = is_smooth(p)
    if not smooth or not p.is_lattice():
        raise ValueError("deep smoothness is defined for lattice smooth polytopes")

    def compute():
        verts = p.vertices()
        for i, v in enumerate(verts):
            dirs = vertex_edge_directions(p, i)
            for r in range(2, len(dirs) + 1):
                for subset in combinations(dirs, r):
                    corner = tuple(
                        x + sum(d[j] for d in subset) for j, x in enumerate(v)
                    )
                    if not p.contains(corner):
                        return False, corner
        return True, None

    return _cached(p, "deeply_smooth", compute)


def _slice_ut_free(s: Slice) -> bool:
    if s.is_empty or len(s.chart_vertices) < 3:
        return True
    if s.polytope is not None:
        return _ut_free_region(s.polytope)
    # degenerate slice: test inside the affine span of its own vertex set
    if s.points_affine_rank < 2:
        return True
    from .polytope import convex_hull

    # re-chart onto the span; only the 2-dimensional case can carry a triangle
    if s.points_affine_rank == 2:
        sub = convex_hull(_project_to_span(s.chart_vertices), 2)
        return _ut_free_region(sub)
    return True  # rank >= 3 degenerate slices do not occur for our inputs


def _project_to_span(pts):
    # exact coordinates of pts within the saturated lattice of their affine span
    from .intlinalg import kernel_basis, solve_rational

    p0 = pts[0]
    diffs = [_integerize([a - b for a, b in zip(p, p0)]) for p in pts[1:] if p != p0]
    ann = kernel_basis(diffs)
    if ann:
        basis = kernel_basis(ann)
    else:
        basis = tuple(
            tuple(1 if i == j else 0 for j in range(len(p0))) for i in range(len(p0))
        )
    gram = [[dot(a, b) for b in basis] for a in basis]
    out = []
    for p in pts:
        rhs = [dot(b, [x - y for x, y in zip(p, p0)]) for b in basis]
        out.append(_point(solve_rational(gram, rhs)))
    return out


def deeply_smooth_characterizations_agree(p: HPolytope):
    """Evaluate the three equivalent descriptions of deep smoothness
    independently: corner parallelepipeds; face displacements keeping the
    face's normal fan; UT-freeness of P and of all face displacements."""
    smooth, _ = is_smooth(p)
    if not smooth or not p.is_lattice():
        raise ValueError("requires a lattice smooth polytope")
    c1 = is_deeply_smooth(p)[0]

    c2 = True
    for codim in range(1, p.dim + 1):
        for f in p.faces(codim):
            sf = face_slice(p, f, inset=0)
            sd = face_slice(p, f, inset=1)
            if sd.is_empty or sd.polytope is None:
                c2 = False
                break
            if sf.chart_dim > 0 and not normally_isomorphic(sf.polytope, sd.polytope):
                c2 = False
                break
        if not c2:
            break

    c3 = is_ut_free(p)[0]
    if c3:
        for codim in range(1, p.dim + 1):
            for f in p.faces(codim):
                if not _slice_ut_free(face_slice(p, f, inset=1)):
                    c3 = False
                    break
            if not c3:
                break
    return c1, c2, c3


def is_quasi_smooth_polygon(p: HPolytope) -> bool:
    """Each vertex must be at lattice distance one from the line through its
    neighbouring boundary lattice points."""
    if p.dim != 2:
        raise ValueError("quasi-smoothness is defined for polygons")
    if not p.is_lattice():
        raise ValueError("quasi-smoothness needs a lattice polygon")
    verts = p.vertices()
    for i, v in enumerate(verts):
        nbrs = []
        for j in p.adjacent_vertex_indices(i):
            d = _integerize([a - b for a, b in zip(verts[j], v)])
            nbrs.append(tuple(a + b for a, b in zip(v, d)))
        if len(nbrs) != 2:
            return False
        direction = [a - b for a, b in zip(nbrs[0], nbrs[1])]
        e = _integerize(direction)
        u = (-e[1], e[0])
        if abs(dot(u, v) - dot(u, nbrs[0])) != 1:
            return False
    return True


@dataclass
class ClassReport:
    """Flags for one polytope; UT/deep flags are None when undefined
    (non-simple, non-lattice, or non-smooth inputs)."""

    simple: bool
    lattice: bool
    smooth: bool
    reflexive: bool
    monotone: bool
    ut_free: bool | None
    deeply_smooth: bool | None
    deeply_monotone: bool | None
    witnesses: dict = field(default_factory=dict)

    def as_dict(self):
        return {
            "simple": self.simple,
            "lattice": self.lattice,
            "smooth": self.smooth,
            "reflexive": self.reflexive,
            "monotone": self.monotone,
            "ut_free": self.ut_free,
            "deeply_smooth": self.deeply_smooth,
            "deeply_monotone": self.deeply_monotone,
            "witnesses": {k: list(v) if isinstance(v, tuple) else v for k, v in self.witnesses.items()},
        }


def classify(p: HPolytope) -> ClassReport:
    witnesses = {}
    simple = p.is_simple()
    lattice = p.is_lattice()
    smooth, w = is_smooth(p)
    if w is not None:
        witnesses["smooth"] = w
    reflexive = is_reflexive(p)
    monotone = smooth and reflexive
    ut_free = deeply_smooth = deeply_monotone = None
    if simple and lattice:
        ut_free, wf = is_ut_free(p)
        if wf is not None:
            witnesses["ut_free"] = wf.tight
    if smooth and lattice:
        deeply_smooth, wc = is_deeply_smooth(p)
        if wc is not None:
            witnesses["deeply_smooth"] = wc
        deeply_monotone = deeply_smooth and monotone
    return ClassReport(
        simple=simple,
        lattice=lattice,
        smooth=smooth,
        reflexive=reflexive,
        monotone=monotone,
        ut_free=ut_free,
        deeply_smooth=deeply_smooth,
        deeply_monotone=deeply_monotone,
        witnesses=witnesses,
    )
