"""Closed-form Ewald counting: trinomial coefficients, the simplex and SSB
counts, the minimum-Ewald upper bounds, facet splits of E(P), and the small
fiber bundle recursions.

The formulas here are deliberately independent of the enumeration path in
ewald.py so that each side can serve as the other's oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classify import is_monotone
from .ewald import ewald_set
from .polytope import HPolytope, dot, face_slice

__all__ = [
    "trinomial",
    "ewald_count_simplex",
    "ewald_count_ssb",
    "emin_upper_bound",
    "FacetEwaldSplit",
    "facet_ewald_split",
    "small_bundle_split_recursion_check",
    "ssb_patterns_check",
    "volume",
    "normalized_volume",
]

_TRINOMIAL_ROWS = [(1,)]  # row n lists T(n,0..2n), coefficients of (1+x+x^2)^n


def trinomial(n: int, k: int) -> int:
    """Coefficient of x^k in (1+x+x^2)^n; 0 outside [0, 2n]."""
    if n < 0:
        raise ValueError("trinomial needs n >= 0")
    while len(_TRINOMIAL_ROWS) <= n:
        prev = _TRINOMIAL_ROWS[-1]
        m = len(_TRINOMIAL_ROWS) - 1
        row = []
        for j in range(2 * (m + 1) + 1):
            val = 0
            for d in (0, 1, 2):
                if 0 <= j - d <= 2 * m:
                    val += prev[j - d]
            row.append(val)
        _TRINOMIAL_ROWS.append(tuple(row))
    if k < 0 or k > 2 * n:
        return 0
    return _TRINOMIAL_ROWS[n][k]


def ewald_count_simplex(n: int) -> int:
    """|E(Δ_n)| = [x^(n+1)] (1+x+x^2)^(n+1)."""
    if n < 1:
        raise ValueError("needs n >= 1")
    return trinomial(n + 1, n + 1)


def ewald_count_ssb(n: int, k: int) -> int:
    """|E(SSB(n,k))| = [x^n](1+x+x^2)^n + 2 [x^(n-k)](1+x+x^2)^n."""
    if n < 2 or not 0 <= k <= n - 1:
        raise ValueError("needs n >= 2 and 0 <= k <= n-1")
    return trinomial(n, n) + 2 * trinomial(n, n - k)


def emin_upper_bound(n: int) -> int:
    """Upper bound for the minimum Ewald count among monotone n-polytopes,
    attained by iterated small fiber bundles; n = 2 is excluded."""
    if n < 3:
        raise ValueError("bound defined for n >= 3 (n = 2 excluded case)")
    k, r = divmod(n - 1, 3)
    if r == 0:  # n = 3k+1
        return 3 * 9**k
    if r == 1:  # n = 3k+2, k >= 1 here since n >= 5
        return 59 * 9 ** (k - 1)
    return 13 * 9**k  # n = 3k+3


@dataclass(frozen=True)
class FacetEwaldSplit:
    """Counts of E(P) on u_F·x = 1, 0, −1; e_plus == e_minus always, and the
    three strata exhaust E(P) for monotone P."""

    e_plus: int
    e_zero: int
    e_minus: int

    @property
    def total(self):
        return self.e_plus + self.e_zero + self.e_minus


def facet_ewald_split(p: HPolytope, facet: int) -> FacetEwaldSplit:
    if not is_monotone(p):
        raise ValueError("facet splits are defined for monotone polytopes")
    if not 0 <= facet < p.nfacets:
        raise ValueError("invalid facet index")
    u = p.normals[facet]
    e = ewald_set(p)
    plus = zero = minus = 0
    for x in e.points:
        v = dot(u, x)
        if v == 1:
            plus += 1
        elif v == 0:
            zero += 1
        elif v == -1:
            minus += 1
        else:
            raise AssertionError("Ewald point outside the unit slab of a facet")
    return FacetEwaldSplit(plus, zero, minus)


def small_bundle_split_recursion_check(base: HPolytope, facet: int, n: int) -> bool:
    """Measure the Ewald split at the twisted facet F' of the small fiber
    bundle directly and compare with the recursion

        |E+(P,F')| = n·|E+(B,F)| + |E+(Δ_n)|·|E0(B,F)|
        |E0(P,F')| = 2·|E+(B,F)| + |E0(Δ_n)|·|E0(B,F)|
    """
    from .bundles import small_fiber_bundle

    bundle = small_fiber_bundle(base, facet, n)
    split_b = facet_ewald_split(base, facet)
    e_plus_simplex = (ewald_count_simplex(n) - _count_simplex(n - 1)) // 2
    e_zero_simplex = _count_simplex(n - 1)
    predicted_plus = n * split_b.e_plus + e_plus_simplex * split_b.e_zero
    predicted_zero = 2 * split_b.e_plus + e_zero_simplex * split_b.e_zero
    measured = facet_ewald_split(bundle, bundle.nfacets - 1)
    return (measured.e_plus, measured.e_zero) == (predicted_plus, predicted_zero)


def _count_simplex(n: int) -> int:
    return 1 if n == 0 else ewald_count_simplex(n)


def volume(p: HPolytope) -> Fraction:
    """Exact Euclidean volume via the pyramid fan over the lex-smallest
    vertex; facet volumes are taken in their own lattice, which matches the
    lattice-distance pyramid formula coordinate-free."""
    if p.dim == 0:
        return Fraction(0)
    if p.dim == 1:
        (lo,), (hi,) = p.bounding_box()
        return Fraction(hi - lo)
    apex = p.vertices()[0]
    total = Fraction(0)
    for i, (u, c) in enumerate(zip(p.normals, p.offsets)):
        dist = c - dot(u, apex)
        if dist == 0:
            continue
        s = face_slice(p, (i,), inset=0)
        total += Fraction(dist, p.dim) * volume(s.polytope)
    return total


def normalized_volume(p: HPolytope) -> int:
    """Lattice-normalized volume n! · vol(P); an integer for lattice P."""
    v = volume(p)
    f = 1
    for i in range(2, p.dim + 1):
        f *= i
    out = v * f
    return int(out) if out.denominator == 1 else out


def ssb_patterns_check(n: int, k: int) -> bool:
    """Check the SSB count and volume patterns decidable at (n, k):
    the three closed-form identities at k ∈ {0, 1, n−1}, monotone decrease
    of the count in k, volume increase in k, and the count ratio bounds
    1 < |E(SSB(n,k))| / |E(Δ_{n-1})| <= 3."""
    from .bundles import ssb

    if n < 2 or not 0 <= k <= n - 1:
        raise ValueError("needs n >= 2 and 0 <= k <= n-1")
    count = ewald_count_ssb(n, k)
    ok = True
    if k == 0:
        ok &= count == 3 * _count_simplex(n - 1)
    if k == 1:
        ok &= count == ewald_count_simplex(n)
    if k == n - 1:
        ok &= count == _count_simplex(n - 1) + 2 * n
    if k >= 1:
        ok &= count < ewald_count_ssb(n, k - 1)
        # strict for n >= 3; constant in k when n = 2 (both slopes cancel)
        if n == 2:
            ok &= volume(ssb(n, k)) >= volume(ssb(n, k - 1))
        else:
            ok &= volume(ssb(n, k)) > volume(ssb(n, k - 1))
    ratio = Fraction(count, _count_simplex(n - 1))
    ok &= 1 < ratio <= 3
    return bool(ok)
