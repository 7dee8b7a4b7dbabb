import random
from itertools import combinations, permutations

import pytest

from ewaldkit.intlinalg import (
    det,
    find_unimodular_basis,
    hermite_normal_form,
    inverse_unimodular,
    is_saturated,
    kernel_basis,
    mat_mul,
    mat_vec,
    primitive_part,
    rank,
    smith_diagonal,
    solve_integer,
    solve_rational,
)


def brute_det(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = 1
        for i in range(n):
            prod *= m[i][perm[i]]
        total += sign * prod
    return total


def test_primitive_part_examples():
    assert primitive_part((2, 4, -6)) == (1, 2, -3)
    assert primitive_part((1, 0)) == (1, 0)
    assert primitive_part((0, -5)) == (0, -1)
    with pytest.raises(ValueError):
        primitive_part((0, 0, 0))


def test_primitive_part_idempotent():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(1, 5)
        v = tuple(rng.randint(-20, 20) for _ in range(n))
        if not any(v):
            continue
        p = primitive_part(v)
        assert primitive_part(p) == p


def test_det_examples():
    assert det(((1, 0, 0), (0, 1, 0), (0, 0, 1))) == 1
    assert det(((1, 1), (0, 1))) == 1
    assert det(((2, 0), (0, 3))) == 6
    with pytest.raises(ValueError):
        det(((1, 2, 3), (4, 5, 6)))


def test_det_against_permutation_expansion():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(1, 4)
        m = tuple(tuple(rng.randint(-6, 6) for _ in range(n)) for _ in range(n))
        assert det(m) == brute_det(m)


def test_hnf_identity_and_examples():
    i3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    h, u = hermite_normal_form(i3)
    assert h == i3 and u == i3
    h, u = hermite_normal_form(((2, 4), (1, 3)))
    assert abs(det(h)) == 2
    assert mat_mul(u, ((2, 4), (1, 3))) == h
    h, u = hermite_normal_form(((2, 4, 6),))
    assert h == ((2, 4, 6),)


def test_hnf_random_invariants():
    rng = random.Random(3)
    for _ in range(300):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        m = tuple(tuple(rng.randint(-9, 9) for _ in range(c)) for _ in range(r))
        h, u = hermite_normal_form(m)
        assert det(u) in (1, -1)
        assert mat_mul(u, m) == h
        leads = [next((j for j, x in enumerate(row) if x), None) for row in h]
        nz = [l for l in leads if l is not None]
        assert nz == sorted(nz) and len(set(nz)) == len(nz)
        assert all(l is None for l in leads[len(nz):])
        for i, l in enumerate(nz):
            assert h[i][l] > 0
            for i2 in range(i):
                assert 0 <= h[i2][l] < h[i][l]


def test_smith_and_saturation():
    assert smith_diagonal(((2, 0), (0, 2))) == (2, 2)
    assert smith_diagonal(((2, 4, 4),)) == (2,)
    assert is_saturated(((1, 2, 3),))
    assert not is_saturated(((2, 4, 6),))
    assert not is_saturated(((1, 0), (1, 0)))
    assert is_saturated(())


def test_kernel_and_solve():
    rng = random.Random(4)
    for _ in range(200):
        r, c = rng.randint(1, 3), rng.randint(1, 4)
        m = tuple(tuple(rng.randint(-5, 5) for _ in range(c)) for _ in range(r))
        kb = kernel_basis(m)
        assert len(kb) == c - rank(m)
        for v in kb:
            assert all(x == 0 for x in mat_vec(m, v))
        if kb:
            assert is_saturated(kb)
        x0 = tuple(rng.randint(-3, 3) for _ in range(c))
        b = mat_vec(m, x0)
        x = solve_integer(m, b)
        assert x is not None and mat_vec(m, x) == b
    assert solve_integer(((2, 0), (0, 2)), (1, 0)) is None


def test_solve_rational_and_inverse():
    rng = random.Random(5)
    for _ in range(150):
        n = rng.randint(1, 4)
        m = tuple(tuple(rng.randint(-5, 5) for _ in range(n)) for _ in range(n))
        b = tuple(rng.randint(-5, 5) for _ in range(n))
        x = solve_rational(m, b)
        if det(m) == 0:
            assert x is None
        else:
            assert all(
                sum(a * xx for a, xx in zip(row, x)) == bb for row, bb in zip(m, b)
            )
    u = ((1, 2), (1, 3))
    assert mat_mul(u, inverse_unimodular(u)) == ((1, 0), (0, 1))
    with pytest.raises(ValueError):
        inverse_unimodular(((2, 0), (0, 1)))


def test_basis_search_examples():
    assert find_unimodular_basis([(1, 0), (0, 1), (-1, 0), (0, -1)], 2) is not None
    assert find_unimodular_basis([(2, 0), (0, 2), (2, 2)], 2) is None
    with pytest.raises(ValueError):
        find_unimodular_basis([(1,)], 0)


def test_basis_search_against_exhaustive_oracle():
    # spec invariant: agree with brute force for |S| <= 12, n <= 3
    rng = random.Random(6)
    for _ in range(250):
        n = rng.randint(1, 3)
        pts = {
            tuple(rng.randint(-2, 2) for _ in range(n))
            for _ in range(rng.randint(1, 12))
        }
        got = find_unimodular_basis(pts, n)
        nonzero = [p for p in pts if any(p)]
        brute = any(
            abs(det(s)) == 1 for s in combinations(nonzero, n)
        )
        assert (got is not None) == brute
        if got is not None:
            assert abs(det(got)) == 1
            assert set(got) <= set(pts)


def test_basis_search_deterministic_order():
    pts = [(0, 1), (1, 0), (0, -1), (-1, 0), (1, 1)]
    assert find_unimodular_basis(pts, 2) == find_unimodular_basis(reversed(pts), 2)
