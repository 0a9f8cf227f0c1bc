"""Exact linear algebra: rank, kernel, subspaces, polynomials, minimal polys."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uqcomod.cyclofield import field
from uqcomod.exactlinalg import (
    Matrix,
    Poly,
    Subspace,
    kernel,
    kernel_of_sparse_columns,
    minimal_polynomial_of_element,
    poly_gcd,
    rank,
    rref,
    solve,
    squarefree_check,
)

from conftest import random_scalar


def mat(fld, rows):
    return Matrix(fld, [[fld.from_rational(c) if not hasattr(c, "field")
                         else c for c in row] for row in rows])


def test_rank_oracles():
    f = field(3)
    q = f.q
    assert rank(mat(f, [[1, 0], [0, 1]])) == 2
    assert rank(mat(f, [[0, 0], [0, 0]])) == 0
    # [[1, q], [q^2, 1]] has determinant 1 - q^3 = 0
    m = Matrix(f, [[f.one, q], [q * q, f.one]])
    assert rank(m) == 1


def test_solve_and_kernel():
    f = field(1)
    m = mat(f, [[1, 2], [3, 4]])
    b = [f.from_rational(5), f.from_rational(11)]
    x = solve(m, b)
    assert x is not None
    got = [sum((m.entries[i][j] * x[j] for j in range(2)), f.zero)
           for i in range(2)]
    assert got == b
    # inconsistent system
    m2 = mat(f, [[1, 1], [1, 1]])
    assert solve(m2, [f.one, f.zero]) is None
    ker = kernel(m2)
    assert ker.dim == 1
    v = ker.basis[0]
    assert (v[0] + v[1]).is_zero()


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=5),
       st.integers(min_value=1, max_value=5),
       st.integers(min_value=0, max_value=2 ** 30))
def test_rank_nullity_property(nr, nc, seed):
    f = field(3)
    rng = random.Random(seed)
    m = Matrix(f, [[random_scalar(f, rng, span=2) for _ in range(nc)]
                   for _ in range(nr)])
    assert rank(m) + kernel(m).dim == nc


def test_subspace_canonical_and_contains():
    f = field(1)
    vecs = [[f.from_rational(c) for c in row]
            for row in ([1, 2, 3], [2, 4, 6], [0, 1, 1])]
    s = Subspace.from_vectors(f, 3, vecs)
    assert s.dim == 2
    # canonicalisation is idempotent
    s2 = Subspace.from_vectors(f, 3, [list(r) for r in s.basis])
    assert s == s2
    assert s.contains([f.from_rational(c) for c in (1, 3, 4)])
    assert not s.contains([f.from_rational(c) for c in (0, 0, 1)])
    assert s.contains_subspace(s2)


def test_kernel_of_sparse_columns_with_odd_labels():
    f = field(1)
    cols = [{("a", 0): f.one, ("b", 1): f.one},
            {("a", 0): f.from_rational(2), ("b", 1): f.from_rational(2)},
            {}]
    ker = kernel_of_sparse_columns(f, cols, 3)
    # column 2 is zero and col1 = 2 col0
    assert ker.dim == 2
    for v in ker.basis:
        assert (v[0] + f.from_rational(2) * v[1]).is_zero()


def test_poly_divmod_and_gcd():
    f = field(1)
    p = Poly.from_rationals(f, [-1, 0, 1])          # t^2 - 1
    d = Poly.from_rationals(f, [1, 1])              # t + 1
    quo, rem = p.divmod(d)
    assert rem.is_zero()
    assert quo == Poly.from_rationals(f, [-1, 1])
    g = poly_gcd(p, d)
    assert g == Poly.from_rationals(f, [1, 1])


def test_squarefree_check_oracles():
    f = field(1)
    # (t+1)^2 (t-2) = t^3 - 3t - 2
    p = Poly.from_rationals(f, [-2, -3, 0, 1])
    assert not squarefree_check(p)
    assert squarefree_check(Poly.from_rationals(f, [-1, 0, 0, 1]))
    with pytest.raises(ValueError):
        squarefree_check(Poly(f, []))


class _TruncatedPowerAlgebra:
    """k[w]/(w^n) presented through the duck interface used by the
    minimal-polynomial routine."""

    def __init__(self, fld, n):
        self.field = fld
        self.dim = n

    def unit_vec(self):
        return {0: self.field.one}

    def mul_vec(self, a, b):
        out = {}
        for i, c in a.items():
            for j, d in b.items():
                if i + j < self.dim:
                    k = i + j
                    out[k] = out.get(k, self.field.zero) + c * d
        return {k: v for k, v in out.items() if not v.is_zero()}


def test_minimal_polynomial_nilpotent_and_unit():
    f = field(3)
    alg = _TruncatedPowerAlgebra(f, 4)
    w = {1: f.one}
    p = minimal_polynomial_of_element(alg, w)
    assert p == Poly.from_rationals(f, [0, 0, 0, 0, 1])  # T^4
    u = {0: f.one}
    p = minimal_polynomial_of_element(alg, u)
    assert p == Poly.from_rationals(f, [-1, 1])  # T - 1
    # w shifted by 1: min poly (T-1)^4
    v = {0: f.one, 1: f.one}
    p = minimal_polynomial_of_element(alg, v)
    shifted = Poly.from_rationals(f, [-1, 1])
    expect = Poly.from_rationals(f, [1])
    for _ in range(4):
        expect = expect * shifted
    assert p == expect


def test_rref_reports_pivots():
    f = field(1)
    m = mat(f, [[0, 1, 2], [0, 2, 4]])
    red, pivots = rref(m)
    assert list(pivots) == [1]
    assert red.entries[0][1] == f.one
