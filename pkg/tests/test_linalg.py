from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import exact_rank
from tlzero.linalg import (
    MatrixRep,
    det,
    direct_sum,
    hom_space,
    hom_space_direct,
    identity,
    image_basis,
    inverse,
    is_intertwiner,
    kernel_basis,
    mat_equal,
    matmul,
    quotient_rep,
    rank,
    same_span,
    zeros,
)
from tlzero.scalars import GaussianRational, I, Laurent, S
from tlzero.standard import build_projective, build_standard, phi

small = st.integers(min_value=-3, max_value=3)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def test_zero_and_identity_ranks():
    assert rank(zeros(3, 3)) == 0
    assert len(kernel_basis(zeros(3, 3), 3)) == 3
    for n in range(1, 6):
        assert rank(identity(n)) == n


@given(st.data())
def test_rank_matches_plain_elimination(data):
    r, c = data.draw(st.integers(1, 6)), data.draw(st.integers(1, 6))
    m = data.draw(matrices(r, c))
    assert rank(m) == exact_rank(m)
    ker = kernel_basis(m, c)
    assert len(ker) == c - rank(m)
    for v in ker:
        assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in m)


@given(st.data())
def test_inverse_and_det(data):
    n = data.draw(st.integers(1, 5))
    m = data.draw(matrices(n, n))
    d = det(m)
    assert (d != 0) == (rank(m) == n)
    if d != 0:
        assert mat_equal(matmul(m, inverse(m)), identity(n))


def test_image_and_kernel_complement():
    m = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert len(image_basis(m, 3)) == rank(m) == 2
    assert same_span(kernel_basis(m, 3), [[1, 1, -1]], 3)


def test_hom_space_endomorphisms_of_trivial():
    w = build_standard(4, 4)
    assert len(hom_space(w.rep, w.rep)) == 1


def test_hom_examples():
    assert len(hom_space(build_projective(4, 2).rep, build_standard(4, 4).rep)) == 0
    p = build_projective(4, 2).rep
    assert len(hom_space(p, p)) == 2


@pytest.mark.parametrize("n", [4, 6])
def test_hom_space_two_routes(n):
    """The spin solver agrees with the direct Kronecker-system solver."""
    mods = [build_standard(n, l).rep for l in range(0, n + 1, 2)]
    for x in mods:
        for y in mods:
            fast = hom_space(x, y)
            slow = hom_space_direct(x, y)
            assert len(fast) == len(slow)
            assert all(is_intertwiner(t, x, y) for t in fast)


def test_quotient_examples():
    w = build_standard(4, 2).rep
    q, proj = quotient_rep(w, [])
    assert q.dim == w.dim
    w0 = build_standard(4, 0)
    img = image_basis(phi(4, 0), build_standard(4, 2).dim)
    q0, _ = quotient_rep(w0.rep, img)
    assert q0.dim == 0


def test_direct_sum_block_shape():
    a, b = build_standard(5, 1).rep, build_standard(5, 3).rep
    s = direct_sum(a, b)
    assert s.dim == a.dim + b.dim
    assert s.ngens == a.ngens


def test_gaussian_and_laurent_scalars():
    assert I * I == -1
    assert (GaussianRational(1, 1) * GaussianRational(1, -1)) == 2
    beta = S + Laurent.monomial(-1)
    assert beta.evaluate(I) == 0
    q, r = (S * S + 1 + S).divmod(1 + S * S)
    assert q * (1 + S * S) + r == S * S + 1 + S


def test_matrix_rep_shape_check():
    with pytest.raises(ValueError):
        MatrixRep(2, [[[1, 0]]])
