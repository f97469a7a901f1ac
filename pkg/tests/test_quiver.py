import pytest
from hypothesis import given
from hypothesis import strategies as st

from tlzero.quiver import (
    QuiverRep,
    build_Delta,
    build_L,
    build_P,
    enumerate_path_basis,
    functor_Phi,
    graded_quotient_dims,
    quiver_hom,
    reduce_path,
    verify_hw_axioms_quiver,
    verify_path_basis,
    verify_Phi_images,
    verify_Psi_iso,
)
from tlzero.standard import build_standard, hom_table_pp


def _ids(rep):
    return sorted({c.claim_id for c in rep.failures()})


def test_path_basis_small():
    assert [str(p) for p in enumerate_path_basis(1)] == ["e1"]
    assert len(enumerate_path_basis(2)) == 6
    assert len(enumerate_path_basis(4)) == 14


@pytest.mark.parametrize("m", range(2, 7))
def test_path_basis_size_and_bruteforce(m):
    assert len(enumerate_path_basis(m)) == 4 * m - 2
    graded = graded_quotient_dims(m, 4)
    assert graded[:3] == [m, 2 * m - 2, m] and graded[3:] == [0, 0]
    assert verify_path_basis(m).passed


@pytest.mark.parametrize("n", [4, 6, 8])
def test_path_count_equals_projective_homs(n):
    """Two routes to dim End(P_2 + ... + P_n): rewriting normal forms and TL hom spaces."""
    assert len(enumerate_path_basis(n // 2)) == sum(hom_table_pp(n).values()) == 2 * n - 2


def test_rewriting_rules():
    m = 3
    # a_i b_i at vertex i <= m-1 turns into b_{i+1} a_{i+1}: the loop moves right
    left = reduce_path(m, 1, (1, -1))
    assert left is not None and left.steps == (1, -1)
    assert reduce_path(m, 2, (-1, 1)) == reduce_path(m, 2, (1, -1))
    assert reduce_path(m, 1, (1, 1)) is None
    assert reduce_path(m, 3, (-1, -1)) is None
    assert reduce_path(m, 2, (1, -1, 1)) is None
    assert reduce_path(m, 3, (-1, 1, -1)) is None


def test_delta_shapes():
    assert build_Delta(4, 4).dims == [0, 0, 0, 1]
    assert build_Delta(4, 2).dims == [0, 1, 1, 0]
    assert build_L(4, 3).dims == [0, 0, 1, 0]


@pytest.mark.parametrize("m", range(1, 7))
def test_projectives_satisfy_relations(m):
    for i in range(1, m + 1):
        p = build_P(m, i)
        assert p.relation_failures() == []
        # dim P(i) = number of paths starting at i
        assert p.total_dim == sum(1 for q in enumerate_path_basis(m) if q.source == i)


@pytest.mark.parametrize("m", range(2, 7))
def test_hw_axioms_quiver(m):
    rep = verify_hw_axioms_quiver(m)
    bad = {(c.claim_id, c.parameters["i"]) for c in rep.failures()}
    # only the boundary vertex fails: ker(P(1) -> Delta(1)) is L(1)
    assert bad == {("quiver_hw_kernel_filtration", 1)}


@pytest.mark.parametrize("n", [4, 6, 8])
def test_psi_relations(n):
    rep = verify_Psi_iso(n)
    assert rep.passed, _ids(rep)


@pytest.mark.parametrize("n", [4, 6])
def test_phi_images(n):
    rep = verify_Phi_images(n)
    assert rep.passed, _ids(rep)


def test_phi_of_w0_and_middle():
    q, _ = functor_Phi(6, build_standard(6, 0).rep)
    assert q.dims == [1, 0, 0]
    q, _ = functor_Phi(6, build_standard(6, 2).rep)
    assert q.dims == [1, 1, 0]


def test_json_roundtrip():
    p = build_P(3, 2)
    assert QuiverRep.from_json(p.to_json()) == p


@given(st.integers(2, 5), st.data())
def test_hom_from_projective_counts_paths(m, data):
    """dim hom(P(i), X) = dim X at vertex i, for X built from the library."""
    i = data.draw(st.integers(1, m))
    j = data.draw(st.integers(1, m))
    x = data.draw(st.sampled_from([build_Delta(m, j), build_L(m, j), build_P(m, j)]))
    assert len(quiver_hom(build_P(m, i), x)) == x.dims[i - 1]


@given(st.integers(2, 5), st.data())
def test_reduced_paths_are_fixed_points(m, data):
    p = data.draw(st.sampled_from(enumerate_path_basis(m)))
    assert reduce_path(m, p.source, p.steps) == p


@given(st.integers(2, 4), st.data())
def test_reduction_respects_concatenation(m, data):
    """Reducing a product of normal forms equals reducing the raw concatenation."""
    basis = enumerate_path_basis(m)
    p = data.draw(st.sampled_from(basis))
    q = data.draw(st.sampled_from([b for b in basis if b.source == p.target]))
    raw = reduce_path(m, p.source, p.steps + q.steps)
    assert raw == reduce_path(m, p.source, reduce_path(m, p.source, p.steps).steps + q.steps)
