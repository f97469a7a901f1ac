import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import binomial_difference, exact_rank, gram_oracle
from tlzero.diagrams import enumerate_monic_basis, standard_dim
from tlzero.linalg import is_zero_matrix, matmul, matvec, rank
from tlzero.scalars import BETA
from tlzero.standard import (
    adjacent_maps,
    build_projective,
    build_standard,
    build_standard_generic,
    expected_pp,
    expected_pw,
    gram_matrix,
    hom_table_pp,
    hom_table_pw,
    irreducible_dim,
    phi,
    phi_expand,
    projective_diagram_count,
    tl_relation_failures,
    verify_adjacent_compositions,
    verify_exact_sequence,
    verify_bend_composite,
    verify_gram,
    verify_hom_tables,
    verify_hw_axioms_tl,
    verify_odd_semisimple,
    verify_restriction,
)


def _ids(rep):
    return sorted({c.claim_id for c in rep.failures()})


@pytest.mark.parametrize("n", range(1, 9))
def test_standard_modules_satisfy_relations_at_zero(n):
    for ell in range(n % 2, n + 1, 2):
        assert tl_relation_failures(build_standard(n, ell).rep.gens, 0) == []


@pytest.mark.parametrize("n", range(1, 6))
def test_generic_standard_modules_satisfy_relations(n):
    for ell in range(n % 2, n + 1, 2):
        w = build_standard_generic(n, ell, BETA)
        assert tl_relation_failures(w.rep.gens, BETA) == []


def test_top_module_is_killed_by_generators():
    w = build_standard(4, 4)
    assert w.dim == 1
    assert all(is_zero_matrix(g) for g in w.rep.gens)


def test_gram_small_cases():
    assert gram_matrix(2, 2) == ((1,),)
    assert irreducible_dim(2, 2) == 1
    assert irreducible_dim(4, 2) == 2 == standard_dim(3, 1)


def test_gram_rank_six_four():
    # dim W_3^5 = 4; the rank is 4, not 5
    assert irreducible_dim(6, 4) == 4 == standard_dim(5, 3)


def test_gram_zero_level_rejected():
    with pytest.raises(ValueError):
        gram_matrix(4, 0)


@pytest.mark.parametrize("n", range(2, 9))
def test_gram_matches_strand_oracle(n):
    for ell in range(2 - n % 2, n + 1, 2):
        basis = enumerate_monic_basis(n, ell)
        want = gram_oracle(basis, n, ell)
        got = [list(r) for r in gram_matrix(n, ell)]
        assert got == want
        assert irreducible_dim(n, ell) == exact_rank(want)


@pytest.mark.parametrize("n", range(2, 11, 2))
def test_exact_sequence(n):
    rep = verify_exact_sequence(n)
    assert rep.passed, _ids(rep)


def test_exact_sequence_needs_even_n():
    with pytest.raises(ValueError):
        verify_exact_sequence(5)


def test_phi_examples():
    for x in enumerate_monic_basis(6, 2):
        terms = phi_expand(x)
        assert len(terms) == 1 and terms[0][0] == 1
    # dim W_3^5 = C(5,1) - C(5,0) = 4
    assert rank(phi(6, 2)) == 4 == standard_dim(5, 3)


def test_phi_squared_zero_dense():
    for n in (4, 6, 8):
        for ell in range(2, n - 1, 2):
            assert is_zero_matrix(matmul(phi(n, ell - 2), phi(n, ell)))


@given(st.data())
def test_phi_intertwines_random_vectors(data):
    n = data.draw(st.sampled_from([4, 6, 8]))
    ell = data.draw(st.sampled_from(list(range(0, n - 1, 2))))
    i = data.draw(st.integers(0, n - 2))
    src = build_standard(n, ell + 2)
    dst = build_standard(n, ell)
    v = data.draw(st.lists(st.integers(-4, 4), min_size=src.dim, max_size=src.dim))
    f = phi(n, ell)
    left = matvec(f, matvec(src.rep.gens[i], v))
    right = matvec(dst.rep.gens[i], matvec(f, v))
    assert left == right


@pytest.mark.parametrize("n", range(2, 11, 2))
def test_bend_composite(n):
    rep = verify_bend_composite(n)
    assert rep.passed, _ids(rep)


@pytest.mark.parametrize("n", range(1, 13))
def test_gram_campaign(n):
    rep = verify_gram(n)
    assert rep.passed, _ids(rep)


@pytest.mark.parametrize("m", [1, 3, 5, 7, 9])
def test_odd_semisimple(m):
    assert verify_odd_semisimple(m).passed


def test_restriction_example():
    rep = verify_restriction(4, 2)
    assert rep.passed
    dims = next(c for c in rep.claims if c.claim_id == "restriction_dims")
    assert dims.computed == 3 == standard_dim(3, 1) + standard_dim(3, 3)


def test_restriction_boundary_two_strands():
    # W_0^2 restricted to TL_1 is W_1^1; the other summand is absent
    assert verify_restriction(2, 0).passed


@pytest.mark.parametrize("n", [4, 6, 8])
def test_restriction_all_levels(n):
    for ell in range(0, n + 1, 2):
        rep = verify_restriction(n, ell)
        assert rep.passed, (ell, _ids(rep))


def test_restriction_rejects_odd_n():
    with pytest.raises(ValueError):
        verify_restriction(5, 3)


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_projective_dimensions(n):
    for ell in range(2, n + 1, 2):
        p = build_projective(n, ell)
        want = binomial_difference(n, ell) + binomial_difference(n, ell - 2)
        assert p.dim == want == projective_diagram_count(n, ell)
        assert tl_relation_failures(p.rep.gens, 0) == []


@pytest.mark.parametrize("n", [4, 6])
def test_hom_tables(n):
    for (l, m), d in hom_table_pw(n).items():
        assert d == expected_pw(l, m), (l, m)
    for (l, m), d in hom_table_pp(n).items():
        assert d == expected_pp(l, m), (l, m)
    assert verify_hom_tables(n).passed


def test_hom_pp_total_is_path_count():
    for n in (4, 6):
        assert sum(hom_table_pp(n).values()) == 2 * n - 2


@pytest.mark.parametrize("n", [4, 6])
def test_hw_axioms_tl(n):
    rep = verify_hw_axioms_tl(n)
    bad = {(c.claim_id, c.parameters["ell"]) for c in rep.failures()}
    # only the boundary level fails: ker(P_2 -> W_2) is W_0
    assert bad == {("hw_kernel_is_standard", 2)}


@pytest.mark.parametrize("n", [6, 8])
def test_adjacent_maps(n):
    rep = verify_adjacent_compositions(n)
    assert rep.passed, _ids(rep)
    maps = adjacent_maps(n)
    for l, w in maps.omega.items():
        assert rank(w) > 0 and rank(maps.gamma[l]) > 0
