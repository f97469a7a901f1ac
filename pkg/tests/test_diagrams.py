import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import binomial_difference, catalan_recurrence, count_kind, diagram_pairs, stack
from tlzero.diagrams import (
    DiagramError,
    PlanarDiagram,
    all_diagrams,
    append_throughline,
    catalan,
    compose,
    enumerate_monic_basis,
    enumerate_tl_basis,
    generator_diagram,
    insert_cup,
    reflect,
    render_ascii,
    standard_dim,
)


def test_generator_tl2():
    e = generator_diagram(2, 1)
    assert e.cups() == [(1, 2)]
    assert e.caps() == [(1, 2)]
    assert e.n_throughlines() == 0


def test_generator_tl5_e3():
    e = generator_diagram(5, 3)
    assert e.cups() == [(3, 4)]
    assert e.caps() == [(3, 4)]
    assert sorted(t for t, _ in e.throughlines()) == [1, 2, 5]


def test_generator_out_of_range():
    with pytest.raises(DiagramError):
        generator_diagram(4, 4)


def test_crossing_matching_rejected():
    with pytest.raises(DiagramError):
        PlanarDiagram.from_pairs(4, 0, [(("t", 1), ("t", 3)), (("t", 2), ("t", 4))])


def test_compose_identity_and_square():
    d = generator_diagram(5, 2)
    assert compose(PlanarDiagram.identity(5), d) == (0, d)
    e = generator_diagram(2, 1)
    assert compose(e, e) == (1, e)


@pytest.mark.parametrize("n,count", [(3, 5), (4, 14), (10, 16796)])
def test_tl_basis_counts(n, count):
    assert len(enumerate_tl_basis(n)) == count == catalan_recurrence(n)


@pytest.mark.parametrize("n", range(1, 11))
def test_catalan_matches_recurrence(n):
    assert catalan(n) == catalan_recurrence(n)


@pytest.mark.parametrize("n,ell,count", [(6, 2, 9), (4, 4, 1), (4, 2, 3)])
def test_monic_basis_examples(n, ell, count):
    assert len(enumerate_monic_basis(n, ell)) == count


@pytest.mark.parametrize("n", range(1, 13))
def test_monic_basis_matches_binomial_difference(n):
    for ell in range(n % 2, n + 1, 2):
        basis = enumerate_monic_basis(n, ell)
        assert len(basis) == standard_dim(n, ell) == binomial_difference(n, ell)
        assert len(set(basis)) == len(basis)
        assert all(x.is_monic() and x.n_bottom == ell for x in basis)


def test_monic_basis_by_filtering_all_diagrams():
    for n in range(1, 9):
        for ell in range(n % 2, n + 1, 2):
            brute = sorted((x for x in all_diagrams(n, ell) if x.is_monic()), key=lambda d: d.pairs)
            assert brute == sorted(enumerate_monic_basis(n, ell), key=lambda d: d.pairs)


def test_reflect_examples():
    assert reflect(PlanarDiagram.identity(4)) == PlanarDiagram.identity(4)
    for i in range(1, 6):
        assert reflect(generator_diagram(6, i)) == generator_diagram(6, i)
    x = enumerate_monic_basis(6, 2)[0]
    r = reflect(x)
    assert (r.n_top, r.n_bottom) == (2, 6)


def test_insert_cup_examples():
    x = PlanarDiagram.from_top_matching(10, [(2, 3), (4, 5)], 6)
    y = insert_cup(x, 2)
    assert sorted(y.cups()) == [(2, 3), (4, 5), (7, 8)]
    single = insert_cup(PlanarDiagram.identity(2), 0)
    assert (single.n_top, single.n_bottom, single.cups()) == (2, 0, [(1, 2)])


def test_insert_cup_on_two_throughlines_drops_two():
    for x in enumerate_monic_basis(8, 4):
        for i in range(3):
            assert insert_cup(x, i).n_throughlines() == x.n_throughlines() - 2


def test_append_throughline_shape():
    x = enumerate_monic_basis(5, 1)[2]
    y = append_throughline(x)
    assert (y.n_top, y.n_bottom) == (6, 2)
    assert y.cups() == x.cups()


def test_parse_roundtrip_and_draw():
    for x in enumerate_monic_basis(6, 2):
        assert PlanarDiagram.parse(str(x)) == x
        pic = render_ascii(x)
        assert pic.splitlines()[0].split() == [str(i) for i in range(1, 7)]


def _diagrams(n_top, n_bottom):
    return st.sampled_from(all_diagrams(n_top, n_bottom))


sizes = st.integers(min_value=0, max_value=5)


@given(st.data())
def test_compose_matches_strand_walk(data):
    a, b, c = (data.draw(sizes) for _ in range(3))
    # keep the parities compatible
    b = b if (a + b) % 2 == 0 else b + 1
    c = c if (b + c) % 2 == 0 else c + 1
    x = data.draw(_diagrams(a, b))
    y = data.draw(_diagrams(b, c))
    loops, z = compose(x, y)
    o_loops, o_pairs = stack(diagram_pairs(x), b, diagram_pairs(y))
    assert loops == o_loops
    assert diagram_pairs(z) == o_pairs


@given(st.data())
def test_compose_is_associative(data):
    n = data.draw(st.integers(min_value=1, max_value=6))
    x, y, z = (data.draw(_diagrams(n, n)) for _ in range(3))
    l1, xy = compose(x, y)
    l2, left = compose(xy, z)
    l3, yz = compose(y, z)
    l4, right = compose(x, yz)
    assert left == right
    assert l1 + l2 == l3 + l4


@given(st.data())
def test_reflect_is_involution_and_antihomomorphism(data):
    n = data.draw(st.integers(min_value=1, max_value=6))
    x, y = data.draw(_diagrams(n, n)), data.draw(_diagrams(n, n))
    assert reflect(reflect(x)) == x
    lxy, xy = compose(x, y)
    lyx, yx = compose(reflect(y), reflect(x))
    assert lxy == lyx and reflect(xy) == yx


@given(st.data())
def test_tl_relations_on_diagrams(data):
    n = data.draw(st.integers(min_value=3, max_value=8))
    i = data.draw(st.integers(min_value=1, max_value=n - 2))
    e, f = generator_diagram(n, i), generator_diagram(n, i + 1)
    assert compose(e, e) == (1, e)
    _, ef = compose(e, f)
    assert compose(ef, e) == (0, e)


@given(st.data())
def test_cup_cap_through_counts_balance(data):
    a = data.draw(st.integers(min_value=0, max_value=7))
    b = data.draw(st.integers(min_value=0, max_value=7).filter(lambda v: (v + a) % 2 == 0))
    x = data.draw(_diagrams(a, b))
    pairs = diagram_pairs(x)
    assert x.n_cups() == count_kind(pairs, "cup")
    assert 2 * x.n_cups() + x.n_throughlines() == a
    assert 2 * x.n_caps() + x.n_throughlines() == b
