"""Small hand-checkable computations with fixed inputs and known outputs."""

from __future__ import annotations

from typing import List, Tuple

from .diagrams import PlanarDiagram, compose, generator_diagram
from .report import Report
from .specht import (
    G_map,
    MultilinearPoly,
    TwoRowTableau,
    crossing_count,
    pairs_polynomial,
    resolve_to_noncrossing,
    tableau_polynomial,
)
from .standard import phi_expand

# F = (z1+z4)(z2+z6)(z5+z7) in T^(5,3), n = 8
RESOLUTION_TABLEAU = TwoRowTableau((1, 2, 5, 3, 8), (4, 6, 7))

# A hand resolution of the same polynomial into eight chord sets.  Two of them
# still cross, so as a set of planar diagrams it cannot be the final answer.
HAND_RESOLUTION: Tuple[Tuple[Tuple[int, int], ...], ...] = (
    ((1, 2), (4, 5), (6, 7)),
    ((1, 2), (4, 7), (5, 6)),
    ((1, 5), (2, 3), (6, 7)),
    ((1, 5), (3, 4), (6, 7)),
    ((1, 4), (2, 3), (5, 6)),
    ((2, 3), (4, 7), (5, 6)),
    ((1, 2), (3, 4), (5, 6)),
    ((2, 7), (3, 4), (5, 6)),
)


def word_product(n: int, word: List[int]) -> Tuple[int, PlanarDiagram]:
    """Multiply generators left to right, stacking each new factor underneath."""
    loops, acc = 0, PlanarDiagram.identity(n)
    for i in word:
        k, acc = compose(acc, generator_diagram(n, i))
        loops += k
    return loops, acc


def _act(e: PlanarDiagram, x: PlanarDiagram) -> Tuple[int, PlanarDiagram]:
    return compose(e, x)


def _expansion_str(terms) -> List[Tuple[int, str]]:
    return sorted((c, str(y)) for c, y in terms)


def verify_worked_examples() -> Report:
    rep = Report()

    loops, d = word_product(5, [1, 3, 2, 1, 3])
    _, e13 = word_product(5, [1, 3])
    rep.add("product_e1e3e2e1e3", "e1 e3 e2 e1 e3 = beta e1 e3 in TL_5", {"n": 5},
            {"loops": 1, "diagram": str(e13)}, {"loops": loops, "diagram": str(d)})

    x = PlanarDiagram.from_top_matching(6, [(3, 4), (5, 6)], 2)
    # the generator joining points 4 and 5 reconnects the two cups
    loops4, y4 = _act(generator_diagram(6, 4), x)
    want = PlanarDiagram.from_top_matching(6, [(3, 6), (4, 5)], 2)
    rep.add("action_e4_on_W2_6", "e4 x is the monic diagram with cups (3,6),(4,5)", {"n": 6, "ell": 2},
            {"loops": 0, "monic": True, "diagram": str(want)},
            {"loops": loops4, "monic": y4.is_monic(), "diagram": str(y4)})
    loops3, y3 = _act(generator_diagram(6, 3), x)
    rep.add("action_e3_on_W2_6", "e3 closes the cup (3,4) into a loop, so e3 x = beta x", {"n": 6, "ell": 2},
            {"loops": 1, "diagram": str(x)}, {"loops": loops3, "diagram": str(y3)})
    _, y1 = _act(generator_diagram(6, 1), x)
    rep.add("action_e1_on_W2_6", "e1 x has a cap, so it is zero in W_2^6", {"n": 6, "ell": 2},
            {"monic": False}, {"monic": y1.is_monic()})

    x10 = PlanarDiagram.from_top_matching(10, [(2, 3), (4, 5)], 6)
    expected = [
        (1, PlanarDiagram.from_top_matching(10, [(1, 6), (2, 3), (4, 5)], 4)),
        (-1, PlanarDiagram.from_top_matching(10, [(2, 3), (4, 5), (7, 8)], 4)),
        (1, PlanarDiagram.from_top_matching(10, [(2, 3), (4, 5), (9, 10)], 4)),
    ]
    rep.add("phi_4_10_expansion", "phi_4^10 x is a signed sum of three diagrams", {"n": 10, "ell": 4},
            _expansion_str(expected), _expansion_str(phi_expand(x10)))

    x12 = PlanarDiagram.from_top_matching(12, [(1, 4), (2, 3), (6, 11), (7, 8), (9, 10)], 2)
    product = pairs_polynomial(12, [(1, 4), (2, 3), (6, 11), (7, 8), (9, 10)])
    rep.add("G_2_12_polynomial", "G of a W_2^12 diagram is the product of its cup binomials",
            {"n": 12, "ell": 2}, str(product), str(G_map(x12)))

    t1 = TwoRowTableau((1, 3, 2), (4,))
    rep.add("tableau_polynomial_t1", "F_t for t = [[1,3,2],[4]]", {"n": 4},
            str(MultilinearPoly.parse(4, "z1 + z4")), str(tableau_polynomial(t1)))
    return rep


def verify_resolution_example() -> Report:
    """Resolve F = (z1+z4)(z2+z6)(z5+z7) at n = 8 and compare with the hand resolution."""
    rep = Report()
    t = RESOLUTION_TABLEAU
    n = t.n
    res = resolve_to_noncrossing(t)
    ours = sorted(tuple(sorted(x.cups())) for x in res.diagrams)
    hand = sorted(HAND_RESOLUTION)
    f = tableau_polynomial(t)
    params = {"n": n, "F": str(f)}

    total = MultilinearPoly(n)
    for x in res.diagrams:
        total = total + G_map(x)
    rep.add("resolution_example_sum", "G-images of the resolution sum to F", params, str(f), str(total))
    rep.add("resolution_example_planar", "every output diagram is non-crossing", params, True,
            all(crossing_count(n, c) == 0 for c in ours))

    hand_total = MultilinearPoly(n)
    for chords in hand:
        hand_total = hand_total + pairs_polynomial(n, chords)
    rep.add("hand_resolution_sum", "the eight hand summands also sum to F", params, str(f), str(hand_total))
    hand_planar = [c for c in hand if crossing_count(n, c) == 0]
    rep.add("hand_planar_subset", "planar hand summands appear in the computed resolution", params,
            [list(map(list, c)) for c in hand_planar],
            [list(map(list, c)) for c in hand_planar if c in ours])
    rep.add("resolution_example_set", "the resolution equals the eight hand summands as a set", params,
            [list(map(list, c)) for c in hand], [list(map(list, c)) for c in ours],
            note="two hand summands cross; the non-crossing resolution has ten diagrams")
    return rep
