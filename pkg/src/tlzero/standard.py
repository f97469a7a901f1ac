"""Standard, projective and simple modules of TL_n(0), and the maps between them.

Everything here is over the rationals at beta = 0 unless a function says
otherwise.  Generator ``e_i`` (1-based) is stored at index ``i-1`` of
``MatrixRep.gens``.  A matrix for a map ``X -> Y`` has ``dim Y`` rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .diagrams import (
    DiagramError,
    PlanarDiagram,
    all_diagrams,
    append_throughline,
    compose,
    enumerate_monic_basis,
    enumerate_tl_basis,
    generator_diagram,
    insert_cup,
    reflect,
    standard_dim,
)
from .linalg import (
    Matrix,
    MatrixRep,
    NotInvariantError,
    check_invariant,
    det,
    direct_sum,
    find_invertible,
    hom_space,
    image_basis,
    is_intertwiner,
    is_zero_matrix,
    kernel_basis,
    mat_equal,
    mat_scale,
    matmul,
    normalize_first_nonzero,
    rank,
    same_span,
    zeros,
)
from .report import Report


def _check_params(n: int, ell: int) -> None:
    if n < 1 or ell < 0 or ell > n or (n - ell) % 2:
        raise DiagramError(f"need 0 <= ell <= n and ell = n mod 2, got n={n}, ell={ell}")


# ---------------------------------------------------------------------------
# standard modules

@lru_cache(maxsize=None)
def action_table(n: int, ell: int) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    """For each generator and basis diagram x: (index of e_i x, loops), or (-1, 0) if a cap forms."""
    _check_params(n, ell)
    basis = enumerate_monic_basis(n, ell)
    index = {x: k for k, x in enumerate(basis)}
    table = []
    for i in range(1, n):
        g = generator_diagram(n, i)
        row = []
        for x in basis:
            loops, y = compose(g, x)
            row.append((index[y], loops) if y.is_monic() else (-1, 0))
        table.append(tuple(row))
    return tuple(table)


@dataclass
class StandardModule:
    n: int
    ell: int
    basis: Tuple[PlanarDiagram, ...]
    rep: MatrixRep
    index: Dict[PlanarDiagram, int] = field(repr=False, default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.basis)


def _standard_matrices(n: int, ell: int, loop_weight) -> List[Matrix]:
    d = standard_dim(n, ell)
    gens = []
    for row in action_table(n, ell):
        m = zeros(d, d)
        for src, (dst, loops) in enumerate(row):
            if dst < 0:
                continue
            c = loop_weight(loops)
            if c:
                m[dst][src] = c
        gens.append(m)
    return gens


@lru_cache(maxsize=None)
def build_standard(n: int, ell: int) -> StandardModule:
    """W_ell^n at beta = 0: loops and caps both kill a term."""
    basis = enumerate_monic_basis(n, ell)
    gens = _standard_matrices(n, ell, lambda k: 1 if k == 0 else 0)
    rep = MatrixRep(len(basis), gens, "QQ", [str(x) for x in basis])
    return StandardModule(n, ell, basis, rep, {x: k for k, x in enumerate(basis)})


def build_standard_generic(n: int, ell: int, beta) -> StandardModule:
    """W_ell^n with loop value ``beta`` (any exact scalar, e.g. a Laurent polynomial)."""
    basis = enumerate_monic_basis(n, ell)
    gens = _standard_matrices(n, ell, lambda k: beta ** k if k else 1)
    rep = MatrixRep(len(basis), gens, type(beta).__name__, [str(x) for x in basis])
    return StandardModule(n, ell, basis, rep, {x: k for k, x in enumerate(basis)})


def tl_relation_failures(gens: Sequence[Matrix], beta=0) -> List[str]:
    """Which of e_i^2 = beta e_i, e_i e_{i+-1} e_i = e_i, e_i e_j = e_j e_i fail."""
    out = []
    k = len(gens)
    for i in range(k):
        a = gens[i]
        if not mat_equal(matmul(a, a), mat_scale(beta, a)):
            out.append(f"e{i + 1}^2")
        for j in range(k):
            b = gens[j]
            if abs(i - j) == 1:
                if not mat_equal(matmul(matmul(a, b), a), a):
                    out.append(f"e{i + 1}e{j + 1}e{i + 1}")
            elif abs(i - j) >= 2 and i < j:
                if not mat_equal(matmul(a, b), matmul(b, a)):
                    out.append(f"e{i + 1}e{j + 1}")
    return out


# ---------------------------------------------------------------------------
# Gram pairing

def pairing(x: PlanarDiagram, y: PlanarDiagram) -> int:
    """1 iff reflect(x) stacked on y keeps all ell throughlines and closes no loop."""
    loops, z = compose(reflect(x), y)
    return 1 if loops == 0 and z.n_throughlines() == x.n_bottom else 0


@lru_cache(maxsize=None)
def gram_matrix(n: int, ell: int) -> Tuple[Tuple[int, ...], ...]:
    _check_params(n, ell)
    if ell == 0:
        raise ValueError("the pairing is only defined for ell > 0")
    basis = enumerate_monic_basis(n, ell)
    return tuple(tuple(pairing(x, y) for y in basis) for x in basis)


@lru_cache(maxsize=None)
def irreducible_dim(n: int, ell: int) -> int:
    return rank([list(r) for r in gram_matrix(n, ell)])


# ---------------------------------------------------------------------------
# induced (projective) modules

class _WeightedClasses:
    """Quotient of K^N by relations of the form x = c*y and x = 0.

    Each element points at a parent with a weight (x = w * parent).  The root
    of a class is its smallest index; a killed root means the class is zero.
    """

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.weight: List[object] = [1] * size
        self.dead = [False] * size

    def find(self, x: int) -> Tuple[int, object]:
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root = x
        # compress, accumulating weights from the top down
        acc = 1
        for y in reversed(path):
            acc = self.weight[y] * acc
            self.parent[y] = root
            self.weight[y] = acc
        return root, (self.weight[path[0]] if path else 1)

    def kill(self, x: int) -> None:
        self.dead[self.find(x)[0]] = True

    def relate(self, x: int, c, y: int) -> None:
        """Impose x = c*y."""
        if not c:
            self.kill(x)
            return
        rx, a = self.find(x)
        ry, b = self.find(y)
        # a*rx = c*b*ry
        if rx == ry:
            if a != c * b:
                self.dead[rx] = True
            return
        if rx > ry:
            child, root, w = rx, ry, Fraction(c * b) / a
        else:
            child, root, w = ry, rx, Fraction(a) / (c * b)
        self.parent[child] = root
        self.weight[child] = w
        if self.dead[child]:
            self.dead[root] = True

    def normal_form(self, x: int) -> Tuple[int, object]:
        """(root, weight) with x = weight * root, or (-1, 0) when x is zero."""
        r, w = self.find(x)
        return (-1, 0) if self.dead[r] else (r, w)


@dataclass
class ProjectiveModule:
    n: int
    ell: int
    rep: MatrixRep
    basis: List[Tuple[PlanarDiagram, PlanarDiagram]]
    spanning_size: int
    relation_count: int

    @property
    def dim(self) -> int:
        return self.rep.dim


@lru_cache(maxsize=None)
def build_projective(n: int, ell: int) -> ProjectiveModule:
    """TL_n(0) tensored over TL_{n-1}(0) with W_{ell-1}^{n-1}, as an explicit quotient.

    Spanning set d (x) w over TL_n diagrams d and basis diagrams w; relations
    d e_j (x) w = d (x) e_j w for the generators e_j of TL_{n-1}.  These are
    binomial, so the quotient is computed with weighted equivalence classes.
    """
    _check_params(n, ell)
    if ell < 2:
        raise ValueError("projectives are indexed by ell >= 2")
    tl = enumerate_tl_basis(n)
    tl_index = {d: k for k, d in enumerate(tl)}
    small = build_standard(n - 1, ell - 1)
    dw = small.dim
    table = action_table(n - 1, ell - 1) if n > 1 else ()
    size = len(tl) * dw
    classes = _WeightedClasses(size)
    nrel = 0
    for di, d in enumerate(tl):
        for j in range(1, n - 1):
            loops, de = compose(d, generator_diagram(n, j))
            left = -1 if loops else tl_index[de]
            for wi in range(dw):
                dst, wl = table[j - 1][wi]
                right = -1 if (dst < 0 or wl) else di * dw + dst
                nrel += 1
                a = left * dw + wi if left >= 0 else -1
                if a < 0 and right < 0:
                    continue
                if a < 0:
                    classes.kill(right)
                elif right < 0:
                    classes.kill(a)
                else:
                    classes.relate(a, 1, right)

    nf = [classes.normal_form(k) for k in range(size)]
    roots = sorted({r for r, _ in nf if r >= 0})
    pos = {r: k for k, r in enumerate(roots)}
    dim = len(roots)

    gens = []
    for i in range(1, n):
        g = generator_diagram(n, i)
        left_action = []
        for d in tl:
            loops, y = compose(g, d)
            left_action.append(-1 if loops else tl_index[y])
        m = zeros(dim, dim)

        def image(k: int) -> Tuple[int, object]:
            di, wi = divmod(k, dw)
            t = left_action[di]
            return (-1, 0) if t < 0 else nf[t * dw + wi]

        for k in range(size):
            r, c = nf[k]
            tr, tc = image(k)
            # well-definedness: e_i applied to k must be c times e_i applied to its root
            if r < 0:
                if tr >= 0:
                    raise NotInvariantError(i - 1, k)
                continue
            rr, rc = image(r)
            lhs = (tr, tc)
            rhs = (rr, c * rc) if rr >= 0 else (-1, 0)
            if lhs != rhs and not (lhs[0] < 0 and rhs[0] < 0):
                raise NotInvariantError(i - 1, k)
        for r in roots:
            rr, rc = image(r)
            if rr >= 0:
                m[pos[rr]][pos[r]] = m[pos[rr]][pos[r]] + rc
        gens.append(m)
    basis = [(tl[r // dw], small.basis[r % dw]) for r in roots]
    labels = [f"{d} (x) {w}" for d, w in basis]
    return ProjectiveModule(n, ell, MatrixRep(dim, gens, "QQ", labels), basis, size, nrel)


def projective_diagram_count(n: int, ell: int) -> int:
    """(n, ell) diagrams whose only possible cap joins the last two bottom points."""
    allowed = (n + ell - 2, n + ell - 1)
    return sum(1 for x in all_diagrams(n, ell) if all(c in (allowed,) for c in _caps_encoded(x)))


def _caps_encoded(x: PlanarDiagram):
    return [(a, b) for a, b in x.pairs if a >= x.n_top]


# ---------------------------------------------------------------------------
# the maps phi and g

@lru_cache(maxsize=None)
def phi_matrix(n: int, ell: int) -> Tuple[Tuple, ...]:
    """phi_ell^n : W_{ell+2}^n -> W_ell^n, x -> sum_i (-1)^i x delta_{2i}."""
    _check_params(n, ell)
    if ell + 2 > n:
        raise ValueError("phi needs ell <= n - 2")
    src = enumerate_monic_basis(n, ell + 2)
    dst = build_standard(n, ell)
    m = zeros(dst.dim, len(src))
    for c, x in enumerate(src):
        for i in range(ell // 2 + 1):
            y = insert_cup(x, 2 * i)
            if y.is_monic():
                m[dst.index[y]][c] += (-1) ** i
    return tuple(tuple(r) for r in m)


def phi(n: int, ell: int) -> Matrix:
    return [list(r) for r in phi_matrix(n, ell)]


def phi_expand(x: PlanarDiagram) -> List[Tuple[int, PlanarDiagram]]:
    """The signed terms of phi applied to a single monic diagram."""
    ell = x.n_bottom - 2
    out = []
    for i in range(ell // 2 + 1):
        y = insert_cup(x, 2 * i)
        if y.is_monic():
            out.append(((-1) ** i, y))
    return out


def g_embed(n: int, ell: int) -> Matrix:
    """W_{ell+1}^{n-1} -> W_{ell+2}^n, appending a throughline on the right."""
    _check_params(n - 1, ell + 1)
    src = enumerate_monic_basis(n - 1, ell + 1)
    dst = build_standard(n, ell + 2)
    m = zeros(dst.dim, len(src))
    for c, x in enumerate(src):
        m[dst.index[append_throughline(x)]][c] = 1
    return m


def bend_rightmost(x: PlanarDiagram) -> PlanarDiagram:
    """(n-1, k) monic diagram -> (n, k-1) diagram: rightmost throughline becomes a cup to point n."""
    n = x.n_top + 1
    tops = [t + 1 for t, _ in sorted((a, b) for a, b in x.pairs if b >= x.n_top and a < x.n_top)]
    p = max(tops)
    return PlanarDiagram.from_top_matching(n, x.cups() + [(p, n)], x.n_bottom - 1)


def bend_composite(n: int, ell: int) -> Tuple[Matrix, Matrix]:
    """(quotient o phi_ell o g, expected (-1)^{ell/2} bend) as square matrices.

    The quotient of W_ell^n by im g_ell^n is linear only; since im g is a
    coordinate subspace (top point n on a throughline), the quotient keeps the
    coordinates of diagrams where point n lies on a cup.
    """
    w = build_standard(n, ell)
    keep = [k for k, y in enumerate(w.basis) if y.partner[n - 1] < n]
    comp = matmul(phi(n, ell), g_embed(n, ell))
    quotient = [comp[k] for k in keep]
    src = enumerate_monic_basis(n - 1, ell + 1)
    kpos = {k: r for r, k in enumerate(keep)}
    expected = zeros(len(keep), len(src))
    sign = (-1) ** (ell // 2)
    for c, x in enumerate(src):
        expected[kpos[w.index[bend_rightmost(x)]]][c] = sign
    return quotient, expected


# ---------------------------------------------------------------------------
# verification campaigns

def _even_levels(n: int) -> List[int]:
    return list(range(0, n + 1, 2))


def verify_exact_sequence(n: int) -> Report:
    if n % 2 or n < 2:
        raise ValueError("n must be a positive even integer")
    rep = Report()
    levels = _even_levels(n)
    mods = {l: build_standard(n, l) for l in levels}
    dims = {l: mods[l].dim for l in levels}
    for l in levels:
        fails = tl_relation_failures(mods[l].rep.gens, 0)
        rep.add("tl_relations_standard", "defining relations at beta=0", {"n": n, "ell": l}, [], fails)
    phis = {l: phi(n, l) for l in levels[:-1]}
    ranks = {l: rank(phis[l]) for l in phis}
    for l, f in phis.items():
        ok = is_intertwiner(f, mods[l + 2].rep, mods[l].rep)
        rep.add("phi_is_homomorphism", "phi commutes with every e_i", {"n": n, "ell": l}, True, ok)
        rep.add("image_dimension", "dim im phi_ell = dim W_{ell+1}^{n-1}", {"n": n, "ell": l},
                standard_dim(n - 1, l + 1), ranks[l])
    for l in levels[1:-1]:
        comp = matmul(phis[l - 2], phis[l])
        rep.add("phi_squared_zero", "phi_{ell-2} o phi_ell = 0", {"n": n, "ell": l}, True, is_zero_matrix(comp))
        ker = kernel_basis(phis[l - 2], dims[l])
        img = image_basis(phis[l], dims[l + 2])
        # image_basis returns rows spanning the column space
        equal = same_span(ker, img, dims[l])
        rep.add("exact_at", "ker phi_{ell-2} = im phi_ell", {"n": n, "ell": l},
                {"ker": dims[l] - ranks[l - 2], "im": ranks[l], "equal": True},
                {"ker": len(ker), "im": len(img), "equal": equal})
    rep.add("injective_at_top", "phi_{n-2} injective on W_n^n", {"n": n}, dims[n], ranks[n - 2])
    rep.add("surjective_onto_W0", "phi_0 onto W_0^n", {"n": n}, dims[0], ranks[0])
    euler = sum((-1) ** (k) * dims[l] for k, l in enumerate(reversed(levels)))
    rep.add("euler_characteristic", "alternating sum of dims", {"n": n, "dims": [dims[l] for l in reversed(levels)]},
            0, euler)
    for l in levels[:-1]:
        w = mods[l]
        img = image_basis(phis[l], dims[l + 2])
        try:
            check_invariant(w.rep, img)
            stable = True
        except NotInvariantError:
            stable = False
        irr = irreducible_dim(n, l + 2)
        ker = kernel_basis(phis[l], dims[l + 2])
        rad = kernel_basis([list(r) for r in gram_matrix(n, l + 2)], dims[l + 2])
        rep.add("image_irreducible", "im phi_ell is stable and has the dimension of L_{ell+2}",
                {"n": n, "ell": l},
                {"stable": True, "dim": irr, "kernel_is_radical": True},
                {"stable": stable, "dim": ranks[l], "kernel_is_radical": same_span(ker, rad, dims[l + 2])})
    return rep


def verify_gram(n: int) -> Report:
    """Gram ranks split every W_ell^n into two irreducible layers; the odd neighbour is semisimple."""
    rep = Report()
    for l in range(2, n + 1, 2) if n % 2 == 0 else ():
        gm = gram_matrix(n, l)
        sym = all(gm[i][j] == gm[j][i] for i in range(len(gm)) for j in range(len(gm)))
        rep.add("gram_symmetric_01", "Gram matrix is symmetric with 0/1 entries", {"n": n, "ell": l}, True,
                sym and all(v in (0, 1) for r in gm for v in r))
        upper = irreducible_dim(n, l + 2) if l + 2 <= n else 0
        rep.add("gram_rank_split", "dim W_ell = dim L_ell + dim L_{ell+2}", {"n": n, "ell": l},
                standard_dim(n, l), irreducible_dim(n, l) + upper)
        if l >= 4:
            rep.add("gram_rank_vs_image", "dim L_ell = dim im phi_{ell-2}", {"n": n, "ell": l},
                    rank(phi(n, l - 2)), irreducible_dim(n, l))
    if n % 2 == 0:
        rep.add("gram_rank_top", "dim L_n^n = 1", {"n": n}, 1, irreducible_dim(n, n))
        if n > 1:
            rep.extend(verify_odd_semisimple(n - 1))
    else:
        rep.extend(verify_odd_semisimple(n))
    return rep


def verify_bend_composite(n: int) -> Report:
    rep = Report()
    for l in _even_levels(n)[:-1]:
        comp, expected = bend_composite(n, l)
        square = len(comp) == len(comp[0]) if comp else True
        bij = square and (not comp or det(comp) != 0)
        rep.add("g_composite_bijective", "quotient o phi o g is a linear isomorphism", {"n": n, "ell": l},
                True, bij)
        rep.add("g_composite_bends", "composite = (-1)^{ell/2} bend rightmost throughline", {"n": n, "ell": l},
                True, mat_equal(comp, expected))
    return rep


def verify_restriction(n: int, ell: int) -> Report:
    """W_ell^n restricted to TL_{n-1} against W_{ell-1}^{n-1} + W_{ell+1}^{n-1} (n even)."""
    _check_params(n, ell)
    if n % 2:
        raise ValueError("restriction splits only for even n")
    rep = Report()
    w = build_standard(n, ell)
    res = w.rep.restrict_generators(n - 2)
    parts = [build_standard(n - 1, k).rep for k in (ell - 1, ell + 1) if 0 <= k <= n - 1]
    target = parts[0] if len(parts) == 1 else direct_sum(parts[0], parts[1])
    params = {"n": n, "ell": ell}
    rep.add("restriction_dims", "dim W_ell^n = sum of restricted summands", params,
            w.dim, target.dim)
    witness = None
    if target.dim == w.dim:
        witness = find_invertible(hom_space(res, target), seed=n * 100 + ell)
    d = det(witness) if witness is not None else 0
    rep.add("restriction_iso", "invertible TL_{n-1} intertwiner exists", params, True, witness is not None)
    rep.add("restriction_witness_det", "exact determinant of the witness is nonzero", params,
            "nonzero", "nonzero" if d != 0 else "zero", passed=d != 0)
    return rep


def hom_dim(x: MatrixRep, y: MatrixRep) -> int:
    return len(hom_space(x, y))


def verify_hw_axioms_tl(n: int) -> Report:
    """Highest weight axioms for standards W_ell (2 <= ell <= n), order reversed."""
    if n % 2 or n < 2:
        raise ValueError("n must be a positive even integer")
    rep = Report()
    levels = _even_levels(n)
    table = {}
    for l in levels:
        for m in levels:
            table[(l, m)] = hom_dim(build_standard(n, l).rep, build_standard(n, m).rep)
    for l in levels[1:]:
        for m in levels[1:]:
            d = table[(l, m)]
            rep.add("hw_hom_order", "hom(W_ell, W_m) != 0 implies ell >= m", {"n": n, "ell": l, "m": m},
                    True, d == 0 or l >= m, note=f"dim={d}")
        rep.add("hw_end_scalar", "End(W_ell) is one-dimensional", {"n": n, "ell": l}, 1, table[(l, l)])
    for l in levels[1:]:
        p = build_projective(n, l)
        top = build_standard(n, l)
        sub = build_standard(n, l - 2)
        params = {"n": n, "ell": l}
        proj_maps = hom_space(p.rep, top.rep)
        inc_maps = hom_space(sub.rep, p.rep)
        pi = next((t for t in proj_maps if rank(t) == top.dim), None)
        iota = next((t for t in inc_maps if rank(t) == sub.dim), None)
        if iota is None and inc_maps:
            iota = find_invertible_rank(inc_maps, sub.dim)
        ok = (pi is not None and iota is not None
              and is_zero_matrix(matmul(pi, iota))
              and rank(iota) + rank(pi) == p.dim)
        rep.add("hw_standard_filtration", "0 -> W_{ell-2} -> P_ell -> W_ell -> 0 exact", params,
                {"dim_P": sub.dim + top.dim, "exact": True},
                {"dim_P": p.dim, "exact": bool(ok)})
        # whether the kernel is itself a standard object of the poset {2..n}
        rep.add("hw_kernel_is_standard", "kernel W_{ell-2} is a standard object", params,
                True, l - 2 >= 2,
                note="" if l > 2 else "kernel of P_2 -> W_2 is W_0, which is simple and not standard")
    rep.notes["hw_boundary"] = ("At ell=2 the kernel of P_2 -> W_2 is W_0 (isomorphic to L_2), "
                                "not a standard object; the literal third axiom fails there.")
    return rep


def find_invertible_rank(basis: Sequence[Matrix], target: int, seed: int = 0) -> Optional[Matrix]:
    """A full-column-rank element of span(basis), by seeded small combinations."""
    import random

    rng = random.Random(seed)
    for _ in range(64):
        t = zeros(len(basis[0]), len(basis[0][0]))
        for b in basis:
            c = rng.randint(-3, 3)
            if c:
                t = [[u + c * v for u, v in zip(r1, r2)] for r1, r2 in zip(t, b)]
        if rank(t) == target:
            return t
    return None


# ---------------------------------------------------------------------------
# hom tables between projectives and standards

def hom_table_pw(n: int) -> Dict[Tuple[int, int], int]:
    return {(l, m): hom_dim(build_projective(n, l).rep, build_standard(n, m).rep)
            for l in _even_levels(n)[1:] for m in _even_levels(n)}


def hom_table_pp(n: int) -> Dict[Tuple[int, int], int]:
    levels = _even_levels(n)[1:]
    return {(l, m): hom_dim(build_projective(n, l).rep, build_projective(n, m).rep)
            for l in levels for m in levels}


def expected_pw(l: int, m: int) -> int:
    return 1 if l in (m, m + 2) else 0


def expected_pp(l: int, m: int) -> int:
    if l == m:
        return 2
    return 1 if abs(l - m) == 2 else 0


def verify_hom_tables(n: int) -> Report:
    rep = Report()
    for (l, m), d in sorted(hom_table_pw(n).items()):
        rep.add("hom_P_W", "dim hom(P_ell, W_m) = 1 iff ell in {m, m+2}", {"n": n, "ell": l, "m": m},
                expected_pw(l, m), d)
    for (l, m), d in sorted(hom_table_pp(n).items()):
        rep.add("hom_P_P", "dim hom(P_ell, P_m) = 2, 1, 0", {"n": n, "ell": l, "m": m}, expected_pp(l, m), d)
    for l in _even_levels(n)[1:]:
        p = build_projective(n, l)
        rep.add("projective_dim", "dim P_ell = dim W_{ell-2} + dim W_ell", {"n": n, "ell": l},
                standard_dim(n, l - 2) + standard_dim(n, l), p.dim)
        rep.add("projective_diagram_count", "dimension matches the one-cap diagram count", {"n": n, "ell": l},
                projective_diagram_count(n, l), p.dim)
        rep.add("tl_relations_projective", "defining relations at beta=0", {"n": n, "ell": l},
                [], tl_relation_failures(p.rep.gens, 0))
    return rep


@dataclass
class AdjacentMaps:
    """Normalized omega_ell: P_ell -> P_{ell+2} and gamma_ell: P_{ell+2} -> P_ell.

    ``gamma`` holds the raw normalized maps; ``gamma_coherent`` rescales them
    so omega_ell o gamma_ell = gamma_{ell+2} o omega_{ell+2} holds exactly,
    and ``ratios[ell]`` records the factor c in
    omega_ell o gamma_ell = c * gamma_{ell+2} o omega_{ell+2} before rescaling.
    """

    n: int
    omega: Dict[int, Matrix]
    gamma: Dict[int, Matrix]
    gamma_coherent: Dict[int, Matrix]
    ratios: Dict[int, object]


def _proportion(a: Matrix, b: Matrix):
    """c with a == c*b, or None."""
    c = None
    for ra, rb in zip(a, b):
        for u, v in zip(ra, rb):
            if v:
                if c is None:
                    c = Fraction(u) / v
                elif u != c * v:
                    return None
            elif u:
                return None
    return c


@lru_cache(maxsize=None)
def adjacent_maps(n: int) -> AdjacentMaps:
    levels = _even_levels(n)[1:]
    omega, gamma = {}, {}
    for l in levels[:-1]:
        pl, pu = build_projective(n, l).rep, build_projective(n, l + 2).rep
        up, down = hom_space(pl, pu), hom_space(pu, pl)
        if len(up) != 1 or len(down) != 1:
            raise ArithmeticError(f"hom spaces between P_{l} and P_{l + 2} are not one-dimensional")
        omega[l] = normalize_first_nonzero(up[0])
        gamma[l] = normalize_first_nonzero(down[0])
    coherent = dict(gamma)
    ratios = {}
    for l in levels[:-2]:
        lhs = matmul(omega[l], coherent[l])
        rhs_raw = matmul(gamma[l + 2], omega[l + 2])
        ratios[l] = _proportion(lhs, rhs_raw)
        c = ratios[l]
        if c is not None and c != 0:
            coherent[l + 2] = mat_scale(c, gamma[l + 2])
        # recompute the raw ratio against unrescaled gammas for reporting
        ratios[l] = _proportion(matmul(omega[l], gamma[l]), rhs_raw)
    return AdjacentMaps(n, omega, gamma, coherent, ratios)


def verify_adjacent_compositions(n: int) -> Report:
    rep = Report()
    maps = adjacent_maps(n)
    levels = _even_levels(n)[1:]
    for l in levels[:-2]:
        og = matmul(maps.omega[l], maps.gamma[l])
        go = matmul(maps.gamma[l + 2], maps.omega[l + 2])
        c = maps.ratios[l]
        rep.add("adjacent_compositions_proportional",
                "omega_ell o gamma_ell = c * gamma_{ell+2} o omega_{ell+2}, c != 0, both nonzero",
                {"n": n, "ell": l}, {"nonzero": True, "proportional": True},
                {"nonzero": not is_zero_matrix(og) and not is_zero_matrix(go), "proportional": c is not None and c != 0},
                note=f"ratio={c}")
        coherent = matmul(maps.gamma_coherent[l + 2], maps.omega[l + 2])
        rep.add("adjacent_compositions_coherent",
                "equal after rescaling gamma_{ell+2} by the ratio", {"n": n, "ell": l},
                True, mat_equal(matmul(maps.omega[l], maps.gamma_coherent[l]), coherent))
        rep.notes[f"adjacent_ratio_n{n}_ell{l}"] = str(c)
    return rep


def verify_odd_semisimple(m: int) -> Report:
    """For odd m, every Gram matrix of W_ell^m has full rank."""
    rep = Report()
    for l in range(1, m + 1, 2):
        d = standard_dim(m, l)
        rep.add("odd_gram_full_rank", "Gram matrix of W_ell^m is invertible for odd m", {"m": m, "ell": l},
                d, irreducible_dim(m, l))
    return rep
