"""Two-row Specht modules over GF(2) inside F_2[z_1..z_n]/(z_i^2).

A monomial is a bitmask (bit i-1 stands for z_i); a polynomial is a frozenset
of monomials, so addition is symmetric difference.  For rank computations a
polynomial is packed into an int with bit ``mask`` set for each monomial.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from . import gf2
from .diagrams import PlanarDiagram, enumerate_monic_basis, standard_dim
from .report import Report


@dataclass(frozen=True)
class MultilinearPoly:
    n: int
    monomials: FrozenSet[int] = frozenset()

    @classmethod
    def one(cls, n: int) -> "MultilinearPoly":
        return cls(n, frozenset([0]))

    @classmethod
    def variable(cls, n: int, i: int) -> "MultilinearPoly":
        return cls(n, frozenset([1 << (i - 1)]))

    @classmethod
    def binomial(cls, n: int, i: int, j: int) -> "MultilinearPoly":
        """z_i + z_j (which is z_i - z_j over GF(2))."""
        return cls(n, frozenset([1 << (i - 1)]) ^ frozenset([1 << (j - 1)]))

    def __add__(self, other: "MultilinearPoly") -> "MultilinearPoly":
        return MultilinearPoly(max(self.n, other.n), self.monomials ^ other.monomials)

    __sub__ = __add__

    def __mul__(self, other: "MultilinearPoly") -> "MultilinearPoly":
        acc: set = set()
        for a in self.monomials:
            for b in other.monomials:
                if a & b:
                    continue  # a square appears
                acc ^= {a | b}
        return MultilinearPoly(max(self.n, other.n), frozenset(acc))

    def is_zero(self) -> bool:
        return not self.monomials

    def degrees(self) -> set:
        return {bin(m).count("1") for m in self.monomials}

    def pack(self) -> int:
        v = 0
        for m in self.monomials:
            v |= 1 << m
        return v

    @classmethod
    def unpack(cls, n: int, v: int) -> "MultilinearPoly":
        out = []
        while v:
            m = v.bit_length() - 1
            out.append(m)
            v ^= 1 << m
        return cls(n, frozenset(out))

    def permute(self, sigma: Sequence[int]) -> "MultilinearPoly":
        """Apply z_i -> z_{sigma[i-1]}."""
        out = set()
        for m in self.monomials:
            w = 0
            for i in range(self.n):
                if m >> i & 1:
                    w |= 1 << (sigma[i] - 1)
            out.add(w)
        return MultilinearPoly(self.n, frozenset(out))

    @staticmethod
    def _factors(m: int) -> Tuple[int, ...]:
        return tuple(i + 1 for i in range(m.bit_length()) if m >> i & 1)

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        terms = sorted(self._factors(m) for m in self.monomials)
        return " + ".join("*".join(f"z{i}" for i in t) if t else "1" for t in terms)

    @classmethod
    def parse(cls, n: int, text: str) -> "MultilinearPoly":
        text = text.strip()
        if text == "0":
            return cls(n)
        acc: set = set()
        for term in text.split("+"):
            term = term.strip()
            m = 0
            if term != "1":
                for f in term.split("*"):
                    i = int(f.strip()[1:])
                    if m >> (i - 1) & 1:
                        raise ValueError(f"squared variable in {term!r}")
                    m |= 1 << (i - 1)
            acc ^= {m}
        return cls(n, frozenset(acc))


@dataclass(frozen=True)
class TwoRowTableau:
    top: Tuple[int, ...]
    bottom: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.top) + len(self.bottom)
        if len(self.bottom) > len(self.top):
            raise ValueError("bottom row longer than top row")
        if sorted(self.top + self.bottom) != list(range(1, n + 1)):
            raise ValueError("labels must be a permutation of 1..n")

    @property
    def n(self) -> int:
        return len(self.top) + len(self.bottom)

    @property
    def k(self) -> int:
        return len(self.bottom)

    def column_pairs(self) -> List[Tuple[int, int]]:
        return [(u, v) for u, v in zip(self.top, self.bottom)]


def pairs_polynomial(n: int, pairs: Iterable[Tuple[int, int]]) -> MultilinearPoly:
    p = MultilinearPoly.one(n)
    for i, j in pairs:
        p = p * MultilinearPoly.binomial(n, i, j)
    return p


def tableau_polynomial(t: TwoRowTableau) -> MultilinearPoly:
    return pairs_polynomial(t.n, t.column_pairs())


def G_map(x: PlanarDiagram) -> MultilinearPoly:
    """Product of z_i + z_j over the cups (i, j) of a monic diagram."""
    if not x.is_monic():
        raise ValueError("G is defined on monic diagrams")
    return pairs_polynomial(x.n_top, x.cups())


def psi(p: MultilinearPoly) -> MultilinearPoly:
    """Multiplication by z_1 + ... + z_n."""
    acc: set = set()
    for m in p.monomials:
        for i in range(p.n):
            if not m >> i & 1:
                acc ^= {m | 1 << i}
    return MultilinearPoly(p.n, frozenset(acc))


# ---------------------------------------------------------------------------
# spanning sets


def partial_matchings(n: int, k: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
    """All sets of k disjoint pairs from 1..n, pairs and pair lists sorted."""
    def rec(avail: Tuple[int, ...], need: int):
        if need == 0:
            yield ()
            return
        if len(avail) < 2 * need:
            return
        first, rest = avail[0], avail[1:]
        # first point unused
        yield from rec(rest, need)
        for idx, j in enumerate(rest):
            remaining = rest[:idx] + rest[idx + 1:]
            for tail in rec(remaining, need - 1):
                yield ((first, j),) + tail
    yield from rec(tuple(range(1, n + 1)), k)


def tableau_from_pairs(n: int, pairs: Sequence[Tuple[int, int]]) -> TwoRowTableau:
    used = {a for p in pairs for a in p}
    top = tuple(p[0] for p in pairs) + tuple(i for i in range(1, n + 1) if i not in used)
    return TwoRowTableau(top, tuple(p[1] for p in pairs))


@lru_cache(maxsize=None)
def t_space(n: int, k: int) -> Tuple[int, ...]:
    """Echelon rows (packed) spanning T^(n-k, k), from every tableau polynomial.

    Tableau polynomials only depend on the unordered column pairs, so one
    polynomial per partial matching covers every tableau.
    """
    e = gf2.GF2Echelon()
    for pairs in partial_matchings(n, k):
        e.add(pairs_polynomial(n, pairs).pack())
    return tuple(e.rows[k_] for k_ in sorted(e.rows))


def g_images(n: int, k: int) -> List[int]:
    return [G_map(x).pack() for x in enumerate_monic_basis(n, n - 2 * k)]


# ---------------------------------------------------------------------------
# crossing resolution

Chords = Tuple[Tuple[int, int], ...]


def _chords_cross(p: Tuple[int, int], q: Tuple[int, int]) -> bool:
    (a, b), (c, d) = sorted([p, q])
    return a < c < b < d


def chord_crossings(chords: Chords) -> List[Tuple[Tuple[int, int], Tuple[int, int]]]:
    cs = sorted(chords)
    return [(p, q) for i, p in enumerate(cs) for q in cs[i + 1:] if _chords_cross(p, q)]


def through_crossings(n: int, chords: Chords) -> List[Tuple[Tuple[int, int], int]]:
    used = {a for p in chords for a in p}
    free = [c for c in range(1, n + 1) if c not in used]
    return [((a, b), c) for a, b in sorted(chords) for c in free if a < c < b]


def crossing_count(n: int, chords: Chords) -> int:
    return len(chord_crossings(chords)) + len(through_crossings(n, chords))


def _canon(chords: Iterable[Tuple[int, int]]) -> Chords:
    return tuple(sorted(tuple(sorted(p)) for p in chords))


def resolve_step(n: int, chords: Chords) -> Optional[Tuple[Chords, Chords]]:
    """One rewrite of the smallest crossing; None if the diagram is already planar.

    Chord crossings go first: (c1,c3)(c2,c4) -> (c1,c2)(c3,c4) + (c1,c4)(c2,c3).
    Otherwise a cup (c1,c3) over a free point c2 -> (c1,c2) + (c2,c3).
    """
    cc = chord_crossings(chords)
    if cc:
        (a, b), (c, d) = cc[0]  # a < c < b < d
        rest = [p for p in chords if p not in ((a, b), (c, d))]
        return _canon(rest + [(a, c), (b, d)]), _canon(rest + [(a, d), (c, b)])
    tc = through_crossings(n, chords)
    if tc:
        (a, b), c = tc[0]
        rest = [p for p in chords if p != (a, b)]
        return _canon(rest + [(a, c)]), _canon(rest + [(c, b)])
    return None


@dataclass
class Resolution:
    diagrams: List[PlanarDiagram]
    steps: int
    trace: List[Tuple[Chords, Chords, Chords]]


def resolve_chords(n: int, chords: Chords, keep_trace: bool = False) -> Resolution:
    """Rewrite a chord set into planar diagrams whose G-images sum to its polynomial (GF(2))."""
    pool: Dict[Chords, int] = {_canon(chords): 1}
    done: Dict[Chords, int] = {}
    steps = 0
    trace = []
    while pool:
        cur = min(pool)
        del pool[cur]
        res = resolve_step(n, cur)
        if res is None:
            done[cur] = done.get(cur, 0) ^ 1
            continue
        before = crossing_count(n, cur)
        for child in res:
            if crossing_count(n, child) >= before:
                raise AssertionError(f"resolution did not reduce crossings: {cur} -> {child}")
            pool[child] = pool.get(child, 0) ^ 1
            if not pool[child]:
                del pool[child]
        steps += 1
        if keep_trace:
            trace.append((cur, res[0], res[1]))
    k = len(chords)
    out = [PlanarDiagram.from_top_matching(n, list(c), n - 2 * k) for c, v in sorted(done.items()) if v]
    return Resolution(out, steps, trace)


def resolve_to_noncrossing(t: TwoRowTableau, keep_trace: bool = False) -> Resolution:
    return resolve_chords(t.n, _canon(t.column_pairs()), keep_trace)


# ---------------------------------------------------------------------------
# verification


def verify_G_bijection(n: int) -> Report:
    rep = Report()
    for k in range(0, n // 2 + 1):
        imgs = g_images(n, k)
        t = list(t_space(n, k))
        params = {"n": n, "k": k}
        rep.add("G_rank", "rank of G on the monic basis = dim W", params, standard_dim(n, n - 2 * k), gf2.rank(imgs))
        rep.add("G_onto_T", "G spans T^(n-k,k)", params, True, gf2.same_span(imgs, t))
    return rep


def verify_commuting_square(n: int, k: int) -> Report:
    """G o phi = psi o G on the basis of W_{n-2k+2}^n, over GF(2)."""
    from .standard import phi_expand

    if n % 2 or not 1 <= k <= n // 2:
        raise ValueError("need n even and 1 <= k <= n/2")
    rep = Report()
    bad = None
    for x in enumerate_monic_basis(n, n - 2 * k + 2):
        lhs = MultilinearPoly(n)
        for c, y in phi_expand(x):
            if c % 2:
                lhs = lhs + G_map(y)
        rhs = psi(G_map(x))
        if lhs != rhs:
            bad = str(x)
            break
    rep.add("commuting_square", "G o phi = psi o G over GF(2)", {"n": n, "k": k}, None, bad,
            note="computed is the first failing basis diagram")
    return rep


def verify_specht_exactness(n: int) -> Report:
    if n % 2:
        raise ValueError("n must be even")
    rep = Report()
    m = n // 2
    dims = {}
    psi_images = {}
    for k in range(0, m + 1):
        t = list(t_space(n, k))
        dims[k] = len(t)
        rep.add("T_dimension", "dim T^(n-k,k) = dim W_{n-2k}^n", {"n": n, "k": k}, standard_dim(n, n - 2 * k), len(t))
        if k < m:
            imgs = [psi(MultilinearPoly.unpack(n, v)).pack() for v in t]
            psi_images[k] = imgs
    for k in range(0, m):
        target = gf2.GF2Echelon()
        for v in t_space(n, k + 1):
            target.add(v)
        inside = all(target.contains(v) for v in psi_images[k])
        rep.add("psi_lands_in_T", "psi maps T^(n-k,k) into T^(n-k-1,k+1)", {"n": n, "k": k}, True, inside)
    ranks = {k: gf2.rank(psi_images[k]) for k in psi_images}
    for k in range(1, m):
        zero = all(psi(MultilinearPoly.unpack(n, v)).is_zero() for v in psi_images[k - 1])
        rep.add("psi_squared_zero", "psi o psi = 0", {"n": n, "k": k}, True, zero)
        rep.add("T_exact_at", "ker = im at T^(n-k,k)", {"n": n, "k": k},
                dims[k] - ranks[k], ranks[k - 1])
    rep.add("T_injective_start", "psi injective on T^(n)", {"n": n}, dims[0], ranks[0])
    rep.add("T_surjective_end", "psi onto T^(n/2,n/2)", {"n": n}, dims[m], ranks[m - 1])
    rep.add("T_euler", "alternating sum of dims", {"n": n}, 0, sum((-1) ** k * dims[k] for k in dims))
    return rep


def random_tableau(n: int, k: int, rng: random.Random) -> TwoRowTableau:
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    return TwoRowTableau(tuple(labels[:n - k]), tuple(labels[n - k:]))


def verify_resolution(n: int, samples: int = 20, seed: int = 0) -> Report:
    rep = Report()
    rng = random.Random(seed)
    for s in range(samples):
        k = rng.randint(0, n // 2)
        t = random_tableau(n, k, rng)
        res = resolve_to_noncrossing(t)
        total = MultilinearPoly(n)
        for x in res.diagrams:
            total = total + G_map(x)
        rep.add("resolution_sums_to_F", "sum of G over the resolution = F_t",
                {"n": n, "top": list(t.top), "bottom": list(t.bottom)}, str(tableau_polynomial(t)), str(total))
    return rep
