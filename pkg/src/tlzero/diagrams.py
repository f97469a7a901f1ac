"""Planar (Temperley-Lieb) string diagrams.

A diagram has ``n_top`` points on the top row and ``n_bottom`` on the bottom
row.  Endpoints are encoded as integers: top point ``i`` (1-based) is ``i-1``
and bottom point ``j`` is ``n_top + j - 1``.  The diagram is stored as the
partner array of this encoding, which is canonical, so structural equality is
diagram equality.  Basis orders use :attr:`PlanarDiagram.pairs`, the sorted
list of encoded pairs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, List, Sequence, Tuple


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class PlanarDiagram:
    n_top: int
    n_bottom: int
    partner: Tuple[int, ...]

    def __post_init__(self):
        n = self.n_top + self.n_bottom
        if len(self.partner) != n:
            raise DiagramError("partner array has the wrong length")
        if n % 2:
            raise DiagramError("n_top + n_bottom must be even")
        for a, b in enumerate(self.partner):
            if not 0 <= b < n or b == a or self.partner[b] != a:
                raise DiagramError(f"not a perfect matching at endpoint {a}")
        if not _is_planar(self.n_top, self.n_bottom, self.partner):
            raise DiagramError("matching is not planar")

    # -- construction -----------------------------------------------------
    @classmethod
    def from_pairs(cls, n_top: int, n_bottom: int, pairs: Iterable[Tuple]) -> "PlanarDiagram":
        """Build from endpoint pairs.

        Each endpoint is either an encoded int or a tuple ``('t', i)`` /
        ``('b', j)`` with 1-based index.  The pair order is irrelevant.
        """
        partner = [-1] * (n_top + n_bottom)
        for p, q in pairs:
            a, b = _endpoint(p, n_top, n_bottom), _endpoint(q, n_top, n_bottom)
            if partner[a] != -1 or partner[b] != -1:
                raise DiagramError("endpoint used twice")
            partner[a], partner[b] = b, a
        if -1 in partner:
            raise DiagramError("endpoint left unmatched")
        return cls(n_top, n_bottom, tuple(partner))

    @classmethod
    def identity(cls, n: int) -> "PlanarDiagram":
        return cls(n, n, tuple(list(range(n, 2 * n)) + list(range(n))))

    @classmethod
    def from_top_matching(cls, n: int, cups: Iterable[Tuple[int, int]], n_bottom: int) -> "PlanarDiagram":
        """Monic diagram from its top cups (1-based); remaining top points go down in order."""
        partner = [-1] * (n + n_bottom)
        for i, j in cups:
            partner[i - 1], partner[j - 1] = j - 1, i - 1
        free = [k for k in range(n) if partner[k] == -1]
        if len(free) != n_bottom:
            raise DiagramError("wrong number of throughlines")
        for b, t in enumerate(free):
            partner[t], partner[n + b] = n + b, t
        return cls(n, n_bottom, tuple(partner))

    # -- views ------------------------------------------------------------
    @property
    def pairs(self) -> Tuple[Tuple[int, int], ...]:
        return tuple((a, b) for a, b in enumerate(self.partner) if a < b)

    def sort_key(self):
        return self.pairs

    def is_top(self, e: int) -> bool:
        return e < self.n_top

    def cups(self) -> List[Tuple[int, int]]:
        """Top-top pairs as 1-based (i, j), i < j."""
        return [(a + 1, b + 1) for a, b in self.pairs if b < self.n_top]

    def caps(self) -> List[Tuple[int, int]]:
        t = self.n_top
        return [(a - t + 1, b - t + 1) for a, b in self.pairs if a >= t]

    def throughlines(self) -> List[Tuple[int, int]]:
        """(top index, bottom index), 1-based, left to right."""
        t = self.n_top
        return [(a + 1, b - t + 1) for a, b in self.pairs if a < t <= b]

    def n_cups(self) -> int:
        return sum(1 for a, b in self.pairs if b < self.n_top)

    def n_caps(self) -> int:
        return sum(1 for a, b in self.pairs if a >= self.n_top)

    def n_throughlines(self) -> int:
        t = self.n_top
        return sum(1 for a, b in self.pairs if a < t <= b)

    def is_monic(self) -> bool:
        return all(a < self.n_top for a, b in self.pairs)

    def kind(self, pair: Tuple[int, int]) -> str:
        a, b = sorted(pair)
        if b < self.n_top:
            return "cup"
        if a >= self.n_top:
            return "cap"
        return "throughline"

    # -- text form --------------------------------------------------------
    def _fmt_endpoint(self, e: int) -> str:
        return f"t{e + 1}" if e < self.n_top else f"b{e - self.n_top + 1}"

    def __str__(self) -> str:
        body = ",".join(f"{self._fmt_endpoint(a)}-{self._fmt_endpoint(b)}" for a, b in self.pairs)
        return f"{self.n_top}:{self.n_bottom}:[{body}]"

    @classmethod
    def parse(cls, text: str) -> "PlanarDiagram":
        m = re.fullmatch(r"\s*(\d+):(\d+):\[(.*)\]\s*", text)
        if not m:
            raise DiagramError(f"cannot parse diagram {text!r}")
        nt, nb, body = int(m.group(1)), int(m.group(2)), m.group(3).strip()
        pairs = []
        if body:
            for tok in body.split(","):
                p, q = tok.strip().split("-")
                pairs.append((_parse_endpoint(p), _parse_endpoint(q)))
        return cls.from_pairs(nt, nb, pairs)

    def draw(self) -> str:
        return render_ascii(self)


def _unchecked(n_top: int, n_bottom: int, partner: Tuple[int, ...]) -> PlanarDiagram:
    # for results of operations that preserve planarity by construction
    d = object.__new__(PlanarDiagram)
    object.__setattr__(d, "n_top", n_top)
    object.__setattr__(d, "n_bottom", n_bottom)
    object.__setattr__(d, "partner", partner)
    return d


def _parse_endpoint(tok: str) -> Tuple[str, int]:
    tok = tok.strip()
    if not tok or tok[0] not in "tb":
        raise DiagramError(f"bad endpoint {tok!r}")
    return tok[0], int(tok[1:])


def _endpoint(e, n_top: int, n_bottom: int) -> int:
    if isinstance(e, int):
        if not 0 <= e < n_top + n_bottom:
            raise DiagramError(f"endpoint {e} out of range")
        return e
    row, i = e
    if row == "t":
        if not 1 <= i <= n_top:
            raise DiagramError(f"top endpoint {i} out of range")
        return i - 1
    if row == "b":
        if not 1 <= i <= n_bottom:
            raise DiagramError(f"bottom endpoint {i} out of range")
        return n_top + i - 1
    raise DiagramError(f"bad endpoint {e!r}")


def boundary_walk(n_top: int, n_bottom: int) -> List[int]:
    """Top 1..n left to right, then bottom right to left."""
    return list(range(n_top)) + list(range(n_top + n_bottom - 1, n_top - 1, -1))


def _is_planar(n_top: int, n_bottom: int, partner: Sequence[int]) -> bool:
    pos = {e: k for k, e in enumerate(boundary_walk(n_top, n_bottom))}
    stack: List[int] = []
    for e in boundary_walk(n_top, n_bottom):
        f = partner[e]
        if pos[f] > pos[e]:
            stack.append(e)
        else:
            if not stack or stack[-1] != f:
                return False
            stack.pop()
    return not stack


# ---------------------------------------------------------------------------
# operations

def generator_diagram(n: int, i: int) -> PlanarDiagram:
    """e_i in TL_n: cup on top points i,i+1, cap on bottom points i,i+1."""
    if not 1 <= i <= n - 1:
        raise DiagramError(f"generator index {i} out of range for n={n}")
    pairs = [(("t", i), ("t", i + 1)), (("b", i), ("b", i + 1))]
    pairs += [(("t", k), ("b", k)) for k in range(1, n + 1) if k not in (i, i + 1)]
    return PlanarDiagram.from_pairs(n, n, pairs)


def compose(upper: PlanarDiagram, lower: PlanarDiagram) -> Tuple[int, PlanarDiagram]:
    """Stack ``upper`` on top of ``lower``; returns (closed loops removed, result)."""
    n, m = upper.n_top, upper.n_bottom
    if lower.n_top != m:
        raise DiagramError(f"cannot glue {m} bottom points to {lower.n_top} top points")
    k = lower.n_bottom
    up, lo = upper.partner, lower.partner
    out = [-1] * (n + k)
    seen_mid = [False] * m

    # Walk from every outer endpoint.  State: (in_upper, endpoint code).
    for start in range(n + k):
        if out[start] != -1:
            continue
        if start < n:
            in_upper, e = True, start
        else:
            in_upper, e = False, m + (start - n)
        while True:
            if in_upper:
                f = up[e]
                if f < n:
                    end = f
                    break
                j = f - n
                seen_mid[j] = True
                in_upper, e = False, j
            else:
                f = lo[e]
                if f >= m:
                    end = n + (f - m)
                    break
                seen_mid[f] = True
                in_upper, e = True, n + f
        out[start], out[end] = end, start

    loops = 0
    for j in range(m):
        if seen_mid[j]:
            continue
        loops += 1
        # trace the closed component through middle points
        e, in_upper = n + j, True
        while True:
            if in_upper:
                f = up[e] - n
                seen_mid[f] = True
                e, in_upper = f, False
            else:
                f = lo[e]
                seen_mid[f] = True
                if f == j:
                    break
                e, in_upper = n + f, True
    return loops, _unchecked(n, k, tuple(out))


def reflect(x: PlanarDiagram) -> PlanarDiagram:
    """Swap the top and bottom rows (mirror in a horizontal line)."""
    t, b = x.n_top, x.n_bottom

    def swap(e: int) -> int:
        return e + b if e < t else e - t

    partner = [0] * (t + b)
    for e, f in enumerate(x.partner):
        partner[swap(e)] = swap(f)
    return _unchecked(b, t, tuple(partner))


def delta_diagram(ell: int, i: int) -> PlanarDiagram:
    """The (ell+2, ell) diagram joining top points i+1, i+2 by a cup; others go straight down."""
    if i < 0 or i > ell or ell < 0:
        raise DiagramError(f"cup offset {i} out of range for ell={ell}")
    pairs = [(("t", i + 1), ("t", i + 2))]
    b = 1
    for k in range(1, ell + 3):
        if k in (i + 1, i + 2):
            continue
        pairs.append((("t", k), ("b", b)))
        b += 1
    return PlanarDiagram.from_pairs(ell + 2, ell, pairs)


def insert_cup(x: PlanarDiagram, i: int) -> PlanarDiagram:
    """Join the (i+1)th and (i+2)th bottom points of ``x``.

    Raises if a closed loop would be formed (possible only when ``x`` has a
    cap in that position); use :func:`compose` with :func:`delta_diagram` to
    see the loop count instead.
    """
    ell = x.n_bottom - 2
    if ell < 0 or not 0 <= i <= ell:
        raise DiagramError(f"cup offset {i} out of range for {x.n_bottom} bottom points")
    loops, y = compose(x, delta_diagram(ell, i))
    if loops:
        raise DiagramError("inserting the cup closes a loop")
    return y


def append_throughline(x: PlanarDiagram) -> PlanarDiagram:
    """Add a vertical strand at the right end of both rows."""
    t, b = x.n_top, x.n_bottom
    pairs = []
    for a, c in x.pairs:
        pairs.append((a if a < t else a + 1, c if c < t else c + 1))
    pairs.append((t, t + 1 + b))
    return PlanarDiagram.from_pairs(t + 1, b + 1, pairs)


# ---------------------------------------------------------------------------
# enumeration

def _noncrossing_matchings(points: int) -> Iterator[List[Tuple[int, int]]]:
    """All non-crossing perfect matchings of 0..points-1 on a line."""
    if points == 0:
        yield []
        return
    for j in range(1, points, 2):
        for inner in _noncrossing_matchings(j - 1):
            inner_s = [(a + 1, b + 1) for a, b in inner]
            for outer in _noncrossing_matchings(points - j - 1):
                yield [(0, j)] + inner_s + [(a + j + 1, b + j + 1) for a, b in outer]


@lru_cache(maxsize=None)
def enumerate_tl_basis(n: int) -> Tuple[PlanarDiagram, ...]:
    """All (n, n) planar diagrams, Catalan(n) of them, sorted by pair list."""
    if n < 1:
        raise DiagramError("n must be positive")
    walk = boundary_walk(n, n)
    out = []
    for m in _noncrossing_matchings(2 * n):
        pairs = [(walk[a], walk[b]) for a, b in m]
        out.append(PlanarDiagram.from_pairs(n, n, pairs))
    out.sort(key=PlanarDiagram.sort_key)
    return tuple(out)


def _monic_partners(n: int, ell: int) -> Iterator[List[int]]:
    """Top rows of monic (n, ell) diagrams: cups nest, free points never under a cup."""
    # depth-first over positions; stack holds open cups, free points need empty stack
    partner = [-1] * n

    def rec(pos: int, stack: List[int], free: int):
        if pos == n:
            if not stack and free == ell:
                yield list(partner)
            return
        remaining = n - pos
        if len(stack) > remaining:
            return
        # free point (throughline)
        if not stack and free < ell:
            partner[pos] = -2
            yield from rec(pos + 1, stack, free + 1)
        # open cup
        stack.append(pos)
        yield from rec(pos + 1, stack, free)
        stack.pop()
        # close cup
        if stack:
            o = stack.pop()
            partner[o], partner[pos] = pos, o
            yield from rec(pos + 1, stack, free)
            partner[o] = partner[pos] = -1
            stack.append(o)
        partner[pos] = -1

    yield from rec(0, [], 0)


@lru_cache(maxsize=None)
def enumerate_monic_basis(n: int, ell: int) -> Tuple[PlanarDiagram, ...]:
    """All (n, ell) diagrams without caps, sorted by pair list."""
    if ell < 0 or ell > n or (n - ell) % 2:
        raise DiagramError(f"need 0 <= ell <= n with ell = n mod 2, got n={n}, ell={ell}")
    out = []
    for top in _monic_partners(n, ell):
        cups = [(a + 1, b + 1) for a, b in enumerate(top) if b >= 0 and a < b]
        out.append(PlanarDiagram.from_top_matching(n, cups, ell))
    out.sort(key=PlanarDiagram.sort_key)
    return tuple(out)


def all_diagrams(n_top: int, n_bottom: int) -> Tuple[PlanarDiagram, ...]:
    """Every planar (n_top, n_bottom) diagram."""
    if (n_top + n_bottom) % 2:
        raise DiagramError("n_top + n_bottom must be even")
    walk = boundary_walk(n_top, n_bottom)
    out = [PlanarDiagram.from_pairs(n_top, n_bottom, [(walk[a], walk[b]) for a, b in m])
           for m in _noncrossing_matchings(n_top + n_bottom)]
    out.sort(key=PlanarDiagram.sort_key)
    return tuple(out)


def catalan(n: int) -> int:
    from math import comb
    return comb(2 * n, n) // (n + 1)


def standard_dim(n: int, ell: int) -> int:
    """C(n, (n-ell)/2) - C(n, (n-ell)/2 - 1); zero outside the valid range."""
    from math import comb
    if ell < 0 or ell > n or (n - ell) % 2:
        return 0
    k = (n - ell) // 2
    return comb(n, k) - (comb(n, k - 1) if k >= 1 else 0)


# ---------------------------------------------------------------------------
# ASCII rendering

def render_ascii(x: PlanarDiagram) -> str:
    """Rough picture: cups hang from the top row, caps rise from the bottom row.

    Nested arcs sit at deeper levels.  Throughlines are ``|`` when vertical,
    otherwise a slash pointing towards their bottom endpoint.
    """
    width = max(x.n_top, x.n_bottom, 1)

    def col(i: int) -> int:
        return 3 * i + 1

    w = col(width - 1) + 2

    def arc_rows(arcs: List[Tuple[int, int]]) -> List[List[str]]:
        depth = {}
        for a, b in sorted(arcs, key=lambda p: p[1] - p[0]):
            inside = [d for p, d in depth.items() if a < p[0] and p[1] < b]
            depth[(a, b)] = 1 + max(inside, default=0)
        rows = [[" "] * w for _ in range(max(depth.values(), default=0))]
        for (a, b), d in depth.items():
            r = rows[d - 1]
            r[col(a - 1)] = "\\"
            r[col(b - 1)] = "/"
            for c in range(col(a - 1) + 1, col(b - 1)):
                r[c] = "_"
            for above in rows[:d - 1]:
                above[col(a - 1)] = "|"
                above[col(b - 1)] = "|"
        return rows

    tl = x.throughlines()
    lines = ["".join(f"{i + 1:<3}" for i in range(x.n_top)).rstrip()]
    for r in arc_rows(x.cups()):
        for t, _ in tl:
            r[col(t - 1)] = "|"
        lines.append("".join(r).rstrip())
    mid = [" "] * w
    for t, b in tl:
        mid[col(t - 1)] = "|" if t == b else ("\\" if t < b else "/")
    lines.append("".join(mid).rstrip())
    for r in reversed(arc_rows(x.caps())):
        r = ["/" if ch == "\\" else "\\" if ch == "/" else ("-" if ch == "_" else ch) for ch in r]
        for _, b in tl:
            r[col(b - 1)] = "|"
        lines.append("".join(r).rstrip())
    lines.append("".join(f"{i + 1:<3}" for i in range(x.n_bottom)).rstrip())
    return "\n".join(lines)
