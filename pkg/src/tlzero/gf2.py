"""Linear algebra over GF(2) with vectors packed into Python ints (bit j = coordinate j)."""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional


class GF2Echelon:
    """Echelon basis keyed by leading (highest) bit."""

    def __init__(self):
        self.rows: Dict[int, int] = {}

    def __len__(self):
        return len(self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: int) -> int:
        rows = self.rows
        while v:
            lead = v.bit_length() - 1
            r = rows.get(lead)
            if r is None:
                # reduce the lower bits too so the normal form is canonical
                rest = v ^ (1 << lead)
                return (1 << lead) | self.reduce(rest) if rest else v
            v ^= r
        return 0

    def add(self, v: int) -> bool:
        rows = self.rows
        while v:
            lead = v.bit_length() - 1
            r = rows.get(lead)
            if r is None:
                rows[lead] = v
                return True
            v ^= r
        return False

    def contains(self, v: int) -> bool:
        rows = self.rows
        while v:
            r = rows.get(v.bit_length() - 1)
            if r is None:
                return False
            v ^= r
        return True


def rank(vectors: Iterable[int]) -> int:
    e = GF2Echelon()
    for v in vectors:
        e.add(v)
    return e.dim


def same_span(u: Iterable[int], v: Iterable[int]) -> bool:
    u, v = list(u), list(v)
    ru, rv = rank(u), rank(v)
    return ru == rv == rank(u + v)


def kernel_dim(images: List[int]) -> int:
    """Dimension of the kernel of the map sending basis vector j to images[j]."""
    return len(images) - rank(images)


def apply_map(images: List[int], v: int) -> int:
    """Image of the source vector ``v`` (bit j = coefficient of basis vector j)."""
    out = 0
    j = 0
    while v:
        if v & 1:
            out ^= images[j]
        v >>= 1
        j += 1
    return out


def coordinates(basis: List[int], v: int) -> Optional[int]:
    """Express ``v`` over an independent list ``basis``; bit j is the coefficient of basis[j]."""
    rows: Dict[int, tuple] = {}
    for j, b in enumerate(basis):
        tag = 1 << j
        while b:
            lead = b.bit_length() - 1
            if lead not in rows:
                rows[lead] = (b, tag)
                break
            rb, rt = rows[lead]
            b ^= rb
            tag ^= rt
        else:
            raise ValueError("basis vectors are dependent")
    tag = 0
    while v:
        lead = v.bit_length() - 1
        if lead not in rows:
            return None
        rb, rt = rows[lead]
        v ^= rb
        tag ^= rt
    return tag
