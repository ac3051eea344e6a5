"""GF(2) linear algebra on int bitsets.

A row's pivot is its lowest set bit.  :class:`Echelon` keeps rows with
distinct pivots, which is enough for membership tests; :func:`rref` produces
the canonical fully reduced form (rows sorted by ascending pivot).
"""

from __future__ import annotations

from typing import Iterable


def lowest_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


class Echelon:
    """Incrementally maintained semi-echelon basis."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[int] = ()) -> None:
        self.rows: dict[int, int] = {}
        for r in rows:
            self.add(r)

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, x: int) -> int:
        rows = self.rows
        while x:
            p = lowest_bit(x)
            r = rows.get(p)
            if r is None:
                return x
            x ^= r
        return 0

    def add(self, x: int) -> int:
        """Insert ``x``; return the reduced residue (0 if it was already in the span)."""
        x = self.reduce(x)
        if x:
            self.rows[lowest_bit(x)] = x
        return x

    def __contains__(self, x: int) -> bool:
        return self.reduce(x) == 0

    def basis(self) -> tuple[int, ...]:
        return rref(self.rows.values())


def rref(rows: Iterable[int]) -> tuple[int, ...]:
    """Canonical reduced row echelon form, rows sorted by pivot."""
    piv: dict[int, int] = {}
    for r in rows:
        while r:
            p = lowest_bit(r)
            if p in piv:
                r ^= piv[p]
            else:
                piv[p] = r
                break
    order = sorted(piv)
    # clear every pivot column from the other rows, highest pivot first
    for i in range(len(order) - 1, -1, -1):
        p = order[i]
        row = piv[p]
        for q in order[:i]:
            if (piv[q] >> p) & 1:
                piv[q] ^= row
    return tuple(piv[p] for p in order)


def rank(rows: Iterable[int]) -> int:
    return len(Echelon(rows))


def kernel(images: list[int]) -> list[int]:
    """Basis of {c : XOR of images[t] over set bits t of c is 0}."""
    piv: dict[int, tuple[int, int]] = {}
    out = []
    for t, img in enumerate(images):
        combo = 1 << t
        while img:
            p = lowest_bit(img)
            hit = piv.get(p)
            if hit is None:
                piv[p] = (img, combo)
                break
            img ^= hit[0]
            combo ^= hit[1]
        else:
            out.append(combo)
    return out


def span(rows: Iterable[int]) -> list[int]:
    """All vectors of the span (small spans only)."""
    words = [0]
    for r in rref(rows):
        words += [w ^ r for w in words]
    return words
