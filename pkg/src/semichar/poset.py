"""Finite posets, Möbius functions and Möbius inversion.

Elements are arbitrary hashable ids.  Internally every element gets a dense
index and the order is stored as one bitmask per element (bit ``j`` of
``_down[i]`` is set iff ``j <= i``).
"""

from __future__ import annotations

import threading
from itertools import product
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import InputError


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """A validated finite partial order.

    Use :func:`build_poset` for generator-style input; the constructor takes a
    complete list of ``down`` bitmasks and only validates it.
    """

    def __init__(self, elements: Sequence[Hashable], down: Sequence[int]):
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise InputError("poset element ids must be distinct")
        self.index = {x: i for i, x in enumerate(self.elements)}
        n = len(self.elements)
        self._down = tuple(down)
        up = [0] * n
        for i, mask in enumerate(self._down):
            if not (mask >> i) & 1:
                raise InputError(f"relation is not reflexive at {self.elements[i]!r}")
            for j in _bits(mask):
                up[j] |= 1 << i
        self._up = tuple(up)
        for i in range(n):
            for j in _bits(self._down[i]):
                if j != i and (self._down[j] >> i) & 1:
                    raise InputError(
                        f"cycle: {self.elements[i]!r} and {self.elements[j]!r} "
                        "are mutually comparable"
                    )
                if self._down[j] & ~self._down[i]:
                    raise InputError("relation is not transitive")
        self._mobius = None
        self._lock = threading.Lock()

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"Poset({len(self)} elements)"

    def leq(self, x, y) -> bool:
        return bool((self._down[self.index[y]] >> self.index[x]) & 1)

    def lt(self, x, y) -> bool:
        return x != y and self.leq(x, y)

    def down(self, x) -> list:
        """Principal order ideal of ``x``, in element order."""
        return [self.elements[j] for j in _bits(self._down[self.index[x]])]

    def up(self, x) -> list:
        return [self.elements[j] for j in _bits(self._up[self.index[x]])]

    def interval(self, x, y) -> list:
        i, j = self.index[x], self.index[y]
        return [self.elements[k] for k in _bits(self._up[i] & self._down[j])]

    def leq_pairs(self) -> set:
        return {
            (self.elements[j], self.elements[i])
            for i, mask in enumerate(self._down)
            for j in _bits(mask)
        }

    def minimal(self) -> list:
        return [x for i, x in enumerate(self.elements) if self._down[i] == 1 << i]

    def maximal(self) -> list:
        return [x for i, x in enumerate(self.elements) if self._up[i] == 1 << i]

    def mobius(self) -> "MobiusTable":
        with self._lock:
            if self._mobius is None:
                self._mobius = MobiusTable(self)
            return self._mobius

    def subposet(self, ids: Iterable[Hashable]) -> "Poset":
        ids = list(ids)
        keep = 0
        for x in ids:
            keep |= 1 << self.index[x]
        remap = {self.index[x]: k for k, x in enumerate(ids)}
        down = []
        for x in ids:
            m = 0
            for j in _bits(self._down[self.index[x]] & keep):
                m |= 1 << remap[j]
            down.append(m)
        return Poset(ids, down)


def build_poset(elements: Sequence[Hashable], leq_pairs: Iterable[tuple]) -> Poset:
    """Poset whose order is the reflexive-transitive closure of ``leq_pairs``.

    >>> p = build_poset("ab", {("a", "b")})
    >>> sorted(p.leq_pairs())
    [('a', 'a'), ('a', 'b'), ('b', 'b')]
    """
    elements = list(elements)
    index = {x: i for i, x in enumerate(elements)}
    if len(index) != len(elements):
        raise InputError("poset element ids must be distinct")
    n = len(elements)
    down = [1 << i for i in range(n)]
    for x, y in leq_pairs:
        try:
            down[index[y]] |= 1 << index[x]
        except KeyError as exc:
            raise InputError(f"unknown element {exc.args[0]!r} in leq pair") from None
    # Warshall on bit rows
    for k in range(n):
        bit = 1 << k
        dk = down[k]
        for i in range(n):
            if down[i] & bit:
                down[i] |= dk
    for i in range(n):
        for j in _bits(down[i]):
            if j != i and (down[j] >> i) & 1:
                raise InputError(f"cycle: ({elements[j]!r}, {elements[i]!r}) closes a cycle")
    return Poset(elements, down)


def chain(n: int) -> Poset:
    return Poset(range(n), [(1 << (i + 1)) - 1 for i in range(n)])


def antichain(ids: Sequence[Hashable]) -> Poset:
    return Poset(ids, [1 << i for i in range(len(ids))])


def boolean_lattice(n: int) -> Poset:
    """Subsets of {1..n} (as frozensets) under inclusion."""
    subsets = [frozenset(i + 1 for i in range(n) if (m >> i) & 1) for m in range(1 << n)]
    down = []
    for m in range(1 << n):
        mask = 0
        sub = m
        while True:
            mask |= 1 << sub
            if sub == 0:
                break
            sub = (sub - 1) & m
        down.append(mask)
    return Poset(subsets, down)


class MobiusTable:
    """Möbius function of a poset, filled lazily one column ``mu(., y)`` at a time."""

    def __init__(self, poset: Poset):
        self.poset = poset
        self._cols: dict[int, dict[int, int]] = {}
        self._lock = threading.Lock()

    def _column(self, j: int) -> dict[int, int]:
        col = self._cols.get(j)
        if col is not None:
            return col
        with self._lock:
            col = self._cols.get(j)
            if col is not None:
                return col
            p = self.poset
            down_j = p._down[j]
            # mu(x, y) = -sum_{x < z <= y} mu(z, y); process y-downwards so
            # every z above x has been finished.
            members = sorted(_bits(down_j), key=lambda k: -bin(p._down[k] & down_j).count("1"))
            col = {}
            for x in members:
                if x == j:
                    col[x] = 1
                    continue
                above = p._up[x] & down_j & ~(1 << x)
                col[x] = -sum(col[z] for z in _bits(above))
            self._cols[j] = col
            return col

    def __call__(self, x, y) -> int:
        p = self.poset
        return self._column(p.index[y]).get(p.index[x], 0)

    value = __call__

    def column(self, y) -> dict:
        """``{x: mu(x, y)}`` over the principal ideal of ``y``."""
        p = self.poset
        return {p.elements[i]: v for i, v in self._column(p.index[y]).items()}

    def precompute(self) -> "MobiusTable":
        for j in range(len(self.poset)):
            self._column(j)
        return self

    def items(self):
        """All ``((x, y), mu)`` with ``x <= y``."""
        p = self.poset
        for j in range(len(p)):
            for i, v in self._column(j).items():
                yield (p.elements[i], p.elements[j]), v


def mobius(p: Poset) -> MobiusTable:
    return p.mobius()


def down_sum(f: Mapping, p: Poset, zero=0) -> dict:
    """``g(x) = sum_{y <= x} f(y)``."""
    return {x: sum((f[y] for y in p.down(x)), zero) for x in p.elements}


def mobius_invert(g: Mapping, p: Poset, zero=0) -> dict:
    """Recover ``f`` from ``g(x) = sum_{y <= x} f(y)`` via ``f(x) = sum_{y<=x} g(y) mu(y, x)``."""
    mu = p.mobius()
    out = {}
    for x in p.elements:
        acc = zero
        for y, m in mu.column(x).items():
            if m:
                acc = acc + g[y] * m
        out[x] = acc
    return out


def product_poset(p1: Poset, p2: Poset) -> Poset:
    """Cartesian product with the coordinatewise order; elements are pairs."""
    n2 = len(p2)
    elements = [(a, b) for a, b in product(p1.elements, p2.elements)]
    down = []
    for i in range(len(p1)):
        for j in range(n2):
            mask = 0
            for a in _bits(p1._down[i]):
                for b in _bits(p2._down[j]):
                    mask |= 1 << (a * n2 + b)
            down.append(mask)
    return Poset(elements, down)
