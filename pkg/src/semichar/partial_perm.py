"""Partial permutations of [n] and wreath-product elements.

Maps act on the right: ``compose(a, b)`` sends ``i`` to ``(i a) b``.
Indices are 1-based at the boundary (``from_images``, ``images``, JSON) and
0-based in ``PartialPerm.img``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import InputError


@dataclass(frozen=True, slots=True)
class PartialPerm:
    img: tuple  # 0-based images, None where undefined

    def __post_init__(self):
        seen = [v for v in self.img if v is not None]
        if len(set(seen)) != len(seen):
            raise InputError(f"partial permutation is not injective: {self.images()}")
        n = len(self.img)
        if any(not (0 <= v < n) for v in seen):
            raise InputError(f"image out of range for degree {n}: {self.images()}")

    @classmethod
    def from_images(cls, images: Sequence[Optional[int]]) -> "PartialPerm":
        """Build from 1-based images, ``None`` meaning undefined."""
        return cls(tuple(None if v is None else int(v) - 1 for v in images))

    @classmethod
    def identity(cls, n: int, subset: Optional[Iterable[int]] = None) -> "PartialPerm":
        """``1_X`` for a 1-based subset ``X`` (all of [n] by default)."""
        if subset is None:
            return cls(tuple(range(n)))
        keep = {i - 1 for i in subset}
        if any(not (0 <= i < n) for i in keep):
            raise InputError(f"subset {sorted(subset)} not inside [{n}]")
        return cls(tuple(i if i in keep else None for i in range(n)))

    @classmethod
    def zero(cls, n: int) -> "PartialPerm":
        return cls((None,) * n)

    @property
    def degree(self) -> int:
        return len(self.img)

    def images(self) -> list:
        return [None if v is None else v + 1 for v in self.img]

    def __call__(self, i: int) -> Optional[int]:
        """1-based application."""
        v = self.img[i - 1]
        return None if v is None else v + 1

    def domain(self) -> frozenset:
        return frozenset(i + 1 for i, v in enumerate(self.img) if v is not None)

    def range(self) -> frozenset:
        return frozenset(v + 1 for v in self.img if v is not None)

    def __mul__(self, other: "PartialPerm") -> "PartialPerm":
        return compose(self, other)

    def __str__(self):
        return "[" + ",".join("-" if v is None else str(v + 1) for v in self.img) + "]"

    def to_json(self) -> str:
        return json.dumps(self.images())

    @classmethod
    def from_json(cls, text) -> "PartialPerm":
        data = json.loads(text) if isinstance(text, str) else text
        if not isinstance(data, list) or not all(v is None or isinstance(v, int) for v in data):
            raise InputError(f"expected a list of ints/null, got {data!r}")
        return cls.from_images(data)


def _check_degree(a: PartialPerm, b: PartialPerm):
    if len(a.img) != len(b.img):
        raise InputError(f"degree mismatch: {a.degree} vs {b.degree}")


def compose(a: PartialPerm, b: PartialPerm) -> PartialPerm:
    _check_degree(a, b)
    bi = b.img
    return PartialPerm(tuple(None if v is None else bi[v] for v in a.img))


def inverse(a: PartialPerm) -> PartialPerm:
    out = [None] * len(a.img)
    for i, v in enumerate(a.img):
        if v is not None:
            out[v] = i
    return PartialPerm(tuple(out))


def rank(a: PartialPerm) -> int:
    return sum(v is not None for v in a.img)


def leq(a: PartialPerm, b: PartialPerm) -> bool:
    """``a`` is a restriction of ``b``."""
    _check_degree(a, b)
    return all(v is None or v == w for v, w in zip(a.img, b.img))


def fixed_points(a: PartialPerm) -> frozenset:
    return frozenset(i + 1 for i, v in enumerate(a.img) if v == i)


def is_idempotent(a: PartialPerm) -> bool:
    return all(v is None or v == i for i, v in enumerate(a.img))


def rook_matrix(a: PartialPerm) -> list:
    n = len(a.img)
    m = [[0] * n for _ in range(n)]
    for i, v in enumerate(a.img):
        if v is not None:
            m[i][v] = 1
    return m


def restrict(a: PartialPerm, subset: Iterable[int]) -> PartialPerm:
    """Restriction of ``a`` to a 1-based subset of its domain."""
    return compose(PartialPerm.identity(a.degree, subset), a)


def permutation_sign(a: PartialPerm, subset: Optional[Iterable[int]] = None) -> int:
    """Sign of ``a`` as a permutation of ``subset`` (default: its domain)."""
    support = set(a.domain()) if subset is None else set(subset)
    if {a(i) for i in support} != support:
        raise InputError(f"{a} does not permute {sorted(support)}")
    sign = 1
    seen = set()
    for i in support:
        if i in seen:
            continue
        length = 0
        j = i
        while j not in seen:
            seen.add(j)
            j = a(j)
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def cycle_type(a: PartialPerm) -> tuple:
    """Cycle type of ``a`` on its domain; requires dom a = ran a."""
    if a.domain() != a.range():
        raise InputError(f"{a} is not a permutation of its domain")
    lengths = []
    seen = set()
    for i in sorted(a.domain()):
        if i in seen:
            continue
        length = 0
        j = i
        while j not in seen:
            seen.add(j)
            j = a(j)
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


@dataclass(frozen=True, slots=True)
class WreathElement:
    """An element ``(f, sigma)`` of ``G wr S``.

    ``labels[i]`` is the group-element index attached to ``i`` (0-based) and
    is normalized to the group identity off the carrier's domain.  ``group``
    is the label group given as a Semigroup that is a group.
    """

    carrier: PartialPerm
    labels: tuple
    group: object

    @classmethod
    def make(cls, carrier: PartialPerm, labels: Sequence[int], group) -> "WreathElement":
        ident = group.identity
        if ident is None:
            raise InputError("label group has no identity")
        if len(labels) != carrier.degree:
            raise InputError("need one label per index of the carrier")
        norm = tuple(
            int(g) if v is not None else ident for g, v in zip(labels, carrier.img)
        )
        if any(not (0 <= g < len(group)) for g in norm):
            raise InputError("label outside the group")
        return cls(carrier, norm, group)

    def __mul__(self, other):
        return wreath_compose(self, other)

    def embed(self) -> PartialPerm:
        """Partial permutation of G x [n] (point ``(g, i)`` -> ``g * n + i``)."""
        n = self.carrier.degree
        m = len(self.group)
        table = self.group.table
        out = [None] * (m * n)
        for i, v in enumerate(self.carrier.img):
            if v is None:
                continue
            f = self.labels[i]
            for g in range(m):
                out[g * n + i] = table[g][f] * n + v
        return PartialPerm(tuple(out))


def wreath_compose(x: WreathElement, y: WreathElement) -> WreathElement:
    if x.group is not y.group:
        raise InputError("wreath elements over different label groups")
    _check_degree(x.carrier, y.carrier)
    carrier = compose(x.carrier, y.carrier)
    table = x.group.table
    ident = x.group.identity
    labels = []
    for i, v in enumerate(x.carrier.img):
        if v is None or carrier.img[i] is None:
            labels.append(ident)
        else:
            labels.append(table[x.labels[i]][y.labels[v]])
    return WreathElement(carrier, tuple(labels), x.group)
