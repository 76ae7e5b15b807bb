"""Finite semigroups as dense multiplication tables.

A :class:`Semigroup` is a table ``table[x][y] = x*y`` over element indices
``0..n-1``, optionally backed by concrete :class:`PartialPerm` elements.
Everything structural (Green's relations, natural order, D-classes, maximal
subgroups) is computed from the table, so abstract and concrete inputs are
treated alike.  Derived data is cached on the instance; instances are never
mutated after construction.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

from . import partial_perm as pp
from .errors import ClosureOverflow, InputError, PreconditionError, VerificationError
from .poset import Poset

DEFAULT_BUDGET = 100_000
FULL_ASSOC_CHECK = 200
SAMPLED_TRIPLES = 1_000_000


def _popcount(m: int) -> int:
    return bin(m).count("1")


class Semigroup:
    def __init__(
        self,
        table: Sequence[Sequence[int]],
        elements: Optional[Sequence[pp.PartialPerm]] = None,
        labels: Optional[Sequence[str]] = None,
        name: str = "",
        check: bool = True,
    ):
        self.table = tuple(tuple(row) for row in table)
        n = len(self.table)
        if n == 0:
            raise InputError("empty semigroup")
        if check:
            for row in self.table:
                if len(row) != n:
                    raise InputError("multiplication table must be square")
                for v in row:
                    if not (isinstance(v, int) and 0 <= v < n):
                        raise InputError(f"table entry {v!r} is not an element index")
            check_associative(self.table)
        self.elements = tuple(elements) if elements is not None else None
        if self.elements is not None and len(self.elements) != n:
            raise InputError("one concrete element per table row required")
        if labels is None:
            if self.elements is not None:
                labels = [str(x) for x in self.elements]
            else:
                labels = [f"s{i + 1}" for i in range(n)]
        self.labels = tuple(labels)
        self.name = name
        self.embedding: Optional[tuple] = None  # parent indices when built by restrict()
        self.parent: Optional["Semigroup"] = None
        self._cache: dict = {}

    def __len__(self):
        return len(self.table)

    def __repr__(self):
        return f"Semigroup({self.name or '?'}, size={len(self)})"

    @property
    def is_concrete(self) -> bool:
        return self.elements is not None

    @property
    def degree(self) -> Optional[int]:
        return self.elements[0].degree if self.elements else None

    def mul(self, *xs: int) -> int:
        t = self.table
        acc = xs[0]
        for x in xs[1:]:
            acc = t[acc][x]
        return acc

    def cached(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @cached_property
    def index_of(self) -> dict:
        if self.elements is None:
            return {}
        return {x: i for i, x in enumerate(self.elements)}

    @cached_property
    def identity(self) -> Optional[int]:
        t = self.table
        n = len(t)
        for e in range(n):
            if t[e][e] != e:
                continue
            if all(t[e][x] == x and t[x][e] == x for x in range(n)):
                return e
        return None

    @cached_property
    def idempotent_list(self) -> tuple:
        return tuple(x for x in range(len(self)) if self.table[x][x] == x)

    @cached_property
    def idempotent_set(self) -> frozenset:
        return frozenset(self.idempotent_list)

    @cached_property
    def some_inverse(self) -> tuple:
        """For each element an inverse ``t`` (``sts = s, tst = t``), or None if not regular."""
        t = self.table
        n = len(t)
        out = []
        for s in range(n):
            found = None
            if self.elements is not None:
                cand = self.index_of.get(pp.inverse(self.elements[s]))
                if cand is not None and t[t[s][cand]][s] == s and t[t[cand][s]][cand] == cand:
                    found = cand
            if found is None:
                for u in range(n):
                    if t[t[s][u]][s] == s:
                        found = t[t[u][s]][u]
                        break
            out.append(found)
        return tuple(out)

    @cached_property
    def regular(self) -> frozenset:
        return frozenset(i for i, v in enumerate(self.some_inverse) if v is not None)

    def restrict(self, indices: Sequence[int], name: str = "") -> "Semigroup":
        """The subsemigroup on ``indices`` (must be closed), remembering the embedding."""
        indices = list(indices)
        pos = {x: k for k, x in enumerate(indices)}
        t = self.table
        try:
            table = [[pos[t[a][b]] for b in indices] for a in indices]
        except KeyError:
            raise InputError("subset is not closed under multiplication") from None
        sub = Semigroup(
            table,
            elements=[self.elements[i] for i in indices] if self.elements else None,
            labels=[self.labels[i] for i in indices],
            name=name,
            check=False,
        )
        sub.embedding = tuple(indices)
        sub.parent = self
        return sub

    # convenience wrappers so call sites can read s.dom(x) etc.
    def inverse_of(self, x: int) -> int:
        inv = inverse_map(self)
        return inv[x]

    def dom(self, x: int) -> int:
        return dom_map(self)[x]

    def ran(self, x: int) -> int:
        return ran_map(self)[x]


def check_associative(table, rng: Optional[random.Random] = None):
    n = len(table)
    if n <= FULL_ASSOC_CHECK:
        for a in range(n):
            ra = table[a]
            for b in range(n):
                ab = table[ra[b]]
                rb = table[b]
                for c in range(n):
                    if ab[c] != ra[rb[c]]:
                        raise InputError(f"table is not associative at ({a + 1},{b + 1},{c + 1})")
        return
    rng = rng or random.Random(0)
    for _ in range(SAMPLED_TRIPLES):
        a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise InputError(f"table is not associative at ({a + 1},{b + 1},{c + 1})")


def from_table(table, labels=None, name="", one_based=True) -> Semigroup:
    """Abstract semigroup from a multiplication table (1-based entries by default)."""
    shift = 1 if one_based else 0
    try:
        rows = [[int(v) - shift for v in row] for row in table]
    except (TypeError, ValueError):
        raise InputError("table entries must be integers") from None
    return Semigroup(rows, labels=labels, name=name)


def closure(
    generators: Sequence[pp.PartialPerm],
    cap: int = DEFAULT_BUDGET,
    name: str = "",
    with_inverses: bool = False,
) -> Semigroup:
    """Subsemigroup generated by partial permutations.

    Element order: generators first (deduplicated), then breadth-first
    discovery order of right multiplication by generators.
    """
    gens = list(generators)
    if not gens:
        raise InputError("closure needs at least one generator")
    deg = gens[0].degree
    if any(g.degree != deg for g in gens):
        raise InputError("generators have different degrees")
    if with_inverses:
        gens = gens + [pp.inverse(g) for g in gens]
    order: list[tuple] = []
    pos: dict[tuple, int] = {}
    for g in gens:
        if g.img not in pos:
            pos[g.img] = len(order)
            order.append(g.img)
    if len(order) > cap:
        raise ClosureOverflow(f"closure exceeded budget {cap}", count=len(order))
    gen_imgs = list(dict.fromkeys(g.img for g in gens))
    queue = deque(range(len(order)))
    while queue:
        x = order[queue.popleft()]
        for g in gen_imgs:
            y = tuple(None if v is None else g[v] for v in x)
            if y not in pos:
                if len(order) >= cap:
                    raise ClosureOverflow(
                        f"closure exceeded budget {cap} (reached {len(order)} elements)",
                        count=len(order),
                    )
                pos[y] = len(order)
                order.append(y)
                queue.append(pos[y])
    table = []
    for x in order:
        row = []
        for y in order:
            row.append(pos[tuple(None if v is None else y[v] for v in x)])
        table.append(row)
    elements = [pp.PartialPerm(x) for x in order]
    return Semigroup(table, elements=elements, name=name, check=False)


def from_partial_perms(elements: Sequence[pp.PartialPerm], name: str = "") -> Semigroup:
    """Semigroup on an explicit, already closed, list of partial permutations."""
    elements = list(elements)
    pos = {x.img: i for i, x in enumerate(elements)}
    if len(pos) != len(elements):
        raise InputError("duplicate elements")
    table = []
    for x in elements:
        row = []
        for y in elements:
            key = tuple(None if v is None else y.img[v] for v in x.img)
            if key not in pos:
                raise InputError("element list is not closed under composition")
            row.append(pos[key])
        table.append(row)
    return Semigroup(table, elements=elements, name=name, check=False)


# ---------------------------------------------------------------------------
# elementwise structure


def idempotents(s: Semigroup) -> list:
    return list(s.idempotent_list)


def omega_power(s: Semigroup, x: int) -> tuple:
    """``(x^omega, x^(omega+1))``."""
    t = s.table
    seen = {}
    powers = []
    p = x
    while p not in seen:
        seen[p] = len(powers)
        powers.append(p)
        p = t[p][x]
    start = seen[p]
    period = len(powers) - start
    # the idempotent in the cycle is x^k with k >= index, k % period == 0
    k = start + 1
    while k % period:
        k += 1
    e = powers[k - 1]
    if t[e][e] != e:
        raise VerificationError("omega power is not idempotent")
    return e, t[x][e]


def omega_maps(s: Semigroup) -> tuple:
    def build():
        om, op = [], []
        for x in range(len(s)):
            e, y = omega_power(s, x)
            om.append(e)
            op.append(y)
        return tuple(om), tuple(op)

    return s.cached("omega", build)


def is_commuting_idem(s: Semigroup) -> bool:
    t = s.table
    es = s.idempotent_list
    return all(t[e][f] == t[f][e] for e in es for f in es)


def is_regular(s: Semigroup) -> bool:
    return len(s.regular) == len(s)


def is_inverse(s: Semigroup) -> bool:
    return is_regular(s) and is_commuting_idem(s)


def require_inverse(s: Semigroup, what: str = "operation"):
    if not s.cached("is_inverse", lambda: is_inverse(s)):
        raise PreconditionError(f"{what} requires an inverse semigroup")


def require_commuting(s: Semigroup, what: str = "operation"):
    if not s.cached("is_commuting", lambda: is_commuting_idem(s)):
        raise PreconditionError(f"{what} requires commuting idempotents")


def inverse_map(s: Semigroup) -> tuple:
    """Unique inverse of every regular element (semigroups with commuting idempotents)."""
    def build():
        require_commuting(s, "unique inverses")
        return s.some_inverse

    return s.cached("inverse_map", build)


def dom_map(s: Semigroup) -> tuple:
    inv = inverse_map(s)
    t = s.table
    return s.cached(
        "dom", lambda: tuple(None if inv[x] is None else t[x][inv[x]] for x in range(len(s)))
    )


def ran_map(s: Semigroup) -> tuple:
    inv = inverse_map(s)
    t = s.table
    return s.cached(
        "ran", lambda: tuple(None if inv[x] is None else t[inv[x]][x] for x in range(len(s)))
    )


# ---------------------------------------------------------------------------
# Green's J relation


@dataclass
class GreenData:
    j_class_of: tuple  # element -> class id
    classes: tuple  # class id -> tuple of elements
    j_order: Poset  # on class ids, c <= d iff J(c) subset of J(d)
    regular_flags: tuple
    ideal_masks: tuple = field(repr=False)  # element -> bitmask of J(x)

    def leq(self, x: int, y: int) -> bool:
        """``x <=_J y`` for elements."""
        return self.ideal_masks[x] & ~self.ideal_masks[y] == 0

    def regular_classes(self) -> list:
        return [c for c, r in enumerate(self.regular_flags) if r]


def green_j(s: Semigroup) -> GreenData:
    return s.cached("green_j", lambda: _green_j(s))


def _green_j(s: Semigroup) -> GreenData:
    t = s.table
    n = len(t)
    right = []
    for x in range(n):
        m = 1 << x
        for v in t[x]:
            m |= 1 << v
        right.append(m)
    masks = []
    for x in range(n):
        m = right[x]
        for u in range(n):
            m |= right[t[u][x]]
        masks.append(m)
    class_of = [None] * n
    classes: list[list[int]] = []
    by_mask: dict[int, int] = {}
    for x in range(n):
        c = by_mask.get(masks[x])
        if c is None:
            c = len(classes)
            by_mask[masks[x]] = c
            classes.append([])
        classes[c].append(x)
        class_of[x] = c
    k = len(classes)
    cmask = [masks[cl[0]] for cl in classes]
    down = []
    for c in range(k):
        m = 0
        for d in range(k):
            if cmask[d] & ~cmask[c] == 0:
                m |= 1 << d
        down.append(m)
    order = Poset(range(k), down)
    es = s.idempotent_set
    flags = tuple(any(x in es for x in cl) for cl in classes)
    regular = s.regular
    for cl, flag in zip(classes, flags):
        if any((x in regular) != flag for x in cl):
            raise VerificationError("J-class mixes regular and non-regular elements")
    return GreenData(tuple(class_of), tuple(tuple(c) for c in classes), order, flags, tuple(masks))


# ---------------------------------------------------------------------------
# inverse semigroups


def natural_order(s: Semigroup) -> Poset:
    """``x <= y`` iff ``x = e y`` for an idempotent ``e``."""
    def build():
        require_inverse(s, "natural order")
        t = s.table
        es = s.idempotent_list
        down = []
        for y in range(len(s)):
            m = 0
            for e in es:
                m |= 1 << t[e][y]
            down.append(m)
        return Poset(range(len(s)), down)

    return s.cached("natural_order", build)


def idempotent_order(s: Semigroup) -> Poset:
    """E(S) ordered by ``e <= f`` iff ``ef = e = fe`` (commuting idempotents)."""
    def build():
        require_commuting(s, "idempotent order")
        t = s.table
        es = s.idempotent_list
        pos = {e: k for k, e in enumerate(es)}
        down = []
        for f in es:
            m = 0
            for e in es:
                if t[e][f] == e and t[f][e] == e:
                    m |= 1 << pos[e]
            down.append(m)
        return Poset(es, down)

    return s.cached("idempotent_order", build)


@dataclass
class DClass:
    index: int
    base: int  # e_i
    idempotents: tuple  # E(D_i), base first
    connectors: dict  # e -> p_e with dom p_e = e_i, ran p_e = e
    elements: tuple
    group: Semigroup  # G_{e_i}, embedded in S

    @property
    def n(self) -> int:
        return len(self.idempotents)

    @property
    def group_order(self) -> int:
        return len(self.group)


@dataclass
class DClassData:
    classes: tuple
    d_class_of: tuple  # element -> class index

    def __iter__(self):
        return iter(self.classes)

    def __len__(self):
        return len(self.classes)

    def __getitem__(self, i):
        return self.classes[i]

    def total(self) -> int:
        return sum(d.n ** 2 * d.group_order for d in self.classes)


def d_classes(s: Semigroup) -> DClassData:
    return s.cached("d_classes", lambda: _d_classes(s))


def _d_classes(s: Semigroup) -> DClassData:
    require_inverse(s, "D-classes")
    dom, ran = dom_map(s), ran_map(s)
    t = s.table
    n = len(s)
    es = s.idempotent_list
    parent = {e: e for e in es}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for x in range(n):
        a, b = find(dom[x]), find(ran[x])
        if a != b:
            parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for e in es:
        groups.setdefault(find(e), []).append(e)
    raw = sorted(groups.values(), key=lambda g: g[0])
    # e_i below e_j in the preorder: some idempotent of D_i lies under e_j
    k = len(raw)
    below = [[False] * k for _ in range(k)]
    for i, gi in enumerate(raw):
        for j, gj in enumerate(raw):
            ej = gj[0]
            below[i][j] = any(t[f][ej] == f and t[ej][f] == f for f in gi)
    done: list[int] = []
    remaining = set(range(k))
    while remaining:
        ready = [i for i in remaining if all(not below[j][i] or j == i or j in done for j in range(k))]
        if not ready:
            raise VerificationError("D-class preorder is not acyclic")
        i = min(ready, key=lambda c: raw[c][0])
        done.append(i)
        remaining.discard(i)
    cls_of_idem = {}
    for new, old in enumerate(done):
        for e in raw[old]:
            cls_of_idem[e] = new
    d_of = tuple(cls_of_idem[dom[x]] for x in range(n))
    classes = []
    for new, old in enumerate(done):
        idems = raw[old]
        base = idems[0]
        members = tuple(x for x in range(n) if d_of[x] == new)
        connectors = {base: base}
        for x in members:
            if dom[x] == base and ran[x] not in connectors:
                connectors[ran[x]] = x
        if set(connectors) != set(idems):
            raise VerificationError("missing connector in D-class")
        gelems = [x for x in members if dom[x] == base and ran[x] == base]
        group = s.restrict(gelems, name=f"G[{s.labels[base]}]")
        classes.append(DClass(new, base, tuple(idems), connectors, members, group))
    data = DClassData(tuple(classes), d_of)
    if data.total() != n:
        raise VerificationError(f"sum n_i^2 |G_i| = {data.total()} != |S| = {n}")
    for d in classes:
        for e, p in d.connectors.items():
            if dom[p] != d.base or ran[p] != e:
                raise VerificationError("connector has wrong domain/range")
    return data


def maximal_subgroup(s: Semigroup, e: int) -> Semigroup:
    """Maximal subgroup at the idempotent ``e`` (the group of units of eSe)."""
    t = s.table
    if t[e][e] != e:
        raise InputError(f"{s.labels[e]} is not idempotent")

    def build():
        if s.cached("is_inverse", lambda: is_inverse(s)):
            dom, ran = dom_map(s), ran_map(s)
            members = [x for x in range(len(s)) if dom[x] == e and ran[x] == e]
        else:
            ese = sorted({t[t[e][x]][e] for x in range(len(s))})
            members = [
                x for x in ese
                if any(t[x][y] == e and t[y][x] == e for y in ese)
            ]
        return s.restrict(members, name=f"G[{s.labels[e]}]")

    return s.cached(("maxsub", e), build)


def is_group(s: Semigroup) -> bool:
    if s.identity is None:
        return False
    e = s.identity
    return all(e in s.table[x] for x in range(len(s)))


def is_abelian(s: Semigroup) -> bool:
    t = s.table
    n = len(s)
    return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))


def left_ideal(s: Semigroup, x: int) -> frozenset:
    """S^1 x."""
    return frozenset([x] + [s.table[y][x] for y in range(len(s))])


def minimal_left_ideal(s: Semigroup) -> list:
    g = green_j(s)
    bottom = min(range(len(g.classes)), key=lambda c: _popcount(g.ideal_masks[g.classes[c][0]]))
    x = g.classes[bottom][0]
    ideal = left_ideal(s, x)
    for y in ideal:
        if left_ideal(s, y) != ideal:
            raise VerificationError("left ideal is not minimal")
    return sorted(ideal)


def is_da(s: Semigroup) -> bool:
    return s.regular == s.idempotent_set


def idempotent_generated(s: Semigroup) -> list:
    t = s.table
    found = list(s.idempotent_list)
    seen = set(found)
    queue = deque(found)
    gens = list(s.idempotent_list)
    while queue:
        x = queue.popleft()
        for e in gens:
            y = t[x][e]
            if y not in seen:
                seen.add(y)
                found.append(y)
                queue.append(y)
    return found


def is_triangularizable(s: Semigroup) -> bool:
    """Abelian maximal subgroups, aperiodic <E(S)>, and x^(omega+1) = x for regular x."""
    om, op = omega_maps(s)
    for e in s.idempotent_list:
        if not is_abelian(maximal_subgroup(s, e)):
            return False
    if any(op[x] != om[x] for x in idempotent_generated(s)):
        return False
    return all(op[x] == x for x in s.regular)
