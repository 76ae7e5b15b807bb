"""Named semigroup constructors and the ``NAME:ARGS`` catalog syntax.

Catalog specs look like ``rook:3``, ``monogenic:2,1`` or, for constructors
that take semigroups, nested calls such as ``wreath:cyclic(2),rook(2)`` and
``product:monogenic(2,1),boolean(1)``.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Callable

from . import partial_perm as pp
from .errors import InputError
from .semigroup import Semigroup, from_partial_perms


def rook(n: int) -> Semigroup:
    """The symmetric inverse monoid on [n].

    Order: rank ascending, then domain (lex), range (lex), bijection
    (lex), so ``1_{[r]}`` is the first idempotent of rank ``r``.
    """
    if n < 0:
        raise InputError("degree must be nonnegative")
    if n == 0:
        raise InputError("rook(0) has no points to act on; use n >= 1")
    elems = []
    for r in range(n + 1):
        for dom in combinations(range(n), r):
            for ran in combinations(range(n), r):
                for perm in permutations(ran):
                    img = [None] * n
                    for i, v in zip(dom, perm):
                        img[i] = v
                    elems.append(pp.PartialPerm(tuple(img)))
    return from_partial_perms(elems, name=f"rook({n})")


def symmetric(n: int) -> Semigroup:
    """The symmetric group on [n] as permutations, identity first."""
    elems = [pp.PartialPerm(p) for p in permutations(range(n))]
    return from_partial_perms(elems, name=f"sym({n})")


def cyclic(n: int) -> Semigroup:
    """Z/n as the powers of the n-cycle (1 2 ... n); element k is c^k."""
    if n < 1:
        raise InputError("cyclic order must be positive")
    elems = [pp.PartialPerm(tuple((i + k) % n for i in range(n))) for k in range(n)]
    return from_partial_perms(elems, name=f"cyclic({n})")


def boolean_lattice(n: int) -> Semigroup:
    """Partial identities 1_X, X a subset of [n], ordered by bitmask of X."""
    elems = [
        pp.PartialPerm(tuple(i if (m >> i) & 1 else None for i in range(n)))
        for m in range(1 << n)
    ]
    return from_partial_perms(elems, name=f"boolean({n})")


def order_preserving(n: int) -> Semigroup:
    """POI_n: order-preserving partial injections of [n]."""
    elems = []
    for r in range(n + 1):
        for dom in combinations(range(n), r):
            for ran in combinations(range(n), r):
                img = [None] * n
                for i, v in zip(dom, ran):
                    img[i] = v
                elems.append(pp.PartialPerm(tuple(img)))
    return from_partial_perms(elems, name=f"poi({n})")


def free_lrb(k: int) -> Semigroup:
    """Free left-regular band on k letters: repetition-free nonempty words.

    ``xy`` is ``x`` followed by the letters of ``y`` not already in ``x``.
    No identity; use :func:`adjoin_identity` for the monoid.
    """
    if not 1 <= k <= 5:
        raise InputError("free_lrb supports 1 <= k <= 5")
    letters = "abcdefghij"[:k]
    words = []
    for r in range(1, k + 1):
        for combo in permutations(letters, r):
            words.append("".join(combo))
    pos = {w: i for i, w in enumerate(words)}

    def mul(x, y):
        return x + "".join(c for c in y if c not in x)

    table = [[pos[mul(x, y)] for y in words] for x in words]
    return Semigroup(table, labels=words, name=f"lrb({k})")


def monogenic(index: int, period: int) -> Semigroup:
    """<x> with x^(index+period) = x^index; element i is x^(i+1)."""
    if index < 1 or period < 1:
        raise InputError("index and period must be positive")
    size = index + period - 1

    def reduce(e):
        if e <= size:
            return e
        return index + (e - index) % period

    table = [[reduce(a + b) - 1 for b in range(1, size + 1)] for a in range(1, size + 1)]
    labels = ["x" if e == 1 else f"x^{e}" for e in range(1, size + 1)]
    return Semigroup(table, labels=labels, name=f"monogenic({index},{period})")


def left_zero(k: int) -> Semigroup:
    """``xy = x`` on k elements."""
    labels = "abcdefghij"[:k] if k <= 10 else [f"z{i + 1}" for i in range(k)]
    return Semigroup([[i] * k for i in range(k)], labels=list(labels), name=f"leftzero({k})")


def right_zero(k: int) -> Semigroup:
    labels = "abcdefghij"[:k] if k <= 10 else [f"z{i + 1}" for i in range(k)]
    return Semigroup([list(range(k)) for _ in range(k)], labels=list(labels), name=f"rightzero({k})")


def adjoin_identity(s: Semigroup) -> Semigroup:
    """S^1: ``s`` itself if it has an identity, else ``s`` plus a new last element ``1``."""
    if s.identity is not None:
        return s
    n = len(s)
    if s.is_concrete:
        ident = pp.PartialPerm.identity(s.degree)
        # the full identity is a two-sided identity for any partial perms
        return from_partial_perms(list(s.elements) + [ident], name=s.name + "^1")
    table = [list(row) + [i] for i, row in enumerate(s.table)]
    table.append(list(range(n + 1)))
    return Semigroup(table, labels=list(s.labels) + ["1"], name=s.name + "^1", check=False)


def direct_product(s: Semigroup, t: Semigroup) -> Semigroup:
    """S x T with elements ordered (a, b) lexicographically (index a*|T|+b).

    Concrete factors give a concrete product acting on the disjoint union
    of the two point sets.
    """
    m = len(t)
    table = [
        [s.table[a][c] * m + t.table[b][d] for c in range(len(s)) for d in range(m)]
        for a in range(len(s))
        for b in range(m)
    ]
    labels = [f"({x},{y})" for x in s.labels for y in t.labels]
    name = f"{s.name}x{t.name}"
    if s.is_concrete and t.is_concrete:
        na = s.degree
        elems = []
        for x in s.elements:
            for y in t.elements:
                img = list(x.img) + [None if v is None else v + na for v in y.img]
                elems.append(pp.PartialPerm(tuple(img)))
        out = Semigroup(table, elements=elems, labels=labels, name=name, check=False)
    else:
        out = Semigroup(table, labels=labels, name=name, check=False)
    return out


def wreath(group: Semigroup, s: Semigroup) -> Semigroup:
    """G wr S for a group G and a partial-permutation semigroup S.

    Elements are all pairs (f, sigma), sigma in S and f a labelling of
    dom sigma by G, embedded as partial permutations of G x [n].
    """
    from .semigroup import is_group

    if not is_group(group):
        raise InputError("wreath product needs a group as the label group")
    if not s.is_concrete:
        raise InputError("wreath product needs a partial-permutation semigroup")
    n = s.degree
    ident = group.identity
    wreath_elems = []
    for sigma in s.elements:
        dom = [i for i, v in enumerate(sigma.img) if v is not None]
        for labs in product(range(len(group)), repeat=len(dom)):
            full = [ident] * n
            for i, g in zip(dom, labs):
                full[i] = g
            wreath_elems.append(pp.WreathElement.make(sigma, full, group))
    embedded = [w.embed() for w in wreath_elems]
    out = from_partial_perms(embedded, name=f"wreath({group.name},{s.name})")
    out.wreath_elements = tuple(wreath_elems)
    return out


# ---------------------------------------------------------------------------
# spec parsing

def _ints(args, count=None):
    try:
        vals = [int(a) for a in args]
    except ValueError:
        raise InputError(f"expected integer arguments, got {args!r}") from None
    if count is not None and len(vals) != count:
        raise InputError(f"expected {count} integer argument(s), got {len(vals)}")
    return vals


def _unary(fn):
    return lambda args: fn(*_ints(args, 1))


CATALOG: dict[str, Callable] = {
    "rook": _unary(rook),
    "sym": _unary(symmetric),
    "cyclic": _unary(cyclic),
    "boolean": _unary(boolean_lattice),
    "poi": _unary(order_preserving),
    "lrb": _unary(free_lrb),
    "monogenic": lambda args: monogenic(*_ints(args, 2)),
    "leftzero": _unary(left_zero),
    "rightzero": _unary(right_zero),
    "monoid": lambda args: adjoin_identity(_one_spec(args)),
    "product": lambda args: direct_product(*_two_specs(args)),
    "wreath": lambda args: wreath(*_two_specs(args)),
}


def _one_spec(args):
    if len(args) != 1:
        raise InputError("expected one nested semigroup spec")
    return from_spec(args[0])


def _two_specs(args):
    if len(args) != 2:
        raise InputError("expected two nested semigroup specs")
    return from_spec(args[0]), from_spec(args[1])


def _split_args(text: str) -> list:
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise InputError(f"unbalanced parentheses in {text!r}")
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    if depth:
        raise InputError(f"unbalanced parentheses in {text!r}")
    out.append(cur)
    return [a.strip() for a in out if a.strip()]


def from_spec(spec: str) -> Semigroup:
    """Build a catalog semigroup from ``name:args`` or ``name(args)``."""
    spec = spec.strip()
    if "(" in spec and (":" not in spec or spec.index("(") < spec.index(":")):
        if not spec.endswith(")"):
            raise InputError(f"malformed catalog spec {spec!r}")
        name, rest = spec.split("(", 1)
        rest = rest[:-1]
    elif ":" in spec:
        name, rest = spec.split(":", 1)
    else:
        name, rest = spec, ""
    name = name.strip().lower()
    if name not in CATALOG:
        raise InputError(f"unknown catalog name {name!r}; valid names: {', '.join(sorted(CATALOG))}")
    return CATALOG[name](_split_args(rest))


def catalog_names() -> list:
    return sorted(CATALOG)


def rook_size(n: int) -> int:
    from math import comb, factorial

    return sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))


__all__ = [
    "rook", "symmetric", "cyclic", "boolean_lattice", "order_preserving", "free_lrb",
    "monogenic", "left_zero", "right_zero", "adjoin_identity", "direct_product",
    "wreath", "from_spec", "catalog_names", "rook_size", "CATALOG",
]
