"""Characters of finite inverse semigroups.

Irreducible characters are labelled by pairs (D-class i, irreducible row of
G_{e_i}).  Everything is exact: characters are element-indexed tuples of
:class:`Cyclotomic`.

Multiplicity of the irreducible attached to (e, chi) in a character theta:

    (chi, theta)_S = sum_{f <= e} (chi, theta_f)_{G_e} mu(f, e),
    theta_f(g) = theta(f g),

with mu the Möbius function of E(S).  The character-table route uses
C = Y A = B Y where Y = diag(group tables) and A counts restrictions;
since group characters may be non-real, Y^-1 = W^-1 conj(Y)^T with
W = diag(centralizer orders).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from . import groups
from . import partial_perm as pp
from .cyclotomic import Cyclotomic, ONE, ZERO, as_cyclotomic
from .errors import InputError, PreconditionError, VerificationError
from .semigroup import (
    Semigroup,
    d_classes,
    dom_map,
    from_partial_perms,
    idempotent_order,
    inverse_map,
    is_inverse,
    maximal_subgroup,
    natural_order,
    omega_maps,
    ran_map,
    require_inverse,
)


# ---------------------------------------------------------------------------
# characters


class SemigroupCharacter:
    """Element-indexed exact values on a semigroup.

    ``validated`` marks characters of genuine representations; those are
    checked to be constant on character-equivalence classes and make
    multiplicity computations assert nonnegative integrality.
    """

    __slots__ = ("owner", "values", "validated", "name")

    def __init__(self, owner: Semigroup, values, validated: bool = False, name: str = ""):
        values = tuple(as_cyclotomic(v) for v in values)
        if len(values) != len(owner):
            raise InputError(f"character needs {len(owner)} values, got {len(values)}")
        if any(v is NotImplemented for v in values):
            raise InputError("character values must be exact rationals or Cyclotomic")
        self.owner = owner
        self.values = values
        self.validated = validated
        self.name = name
        if validated:
            check_class_function(self)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, x: int) -> Cyclotomic:
        return self.values[x]

    def __iter__(self):
        return iter(self.values)

    def __repr__(self):
        return f"SemigroupCharacter({self.name or '?'}, {[str(v) for v in self.values]})"

    def _same(self, other):
        if not isinstance(other, SemigroupCharacter) or other.owner is not self.owner:
            raise InputError("characters live on different semigroups")

    def __add__(self, other):
        self._same(other)
        return SemigroupCharacter(
            self.owner, [a + b for a, b in zip(self.values, other.values)],
            self.validated and other.validated,
        )

    def __sub__(self, other):
        self._same(other)
        return SemigroupCharacter(self.owner, [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self):
        return SemigroupCharacter(self.owner, [-a for a in self.values])

    def __mul__(self, c):
        c = as_cyclotomic(c)
        if c is NotImplemented:
            return NotImplemented
        keep = self.validated and c.is_integer() and c.to_int() >= 0
        return SemigroupCharacter(self.owner, [a * c for a in self.values], keep)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SemigroupCharacter):
            return NotImplemented
        return self.owner is other.owner and self.values == other.values

    __hash__ = None

    def tensor(self, other) -> "SemigroupCharacter":
        self._same(other)
        return SemigroupCharacter(
            self.owner, [a * b for a, b in zip(self.values, other.values)],
            self.validated and other.validated,
        )


def zero_character(s: Semigroup) -> SemigroupCharacter:
    return SemigroupCharacter(s, [ZERO] * len(s))


def check_class_function(theta: SemigroupCharacter):
    """Characters are constant on character-equivalence classes."""
    s = theta.owner
    _, op = omega_maps(s)
    for x in range(len(s)):
        if theta.values[x] != theta.values[op[x]]:
            raise VerificationError(
                f"{theta.name or 'character'} differs at {s.labels[x]} and its omega+1 power"
            )
    if s.cached("is_inverse", lambda: is_inverse(s)):
        eq = char_equivalence(s)
        for col, members in enumerate(eq.classes):
            v = theta.values[members[0]]
            if any(theta.values[x] != v for x in members):
                raise VerificationError(f"{theta.name or 'character'} is not constant on class {col}")


def fixed_point_character(s: Semigroup) -> SemigroupCharacter:
    if not s.is_concrete:
        raise InputError("fixed-point character needs partial-permutation elements")
    return SemigroupCharacter(
        s, [len(pp.fixed_points(x)) for x in s.elements], validated=True, name="fixed-point"
    )


def power_character(theta: SemigroupCharacter, p: int) -> SemigroupCharacter:
    if p < 0:
        raise InputError("tensor power must be nonnegative")
    return SemigroupCharacter(
        theta.owner, [v ** p for v in theta.values], theta.validated, name=f"{theta.name}^{p}"
    )


def _cycles(x: pp.PartialPerm) -> list:
    """Lengths of the cycles of ``x`` (points whose orbit closes up)."""
    img = x.img
    out, seen = [], set()
    for i in range(len(img)):
        if i in seen:
            continue
        j, length = i, 0
        path = []
        while j is not None and j not in seen and j not in path:
            path.append(j)
            j = img[j]
            length += 1
        if j == i:
            out.append(length)
            seen.update(path)
        # points on tails are visited again only from other starts; harmless
    return out


def exterior_character(s: Semigroup, p: int) -> SemigroupCharacter:
    """theta^(wedge p)(x) = sum over p-sets Y inside dom x with Yx = Y of sgn(x|_Y)."""
    if not s.is_concrete:
        raise InputError("exterior character needs partial-permutation elements")
    n = s.degree
    if not 0 <= p <= n:
        raise InputError(f"exterior power {p} outside 0..{n}")
    vals = []
    for x in s.elements:
        # invariant sets are unions of cycles; sign multiplies over cycles
        poly = [1] + [0] * n
        for length in _cycles(x):
            sign = -1 if length % 2 == 0 else 1
            nxt = poly[:]
            for k in range(n - length, -1, -1):
                if poly[k]:
                    nxt[k + length] += sign * poly[k]
            poly = nxt
        vals.append(poly[p])
    return SemigroupCharacter(s, vals, validated=True, name=f"wedge^{p}")


def restrict_character(theta: SemigroupCharacter, f: int, e: Optional[int] = None) -> list:
    """theta_f(x) = theta(f x); over all of S, or over G_e (local order) when ``e`` is given."""
    s = theta.owner
    t = s.table
    if t[f][f] != f:
        raise InputError(f"{s.labels[f]} is not idempotent")
    if e is None:
        return [theta.values[t[f][x]] for x in range(len(s))]
    g = maximal_subgroup(s, e)
    return [theta.values[t[f][x]] for x in g.embedding]


# ---------------------------------------------------------------------------
# labels, character equivalence


@dataclass(frozen=True, order=True)
class IrreducibleLabel:
    d_class_index: int
    group_char_index: int

    def __str__(self):
        return f"D{self.d_class_index}:chi{self.group_char_index}"


def group_tables(s: Semigroup) -> list:
    """Character table of each G_{e_i}, in D-class order."""
    return s.cached("group_tables", lambda: [groups.character_table(d.group) for d in d_classes(s)])


def labels(s: Semigroup) -> list:
    def build():
        out = []
        for i, tab in enumerate(group_tables(s)):
            out.extend(IrreducibleLabel(i, r) for r in range(len(tab)))
        return out

    return s.cached("labels", build)


def _check_label(s: Semigroup, label: IrreducibleLabel):
    dc = d_classes(s)
    if not (0 <= label.d_class_index < len(dc)):
        raise InputError(f"no D-class {label.d_class_index}")
    if not (0 <= label.group_char_index < len(group_tables(s)[label.d_class_index])):
        raise InputError(f"no irreducible {label.group_char_index} for D-class {label.d_class_index}")


@dataclass
class CharEquivalence:
    columns: tuple  # column -> (d_class, group class index)
    classes: tuple  # column -> tuple of elements
    column_of: tuple  # element -> column
    representatives: tuple  # column -> element of G_{e_j} (global index)
    group_part: tuple = field(repr=False, default=())  # element -> (j, local g)

    def __len__(self):
        return len(self.columns)


def _local_index(d) -> dict:
    return {x: k for k, x in enumerate(d.group.embedding)}


def conjugate_to_base(s: Semigroup, y: int) -> tuple:
    """For y in a maximal subgroup G_f: (D-class j, p_f y p_f^-1 as a local index of G_{e_j})."""
    dc = d_classes(s)
    dom = dom_map(s)
    inv = inverse_map(s)
    t = s.table
    f = dom[y]
    j = dc.d_class_of[f]
    d = dc[j]
    p = d.connectors[f]
    g = t[t[p][y]][inv[p]]
    loc = s.cached(("local", j), lambda: _local_index(d))
    return j, loc[g]


def char_equivalence(s: Semigroup) -> CharEquivalence:
    def build():
        require_inverse(s, "character equivalence")
        dc = d_classes(s)
        dom, ran = dom_map(s), ran_map(s)
        _, op = omega_maps(s)
        offsets, columns, reps = [], [], []
        for j, d in enumerate(dc):
            offsets.append(len(columns))
            for c, cl in enumerate(groups.conjugacy_classes(d.group)):
                columns.append((j, c))
                reps.append(d.group.embedding[cl.representative])
        class_tabs = [groups._class_data(d.group)[1] for d in dc]
        column_of, parts = [], []
        for x in range(len(s)):
            y = op[x]
            if dom[y] != ran[y]:
                raise VerificationError("omega+1 power is not a group element")
            j, g = conjugate_to_base(s, y)
            parts.append((j, g))
            column_of.append(offsets[j] + class_tabs[j][g])
        members = [[] for _ in columns]
        for x, c in enumerate(column_of):
            members[c].append(x)
        return CharEquivalence(
            tuple(columns), tuple(tuple(m) for m in members), tuple(column_of), tuple(reps), tuple(parts)
        )

    return s.cached("char_equivalence", build)


# ---------------------------------------------------------------------------
# induced characters and the multiplicity formula


def induced_character(s: Semigroup, label: IrreducibleLabel) -> SemigroupCharacter:
    """chi*(x) = sum over f in E(D_i), f <= dom x, x^-1 f x = f, of chi(p_f (f x) p_f^-1)."""
    require_inverse(s, "induced character")
    _check_label(s, label)

    def build():
        dc = d_classes(s)
        d = dc[label.d_class_index]
        tab = group_tables(s)[label.d_class_index]
        chi = tab.irreducibles[label.group_char_index]
        loc = s.cached(("local", d.index), lambda: _local_index(d))
        t = s.table
        dom, ran = dom_map(s), ran_map(s)
        inv = inverse_map(s)
        vals = []
        for x in range(len(s)):
            acc = ZERO
            dx = dom[x]
            for f in d.idempotents:
                if t[f][dx] != f:
                    continue
                fx = t[f][x]
                if ran[fx] != f:
                    continue
                p = d.connectors[f]
                g = loc[t[t[p][fx]][inv[p]]]
                acc = acc + chi[tab.class_of[g]]
            vals.append(acc)
        return vals

    vals = s.cached(("induced", label), build)
    return SemigroupCharacter(s, vals, validated=True, name=f"{label}*")


def induced_degree(s: Semigroup, label: IrreducibleLabel) -> int:
    _check_label(s, label)
    d = d_classes(s)[label.d_class_index]
    return d.n * group_tables(s)[label.d_class_index].degrees[label.group_char_index]


def _integral(value: Cyclotomic, what: str) -> Cyclotomic:
    if not value.is_integer() or value.to_int() < 0:
        raise VerificationError(f"{what} = {value} is not a nonnegative integer")
    return value


def intertwine_at(s: Semigroup, e: int, chi: Sequence, theta: SemigroupCharacter,
                  group: Optional[Semigroup] = None) -> Cyclotomic:
    """sum_{f <= e} (chi, theta_f)_{G_e} mu(f, e) for chi given elementwise on G_e."""
    require_inverse(s, "intertwining number")
    if theta.owner is not s:
        raise InputError("character belongs to another semigroup")
    g = group if group is not None else maximal_subgroup(s, e)
    if len(chi) != len(g):
        raise InputError("chi must be given on every element of G_e")
    t = s.table
    mu = idempotent_order(s).mobius().column(e)
    # h(g) = sum_f mu(f, e) theta(f g)
    h = []
    for x in g.embedding:
        acc = ZERO
        for f, m in mu.items():
            if m:
                acc = acc + theta.values[t[f][x]] * m
        h.append(acc)
    chi = [as_cyclotomic(v) for v in chi]
    return groups.inner_product(chi, h, g)


def intertwine(s: Semigroup, label: IrreducibleLabel, theta: SemigroupCharacter) -> Cyclotomic:
    """Multiplicity of the irreducible ``label`` in ``theta``."""
    _check_label(s, label)
    d = d_classes(s)[label.d_class_index]
    tab = group_tables(s)[label.d_class_index]
    value = intertwine_at(s, d.base, tab.values(label.group_char_index), theta, d.group)
    if theta.validated:
        _integral(value, f"multiplicity of {label} in {theta.name or 'theta'}")
    return value


def multiplicities(s: Semigroup, theta: SemigroupCharacter) -> dict:
    return {lab: intertwine(s, lab, theta) for lab in labels(s)}


def reconstruct(s: Semigroup, mults: dict) -> SemigroupCharacter:
    """sum_label m_label * label*."""
    acc = [ZERO] * len(s)
    for lab, m in mults.items():
        if m:
            chi = induced_character(s, lab)
            acc = [a + m * v for a, v in zip(acc, chi.values)]
    return SemigroupCharacter(s, acc)


def virtual_character(s: Semigroup, coeffs: dict) -> SemigroupCharacter:
    """Integer combination of irreducible characters (unvalidated)."""
    return reconstruct(s, coeffs)


# ---------------------------------------------------------------------------
# character tables


@dataclass
class SemigroupCharTable:
    semigroup: Semigroup
    labels: list
    columns: tuple  # (d_class, group class index)
    representatives: tuple
    centralizers: tuple  # z_g per column
    C: list
    Y: list
    A: list
    B: list
    block_of_row: tuple = field(repr=False, default=())
    block_of_col: tuple = field(repr=False, default=())
    _ainv: Optional[list] = field(repr=False, default=None)
    _binv: Optional[list] = field(repr=False, default=None)

    @property
    def A_inverse(self) -> list:
        if self._ainv is None:
            self._ainv = unitriangular_inverse(self.A)
        return self._ainv

    @property
    def B_inverse(self) -> list:
        if self._binv is None:
            self._binv = unitriangular_inverse(self.B)
        return self._binv

    def row_of(self, label: IrreducibleLabel) -> int:
        return self.labels.index(label)


def _zeros(r, c):
    return [[ZERO] * c for _ in range(r)]


def _matmul(a, b):
    n, m, k = len(a), len(b), len(b[0]) if b else 0
    out = _zeros(n, k)
    for i in range(n):
        ai = a[i]
        row = out[i]
        for l in range(m):
            x = ai[l]
            if not x:
                continue
            bl = b[l]
            for j in range(k):
                if bl[j]:
                    row[j] = row[j] + x * bl[j]
    return out


def unitriangular_inverse(m: list) -> list:
    """Inverse of an upper unitriangular matrix by back substitution."""
    n = len(m)
    for i in range(n):
        if m[i][i] != 1 or any(m[i][j] for j in range(i)):
            raise VerificationError("matrix is not upper unitriangular")
    inv = _zeros(n, n)
    for j in range(n):
        inv[j][j] = ONE
        for i in range(j - 1, -1, -1):
            acc = ZERO
            for k in range(i + 1, j + 1):
                if m[i][k] and inv[k][j]:
                    acc = acc + m[i][k] * inv[k][j]
            inv[i][j] = -acc
    return inv


def char_tables(s: Semigroup) -> SemigroupCharTable:
    return s.cached("char_tables", lambda: _char_tables(s))


def _char_tables(s: Semigroup) -> SemigroupCharTable:
    require_inverse(s, "character tables")
    dc = d_classes(s)
    tabs = group_tables(s)
    eq = char_equivalence(s)
    labs = labels(s)
    cols = eq.columns
    k = len(cols)
    if len(labs) != k:
        raise VerificationError(f"{len(labs)} irreducibles but {k} character classes")
    col_index = {c: i for i, c in enumerate(cols)}
    t = s.table
    ran = ran_map(s)

    # A: restrictions of g conjugate to h
    A = [[0] * k for _ in range(k)]
    for col, (j, _) in enumerate(cols):
        g = eq.representatives[col]
        ej = dc[j].base
        for f in s.idempotent_list:
            if t[f][ej] != f:
                continue
            fg = t[f][g]
            if ran[fg] != f:
                continue
            i, loc = conjugate_to_base(s, fg)
            h = tabs[i].class_of[loc]
            A[col_index[(i, h)]][col] += 1
    A = [[Cyclotomic.rational(v) for v in row] for row in A]

    Y = _zeros(k, k)
    for r, lab in enumerate(labs):
        chi = tabs[lab.d_class_index].irreducibles[lab.group_char_index]
        for c, (j, cls) in enumerate(cols):
            if j == lab.d_class_index:
                Y[r][c] = chi[cls]
    z = tuple(tabs[j].classes[cls].centralizer_size for j, cls in cols)
    # Y^-1 = W^-1 conj(Y)^T
    Yinv = [[Y[c][r].conjugate() * Fraction(1, z[r]) for c in range(k)] for r in range(k)]
    ident = _matmul(Y, Yinv)
    if any(ident[i][j] != (1 if i == j else 0) for i in range(k) for j in range(k)):
        raise VerificationError("Y W^-1 conj(Y)^T is not the identity")

    C = _zeros(k, k)
    for r, lab in enumerate(labs):
        chi = induced_character(s, lab)
        for c in range(k):
            C[r][c] = chi.values[eq.representatives[c]]
    if _matmul(Y, A) != C:
        raise VerificationError("C != Y A")
    B = _matmul(_matmul(Y, A), Yinv)
    if _matmul(B, Y) != C:
        raise VerificationError("C != B Y")
    block_row = tuple(lab.d_class_index for lab in labs)
    block_col = tuple(j for j, _ in cols)
    for name, m, rb, cb in (("A", A, block_col, block_col), ("B", B, block_row, block_row)):
        for i in range(k):
            for j in range(k):
                if rb[i] == cb[j]:
                    if m[i][j] != (1 if i == j else 0):
                        raise VerificationError(f"{name} diagonal block is not the identity")
                elif rb[i] > cb[j] and m[i][j]:
                    raise VerificationError(f"{name} is not block upper triangular")
    return SemigroupCharTable(
        s, list(labs), cols, eq.representatives, z, C, Y, A, B, block_row, block_col
    )


def _class_values(table: SemigroupCharTable, theta: SemigroupCharacter) -> list:
    return [theta.values[x] for x in table.representatives]


def solomon_mult_classwise(label: IrreducibleLabel, theta: SemigroupCharacter,
                           table: Optional[SemigroupCharTable] = None, check: bool = True) -> Cyclotomic:
    """sum_h conj(chi(h)) z_h^-1 sum_g A^-1[g, h] theta(g)."""
    s = theta.owner
    table = table or char_tables(s)
    ainv = table.A_inverse
    row = table.row_of(label)
    vals = _class_values(table, theta)
    total = ZERO
    for h, (i, _) in enumerate(table.columns):
        if i != label.d_class_index:
            continue
        chi_h = table.Y[row][h]
        if not chi_h:
            continue
        acc = ZERO
        for g in range(len(vals)):
            if ainv[g][h] and vals[g]:
                acc = acc + ainv[g][h] * vals[g]
        total = total + chi_h.conjugate() * acc * Fraction(1, table.centralizers[h])
    if check:
        _agree(s, label, theta, total, "class-wise table formula")
    return total


def solomon_mult_charwise(label: IrreducibleLabel, theta: SemigroupCharacter,
                          table: Optional[SemigroupCharTable] = None, check: bool = True) -> Cyclotomic:
    """sum_psi B^-1[psi, chi] (psi, theta|_{G_j})_{G_j}."""
    s = theta.owner
    table = table or char_tables(s)
    binv = table.B_inverse
    col = table.row_of(label)
    dc = d_classes(s)
    tabs = group_tables(s)
    restricted = {}
    total = ZERO
    for r, psi in enumerate(table.labels):
        coef = binv[r][col]
        if not coef:
            continue
        j = psi.d_class_index
        if j not in restricted:
            restricted[j] = [theta.values[x] for x in dc[j].group.embedding]
        ip = groups.inner_product(tabs[j].values(psi.group_char_index), restricted[j], dc[j].group)
        total = total + coef * ip
    if check:
        _agree(s, label, theta, total, "character-wise table formula")
    return total


def _agree(s, label, theta, value, what):
    d = d_classes(s)[label.d_class_index]
    direct = intertwine_at(
        s, d.base, group_tables(s)[label.d_class_index].values(label.group_char_index), theta, d.group
    )
    if direct != value:
        raise VerificationError(f"{what} gives {value}, multiplicity formula gives {direct}")


def solve_multiplicities(table: SemigroupCharTable, theta: SemigroupCharacter) -> dict:
    """Oracle: solve theta(class) = sum_chi m_chi C[chi, class] by elimination."""
    k = len(table.labels)
    vals = _class_values(table, theta)
    # m C = v  <=>  C^T m^T = v^T
    aug = [[table.C[r][c] for r in range(k)] + [vals[c]] for c in range(k)]
    for col in range(k):
        piv = next((r for r in range(col, k) if aug[r][col]), None)
        if piv is None:
            raise VerificationError("character table is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return {lab: aug[i][k] for i, lab in enumerate(table.labels)}


# ---------------------------------------------------------------------------
# closed forms for tensor and exterior powers


def _idem_down(s: Semigroup, e: int) -> list:
    t = s.table
    return [f for f in s.idempotent_list if t[f][e] == f and t[e][f] == f]


def tensor_mult_boolean(s: Semigroup, label: IrreducibleLabel, p: int, fallback: bool = False) -> Cyclotomic:
    """deg(chi)/|G_e| * sum_{f <= e} rk(f)^p mu(f, e), under the Boolean hypotheses.

    Hypotheses: the family {X inside dom e : 1_X in E(S)} is closed under
    X -> dom e minus X, and 1_Fix(g) is in E(S) for every g in G_e.  When
    they fail this raises, unless ``fallback`` asks for the general formula.
    """
    require_inverse(s, "tensor power multiplicity")
    if not s.is_concrete:
        raise InputError("tensor powers of the rook representation need partial permutations")
    _check_label(s, label)
    if p < 0:
        raise InputError("tensor power must be nonnegative")
    d = d_classes(s)[label.d_class_index]
    e = d.base
    below = _idem_down(s, e)
    doms = {s.elements[f].domain(): f for f in below}
    de = s.elements[e].domain()
    problem = None
    for x in doms:
        if de - x not in doms:
            problem = f"complement of {sorted(x)} in {sorted(de)} is not an idempotent domain"
            break
    if problem is None:
        for g in d.group.embedding:
            fix = pp.fixed_points(s.elements[g])
            if fix not in doms:
                problem = f"Fix({s.labels[g]}) = {sorted(fix)} is not an idempotent domain"
                break
    if problem is not None:
        if fallback:
            return intertwine(s, label, power_character(fixed_point_character(s), p))
        raise PreconditionError(f"Boolean tensor-power hypotheses fail: {problem}")
    mu = idempotent_order(s).mobius().column(e)
    total = sum(len(s.elements[f].domain()) ** p * m for f, m in mu.items())
    deg = group_tables(s)[label.d_class_index].degrees[label.group_char_index]
    return Cyclotomic.rational(Fraction(deg * total, len(d.group)))


def has_all_idempotents(s: Semigroup, rank: Optional[int] = None) -> bool:
    """E(S) contains every partial identity of [n] (of the given rank)."""
    n = s.degree
    have = {s.elements[e].domain() for e in s.idempotent_list}
    ranks = range(n + 1) if rank is None else [rank]
    return all(
        frozenset(c) in have for r in ranks for c in combinations(range(1, n + 1), r)
    )


def wreath_tensor_mult(group: Semigroup, s: Semigroup, X, chi_degree: int, p: int) -> Cyclotomic:
    """deg(chi) r! S(p, r) / (|G|^(r-p) |G_X|) for the p-th tensor power on G wr S.

    ``s`` is the base partial-permutation semigroup with E(S) = E(I_n),
    ``X`` a 1-based subset of [n] or an int r meaning {1..r}.
    """
    if not s.is_concrete:
        raise InputError("base semigroup must consist of partial permutations")
    if not groups.is_group(group):
        raise InputError("label group is not a group")
    if not has_all_idempotents(s):
        raise PreconditionError("wreath tensor formula needs E(S) = E(I_n)")
    n = s.degree
    if isinstance(X, int):
        X = range(1, X + 1)
    X = frozenset(X)
    if not X <= frozenset(range(1, n + 1)):
        raise InputError(f"{sorted(X)} is not a subset of [{n}]")
    r = len(X)
    e = s.index_of[pp.PartialPerm.identity(n, X)]
    gx = len(maximal_subgroup(s, e))
    value = Fraction(chi_degree * math.factorial(r) * groups.stirling2(p, r)) * Fraction(len(group)) ** (p - r)
    return Cyclotomic.rational(value / gx)


def exterior_mult(s: Semigroup, label: IrreducibleLabel, p: int, check: bool = True) -> Cyclotomic:
    """1 at (rank-p class, sign character), else 0."""
    require_inverse(s, "exterior power multiplicity")
    if not s.is_concrete:
        raise InputError("exterior powers need partial permutations")
    _check_label(s, label)
    if not has_all_idempotents(s, p):
        raise PreconditionError(f"S must contain every rank-{p} idempotent of I_n")
    d = d_classes(s)[label.d_class_index]
    tab = group_tables(s)[label.d_class_index]
    e = d.base
    value = ZERO
    if len(s.elements[e].domain()) == p:
        chi = tab.values(label.group_char_index)
        sgn = [groups.sign_character(s, e, g) for g in d.group.embedding]
        if all(c == v for c, v in zip(chi, sgn)):
            value = ONE
    if check:
        direct = intertwine(s, label, exterior_character(s, p))
        if direct != value:
            raise VerificationError(f"exterior closed form {value} != multiplicity formula {direct}")
    return value


# ---------------------------------------------------------------------------
# transitive partial-permutation semigroups


@dataclass
class MultiplicityReport:
    semigroup: Semigroup
    entries: list  # (IrreducibleLabel, Cyclotomic)
    minimal_rank: Optional[int] = None

    def to_records(self) -> list:
        return [
            {"d_class": lab.d_class_index, "group_char": lab.group_char_index, "multiplicity": str(m)}
            for lab, m in self.entries
        ]

    def as_dict(self) -> dict:
        return {lab: m for lab, m in self.entries}


def is_transitive(s: Semigroup) -> bool:
    if not s.is_concrete:
        raise InputError("transitivity needs partial-permutation elements")
    n = s.degree
    reach = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for x in s.elements:
            j = x.img[i]
            if j is not None and j not in reach:
                reach.add(j)
                frontier.append(j)
    return len(reach) == n


def decompose_transitive(s: Semigroup) -> MultiplicityReport:
    """Multiplicities of all irreducibles in the fixed-point character of a transitive S."""
    require_inverse(s, "transitive decomposition")
    if not is_transitive(s):
        raise PreconditionError("semigroup does not act transitively")
    n = s.degree
    dc = d_classes(s)
    rank = {e: len(s.elements[e].domain()) for e in s.idempotent_list}
    r0 = min(r for r in rank.values() if r > 0)
    minimal = [e for e, r in rank.items() if r == r0]
    if len({dc.d_class_of[e] for e in minimal}) != 1:
        raise VerificationError("minimal non-zero rank idempotents are not D-equivalent")
    covered = [i for e in minimal for i in s.elements[e].domain()]
    if sorted(covered) != list(range(1, n + 1)):
        raise VerificationError("domains of minimal idempotents do not partition the points")
    target = dc.d_class_of[minimal[0]]
    theta = fixed_point_character(s)
    entries = []
    for lab in labels(s):
        if lab.d_class_index == target:
            d = dc[target]
            tab = group_tables(s)[target]
            restricted = [theta.values[x] for x in d.group.embedding]
            m = groups.inner_product(tab.values(lab.group_char_index), restricted, d.group)
        else:
            m = ZERO
        direct = intertwine(s, lab, theta)
        if direct != m:
            raise VerificationError(f"transitive decomposition disagrees at {lab}: {m} vs {direct}")
        entries.append((lab, m))
    return MultiplicityReport(s, entries, r0)


def h_function(theta: SemigroupCharacter) -> list:
    """h(x) = sum_{t <= x} theta(t) mu(t, x) on the natural order."""
    s = theta.owner
    mu = natural_order(s).mobius()
    out = []
    for x in range(len(s)):
        acc = ZERO
        for t, m in mu.column(x).items():
            if m:
                acc = acc + theta.values[t] * m
        out.append(acc)
    return out


def munn_action(s: Semigroup, d_index: int) -> Semigroup:
    """Conjugation action of S on E(D): e -> x^-1 e x when e <= dom x.

    The result carries ``source_map`` (element of S -> image index) and
    ``points`` (the idempotents of D, in point order).
    """
    require_inverse(s, "Munn action")
    dc = d_classes(s)
    if not 0 <= d_index < len(dc):
        raise InputError(f"no D-class {d_index}")
    pts = dc[d_index].idempotents
    pos = {e: k for k, e in enumerate(pts)}
    t = s.table
    inv = inverse_map(s)
    dom = dom_map(s)
    images, index, source = [], {}, []
    for x in range(len(s)):
        img = []
        for e in pts:
            if t[e][dom[x]] == e:
                img.append(pos[t[t[inv[x]][e]][x]])
            else:
                img.append(None)
        perm = pp.PartialPerm(tuple(img))
        if perm.img not in index:
            index[perm.img] = len(images)
            images.append(perm)
        source.append(index[perm.img])
    out = from_partial_perms(images, name=f"munn({s.name},{d_index})")
    for x in range(len(s)):
        for y in range(len(s)):
            if source[t[x][y]] != out.table[source[x]][source[y]]:
                raise VerificationError("Munn action is not a homomorphism")
    out.source_map = tuple(source)
    out.points = tuple(pts)
    return out


# ---------------------------------------------------------------------------
# groupoid basis


def groupoid_coeffs(s: Semigroup, x: int) -> dict:
    """floor(x) = sum_{t <= x} mu(t, x) t, as {t: coefficient}."""
    require_inverse(s, "groupoid basis")
    return {t: m for t, m in natural_order(s).mobius().column(x).items() if m}


def _expand_product(s: Semigroup, a: dict, b: dict) -> dict:
    t = s.table
    out = {}
    for x, cx in a.items():
        for y, cy in b.items():
            z = t[x][y]
            out[z] = out.get(z, 0) + cx * cy
    return {k: v for k, v in out.items() if v}


def groupoid_product(s: Semigroup, x: int, y: int) -> dict:
    """floor(x) floor(y) expanded bilinearly in the element basis."""
    return _expand_product(s, groupoid_coeffs(s, x), groupoid_coeffs(s, y))


def groupoid_rule(s: Semigroup, x: int, y: int) -> dict:
    """floor(xy) if ran x = dom y, else 0."""
    if ran_map(s)[x] == dom_map(s)[y]:
        return groupoid_coeffs(s, s.table[x][y])
    return {}


def check_groupoid_laws(s: Semigroup, pairs=None) -> int:
    """Verify the groupoid product and the floor(x) y action on ``pairs`` (default all)."""
    require_inverse(s, "groupoid basis")
    n = len(s)
    dom, ran = dom_map(s), ran_map(s)
    t = s.table
    count = 0
    for x, y in pairs if pairs is not None else ((a, b) for a in range(n) for b in range(n)):
        if groupoid_product(s, x, y) != groupoid_rule(s, x, y):
            raise VerificationError(f"groupoid product fails at ({s.labels[x]}, {s.labels[y]})")
        action = _expand_product(s, groupoid_coeffs(s, x), {y: 1})
        want = groupoid_coeffs(s, t[x][y]) if t[ran[x]][dom[y]] == ran[x] else {}
        if action != want:
            raise VerificationError(f"floor action fails at ({s.labels[x]}, {s.labels[y]})")
        count += 1
    return count


@dataclass
class MatrixUnitMap:
    d_class: int
    size: int  # n_i
    group_order: int
    images: dict  # element -> (local group element, row idempotent, column idempotent)


def algebra_decomposition(s: Semigroup) -> list:
    """floor(x) -> (p_{dom x} x p_{ran x}^-1) E_{dom x, ran x}, one map per D-class."""
    require_inverse(s, "algebra decomposition")
    dc = d_classes(s)
    t = s.table
    dom, ran, inv = dom_map(s), ran_map(s), inverse_map(s)
    out = []
    total = 0
    for d in dc:
        loc = s.cached(("local", d.index), lambda d=d: _local_index(d))
        images = {}
        for x in d.elements:
            pe, pf = d.connectors[dom[x]], d.connectors[ran[x]]
            g = t[t[pe][x]][inv[pf]]
            if g not in loc:
                raise VerificationError("matrix-unit coefficient is outside the maximal subgroup")
            images[x] = (loc[g], dom[x], ran[x])
        gt = d.group.table
        for x, (gx, a, b) in images.items():
            for y, (gy, c, e) in images.items():
                if b != c:
                    continue
                z = t[x][y]
                if images.get(z) != (gt[gx][gy], a, e):
                    raise VerificationError("matrix-unit map is not multiplicative")
        if len(images) != d.n ** 2 * len(d.group):
            raise VerificationError("matrix-unit map is not a bijection onto the basis")
        total += len(images)
        out.append(MatrixUnitMap(d.index, d.n, len(d.group), images))
    if total != len(s):
        raise VerificationError("dimension count does not match |S|")
    return out
