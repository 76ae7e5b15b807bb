"""Semigroups with commuting idempotents and DA semigroups.

The regular elements R(S) of a semigroup with commuting idempotents form an
inverse semigroup, and

    nu(s) = sum_{t in s_down} floor(t),   s_down = {u in R : u u^-1 s = u},

is an algebra retraction KS -> KR whose kernel is the radical, spanned by
the vectors s - nu(s) for s outside R.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from . import groups
from . import inverse_rep as ir
from .cyclotomic import Cyclotomic, ZERO
from .errors import InputError, PreconditionError, VerificationError
from .linalg import echelon, in_span
from .semigroup import (
    Semigroup,
    green_j,
    idempotent_order,
    is_da,
    is_inverse,
    maximal_subgroup,
    require_commuting,
)


@dataclass
class RegularReduction:
    source: Semigroup
    regulars: Semigroup  # R(S), restricted from source
    regular_elements: tuple  # R(S) as indices of source
    down_sets: tuple  # element -> tuple of source indices (s_down)
    nu: tuple  # element -> {source index in R: integer coefficient}
    _radical: Optional["RadicalBasis"] = field(default=None, repr=False)

    def nu_vector(self, x: int) -> list:
        vec = [0] * len(self.source)
        for k, c in self.nu[x].items():
            vec[k] = c
        return vec

    def pullback(self, chi: ir.SemigroupCharacter) -> ir.SemigroupCharacter:
        """Character of S obtained from a character of R(S) through nu."""
        if chi.owner is not self.regulars:
            raise InputError("character must live on R(S)")
        local = {g: k for k, g in enumerate(self.regular_elements)}
        vals = []
        for x in range(len(self.source)):
            acc = ZERO
            for t, c in self.nu[x].items():
                acc = acc + chi.values[local[t]] * c
            vals.append(acc)
        return ir.SemigroupCharacter(self.source, vals, chi.validated, name=f"nu*{chi.name}")

    def restrict(self, theta: ir.SemigroupCharacter) -> ir.SemigroupCharacter:
        """theta restricted to R(S)."""
        return ir.SemigroupCharacter(
            self.regulars, [theta.values[x] for x in self.regular_elements], theta.validated,
            name=theta.name,
        )


def _algebra_mul(s: Semigroup, a: dict, b: dict) -> dict:
    t = s.table
    out: dict = {}
    for x, cx in a.items():
        for y, cy in b.items():
            z = t[x][y]
            out[z] = out.get(z, 0) + cx * cy
    return {k: v for k, v in out.items() if v}


def regular_reduction(s: Semigroup) -> RegularReduction:
    return s.cached("regular_reduction", lambda: _regular_reduction(s))


def _regular_reduction(s: Semigroup) -> RegularReduction:
    require_commuting(s, "regular reduction")
    t = s.table
    reg = tuple(sorted(s.regular))
    regset = set(reg)
    for a in reg:
        for b in reg:
            if t[a][b] not in regset:
                raise VerificationError("product of regular elements is not regular")
    r = s.restrict(reg, name=f"R({s.name})")
    if not is_inverse(r):
        raise VerificationError("regular elements do not form an inverse semigroup")
    rinv = [reg[k] for k in (r.inverse_of(i) for i in range(len(r)))]
    inv = dict(zip(reg, rinv))
    downs = []
    for x in range(len(s)):
        down = []
        for u in reg:
            uu = t[u][inv[u]]
            left = t[uu][x] == u
            right = t[t[x][inv[u]]][u] == u
            if left != right:
                raise VerificationError(f"the two descriptions of {s.labels[x]} below disagree at {s.labels[u]}")
            if left:
                down.append(u)
        downs.append(tuple(down))
    # floor(t) in R, expanded to source indices
    floor = {}
    for k, u in enumerate(reg):
        floor[u] = {reg[j]: c for j, c in ir.groupoid_coeffs(r, k).items()}
    nus = []
    for x in range(len(s)):
        acc: dict = {}
        for u in downs[x]:
            for v, c in floor[u].items():
                acc[v] = acc.get(v, 0) + c
        nus.append({k: v for k, v in acc.items() if v})
    for x in reg:
        if nus[x] != {x: 1}:
            raise VerificationError(f"nu is not the identity at regular {s.labels[x]}")
    for x in range(len(s)):
        for y in range(len(s)):
            if nus[t[x][y]] != _algebra_mul(s, nus[x], nus[y]):
                raise VerificationError(f"nu is not multiplicative at ({s.labels[x]}, {s.labels[y]})")
    return RegularReduction(s, r, reg, tuple(downs), tuple(nus))


@dataclass
class RadicalBasis:
    reduction: RegularReduction
    elements: tuple  # s outside R, one basis vector each
    vectors: tuple  # s - nu(s) as element-indexed integer lists
    nilpotency_index: int  # least k with Rad^k = 0 (1 when Rad = 0)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def to_record(self) -> dict:
        return {
            "dim": self.dim,
            "basis": [
                {"element": self.reduction.source.labels[x],
                 "coeffs": {str(k): v for k, v in enumerate(vec) if v}}
                for x, vec in zip(self.elements, self.vectors)
            ],
            "nilpotency_index": self.nilpotency_index,
        }


def _vec_mul(s: Semigroup, a, b) -> list:
    t = s.table
    out = [Fraction(0)] * len(s)
    for x, cx in enumerate(a):
        if not cx:
            continue
        for y, cy in enumerate(b):
            if cy:
                out[t[x][y]] += cx * cy
    return out


def radical_basis(red: RegularReduction) -> RadicalBasis:
    """{s - nu(s) : s not regular}, with ideal and nilpotency checks."""
    if red._radical is not None:
        return red._radical
    s = red.source
    n = len(s)
    regset = set(red.regular_elements)
    elems = tuple(x for x in range(n) if x not in regset)
    vectors = []
    for x in elems:
        v = [-c for c in red.nu_vector(x)]
        v[x] += 1
        vectors.append(v)
    span = echelon(vectors)
    if len(span) != len(vectors) or len(vectors) + len(regset) != n:
        raise VerificationError("radical basis vectors are dependent")
    units = [[1 if i == x else 0 for i in range(n)] for x in range(n)]
    for v in vectors:
        for u in units:
            if not in_span(span, _vec_mul(s, u, v)) or not in_span(span, _vec_mul(s, v, u)):
                raise VerificationError("radical span is not a two-sided ideal")
    power = span
    k = 1
    while power:
        if k > n:
            raise VerificationError("radical ideal is not nilpotent")
        power = echelon([_vec_mul(s, a, b) for a in power for b in span])
        k += 1
    out = RadicalBasis(red, elems, tuple(tuple(v) for v in vectors), k if vectors else 1)
    red._radical = out
    return out


def mult_commuting(s: Semigroup, e: int, chi: Sequence, theta: ir.SemigroupCharacter,
                   check: bool = True) -> Cyclotomic:
    """sum_{f <= e} (chi, theta_f)_{G_e} mu(f, e), mu on E(S).

    ``chi`` is an irreducible character of G_e given elementwise in the
    order of ``maximal_subgroup(s, e)``.  With ``check`` the value is
    compared with the inverse-semigroup formula on R(S).
    """
    require_commuting(s, "multiplicity formula")
    t = s.table
    if t[e][e] != e:
        raise InputError(f"{s.labels[e]} is not idempotent")
    if theta.owner is not s:
        raise InputError("character belongs to another semigroup")
    g = maximal_subgroup(s, e)
    if len(chi) != len(g):
        raise InputError("chi must be given on every element of G_e")
    mu = idempotent_order(s).mobius().column(e)
    h = []
    for x in g.embedding:
        acc = ZERO
        for f, m in mu.items():
            if m:
                acc = acc + theta.values[t[f][x]] * m
        h.append(acc)
    value = groups.inner_product(list(chi), h, g)
    if theta.validated and (not value.is_integer() or value.to_int() < 0):
        raise VerificationError(f"multiplicity {value} is not a nonnegative integer")
    if check:
        red = regular_reduction(s)
        local = {x: k for k, x in enumerate(red.regular_elements)}
        inner = ir.intertwine_at(red.regulars, local[e], chi, red.restrict(theta))
        if inner != value:
            raise VerificationError(f"formula on S gives {value}, on R(S) gives {inner}")
    return value


def mult_commuting_label(red: RegularReduction, label: ir.IrreducibleLabel,
                         theta: ir.SemigroupCharacter) -> Cyclotomic:
    """Multiplicity of the irreducible labelled inside R(S)."""
    r = red.regulars
    d = ir.d_classes(r)[label.d_class_index]
    chi = ir.group_tables(r)[label.d_class_index].values(label.group_char_index)
    return mult_commuting(red.source, red.regular_elements[d.base], chi, theta)


# ---------------------------------------------------------------------------
# DA semigroups


@dataclass
class RegularJClasses:
    classes: list  # J-class ids (green_j numbering) that are regular
    idempotent: dict  # J id -> e_J
    order: object  # Poset on the regular J ids


def regular_j_classes(s: Semigroup) -> RegularJClasses:
    def build():
        g = green_j(s)
        regs = g.regular_classes()
        es = s.idempotent_set
        rep = {c: next(x for x in g.classes[c] if x in es) for c in regs}
        return RegularJClasses(regs, rep, g.j_order.subposet(regs))

    return s.cached("regular_j", build)


def left_action_ranks(s: Semigroup, ideal: Sequence) -> list:
    """|x L| for each x: the rank of left multiplication on the span of ``ideal``."""
    L = list(ideal)
    t = s.table
    return [len({t[x][l] for l in L}) for x in range(len(s))]


def left_action_trace(s: Semigroup, ideal: Sequence) -> ir.SemigroupCharacter:
    L = list(ideal)
    t = s.table
    return ir.SemigroupCharacter(s, [sum(1 for l in L if t[x][l] == l) for x in range(len(s))])


def da_multiplicity(s: Semigroup, ranks: Union[Sequence, Callable], J: int) -> Cyclotomic:
    """sum_{J' <= J} rk phi(e_J' e_J e_J') mu(J', J) over regular J-classes.

    ``ranks`` gives rk phi(x) per element (sequence or callable) and ``J``
    is a regular J-class id as numbered by :func:`green_j`.
    """
    if not is_da(s):
        raise PreconditionError(f"{s.name or 'semigroup'} is not in DA")
    reg = regular_j_classes(s)
    if J not in reg.idempotent:
        raise InputError(f"J-class {J} is not a regular J-class")
    rk = ranks if callable(ranks) else (lambda x: ranks[x])
    t = s.table
    e = reg.idempotent[J]
    total = 0
    for Jp, m in reg.order.mobius().column(J).items():
        if m:
            f = reg.idempotent[Jp]
            total += rk(t[t[f][e]][f]) * m
    if total < 0:
        raise VerificationError(f"DA multiplicity {total} at J-class {J} is negative")
    return Cyclotomic.rational(total)


def da_character_values(s: Semigroup, J: int) -> list:
    """rho_J(x) = 1 if x >=_J J else 0."""
    g = green_j(s)
    e = regular_j_classes(s).idempotent[J]
    return [1 if g.leq(e, x) else 0 for x in range(len(s))]


def da_decompose_oracle(s: Semigroup, theta: ir.SemigroupCharacter) -> dict:
    """Solve theta = sum_J m_J rho_J on idempotents, then check on every element."""
    reg = regular_j_classes(s)
    g = green_j(s)
    po = reg.order
    mult = {}
    for J in reg.classes:
        acc = ZERO
        for Jp, m in po.mobius().column(J).items():
            if m:
                acc = acc + theta.values[reg.idempotent[Jp]] * m
        mult[J] = acc
    for x in range(len(s)):
        want = ZERO
        for J, m in mult.items():
            if g.leq(reg.idempotent[J], x):
                want = want + m
        if want != theta.values[x]:
            raise VerificationError(f"theta is not a combination of the rho_J at {s.labels[x]}")
    return mult


def reject_eda(s: Semigroup):
    """Only commuting-idempotent or DA inputs are handled."""
    from .semigroup import is_commuting_idem

    if not (is_commuting_idem(s) or is_da(s)):
        raise PreconditionError(
            "semigroup has neither commuting idempotents nor only idempotent regular elements; "
            "the general congruence reduction is not supported"
        )
