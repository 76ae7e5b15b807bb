"""Random walks on minimal left ideals of triangularizable monoids.

Choose s with probability p_s and move l -> s l.  For each regular J-class
J and irreducible chi of the abelian group G_J there is an eigenvalue

    lambda_chi = sum_{s >=_J J} p_s chi(e_J s e_J)

with multiplicity

    (1/|G_J|) sum_g chi(g^-1) sum_{J' <= J} |Fix_L(e_J' g e_J')| mu(J', J).

Everything is exact; the numeric eigensolver is only an oracle.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from . import catalog
from . import groups
from .commuting import regular_j_classes
from .cyclotomic import Cyclotomic, ONE, ZERO
from .errors import InputError, PreconditionError, VerificationError
from .linalg import charpoly
from .semigroup import (
    Semigroup,
    green_j,
    is_triangularizable,
    left_ideal,
    maximal_subgroup,
    minimal_left_ideal,
)

TOLERANCE = 1e-8


def adjoin_identity_if_needed(s: Semigroup) -> Semigroup:
    """S^1; the new identity (if any) is the last element and gets p_1 = 0."""
    return catalog.adjoin_identity(s)


def _exact(w) -> Fraction:
    if isinstance(w, bool) or isinstance(w, float) or not isinstance(w, (numbers.Rational, str)):
        raise InputError(f"weight {w!r} is not an exact rational")
    try:
        return Fraction(w)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"weight {w!r} is not a rational number") from None


def _check_rational_text(w):
    if isinstance(w, str) and ("." in w or "e" in w.lower()):
        raise InputError(f"weight {w!r} looks like a float; give it as num/den")


class ProbabilityMeasure:
    """Exact nonnegative rational weights summing to 1, indexed by element."""

    __slots__ = ("weights",)

    def __init__(self, weights: Sequence):
        vals = []
        for w in weights:
            _check_rational_text(w)
            vals.append(_exact(w))
        if any(w < 0 for w in vals):
            raise InputError("weights must be nonnegative")
        if sum(vals) != 1:
            raise InputError(f"weights sum to {sum(vals)}, not 1")
        self.weights = tuple(vals)

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, x):
        return self.weights[x]

    def __repr__(self):
        return f"ProbabilityMeasure({[str(w) for w in self.weights]})"

    @classmethod
    def uniform(cls, n: int) -> "ProbabilityMeasure":
        return cls([Fraction(1, n)] * n)

    @classmethod
    def from_mapping(cls, n: int, mapping: dict, one_based: bool = True) -> "ProbabilityMeasure":
        """Weights from {element index: "num/den"}; missing elements get 0."""
        w = [Fraction(0)] * n
        for k, v in mapping.items():
            try:
                i = int(k) - (1 if one_based else 0)
            except ValueError:
                raise InputError(f"weight key {k!r} is not an element index") from None
            if not 0 <= i < n:
                raise InputError(f"weight index {k} out of range")
            _check_rational_text(v)
            w[i] = _exact(v)
        return cls(w)

    def extended(self, n: int) -> "ProbabilityMeasure":
        """Pad with zero weights (the adjoined identity)."""
        if n < len(self.weights):
            raise InputError("cannot shrink a measure")
        return ProbabilityMeasure(list(self.weights) + [Fraction(0)] * (n - len(self.weights)))


def _prepare(s: Semigroup, pi: ProbabilityMeasure):
    m = adjoin_identity_if_needed(s)
    if len(pi) == len(s) and len(m) != len(s):
        pi = pi.extended(len(m))
    if len(pi) != len(m):
        raise InputError(f"measure has {len(pi)} weights for a semigroup of size {len(m)}")
    return m, pi


def check_minimal_left_ideal(s: Semigroup, L: Sequence) -> list:
    L = sorted(set(L))
    if not L:
        raise InputError("left ideal is empty")
    if any(not 0 <= x < len(s) for x in L):
        raise InputError("left ideal contains an invalid element index")
    target = frozenset(L)
    for l in L:
        if left_ideal(s, l) != target:
            raise InputError(f"{[s.labels[x] for x in L]} is not a minimal left ideal")
    return L


def minimal_left_ideals(s: Semigroup) -> list:
    """All minimal left ideals, as sorted element lists."""
    out = []
    seen = set()
    first = frozenset(minimal_left_ideal(s))
    # minimal left ideals partition the minimal ideal K(S) = S L S
    t = s.table
    kernel = {t[t[x][l]][y] for x in range(len(s)) for l in first for y in range(len(s))} | first
    for x in sorted(kernel):
        ideal = left_ideal(s, x)
        if ideal not in seen:
            seen.add(ideal)
            out.append(check_minimal_left_ideal(s, ideal))
    return out


def transition_matrix(s: Semigroup, pi: ProbabilityMeasure, L: Optional[Sequence] = None) -> list:
    """M[l1, l2] = sum of p_s over s with s l1 = l2 (exact rationals)."""
    if len(pi) != len(s):
        raise InputError(f"measure has {len(pi)} weights for a semigroup of size {len(s)}")
    L = check_minimal_left_ideal(s, L if L is not None else minimal_left_ideal(s))
    pos = {l: k for k, l in enumerate(L)}
    t = s.table
    m = [[Fraction(0)] * len(L) for _ in L]
    for x in range(len(s)):
        p = pi.weights[x]
        if p:
            for i, l in enumerate(L):
                m[i][pos[t[x][l]]] += p
    for row in m:
        if sum(row) != 1:
            raise VerificationError("transition matrix row does not sum to 1")
    return m


@dataclass
class SpectrumEntry:
    j_class: int
    character: int
    eigenvalue: Cyclotomic
    multiplicity: int


@dataclass
class SpectrumReport:
    semigroup: Semigroup
    ideal: list
    entries: list
    matrix: list = field(repr=False, default_factory=list)

    @property
    def ideal_size(self) -> int:
        return len(self.ideal)

    def eigenvalues(self) -> list:
        """Exact eigenvalues repeated by multiplicity."""
        out = []
        for e in self.entries:
            out.extend([e.eigenvalue] * e.multiplicity)
        return out

    def to_records(self) -> list:
        return [
            {
                "J_class": e.j_class,
                "character": e.character,
                "eigenvalue_exact": str(e.eigenvalue),
                "eigenvalue_float": format_complex(complex(e.eigenvalue)),
                "multiplicity": e.multiplicity,
            }
            for e in self.entries
        ]


def format_complex(z: complex) -> str:
    re_, im = round(z.real, 12) + 0.0, round(z.imag, 12) + 0.0
    if im == 0:
        return f"{re_:.12g}"
    return f"{re_:.12g}{im:+.12g}i"


def walk_spectrum(s: Semigroup, pi: ProbabilityMeasure, L: Optional[Sequence] = None) -> SpectrumReport:
    """Exact labelled eigenvalues and multiplicities of the walk on L."""
    s, pi = _prepare(s, pi)
    if not is_triangularizable(s):
        raise PreconditionError(f"{s.name or 'semigroup'} is not triangularizable")
    L = check_minimal_left_ideal(s, L if L is not None else minimal_left_ideal(s))
    t = s.table
    g = green_j(s)
    reg = regular_j_classes(s)
    mob = reg.order.mobius()
    fix = [sum(1 for l in L if t[x][l] == l) for x in range(len(s))]
    entries = []
    for J in reg.classes:
        e = reg.idempotent[J]
        G = maximal_subgroup(s, e)
        local = {x: k for k, x in enumerate(G.embedding)}
        tab = groups.character_table(G)
        _, class_of, inv = groups._class_data(G)
        above = [x for x in range(len(s)) if g.leq(e, x)]
        # fixed-point sums over J' <= J for each g in G_J
        fsum = []
        for x in G.embedding:
            acc = 0
            for Jp, m in mob.column(J).items():
                if m:
                    f = reg.idempotent[Jp]
                    acc += fix[t[t[f][x]][f]] * m
            fsum.append(acc)
        for r in range(len(tab)):
            chi = tab.irreducibles[r]
            lam = ZERO
            for x in above:
                if pi.weights[x]:
                    y = t[t[e][x]][e]
                    if y not in local:
                        raise VerificationError(f"e_J s e_J leaves G_J at {s.labels[x]}")
                    lam = lam + chi[class_of[local[y]]] * pi.weights[x]
            mult = ZERO
            for k in range(len(G)):
                if fsum[k]:
                    mult = mult + chi[class_of[inv[k]]] * fsum[k]
            mult = mult * Fraction(1, len(G))
            if not mult.is_integer() or mult.to_int() < 0:
                raise VerificationError(f"multiplicity {mult} at J-class {J}, character {r} is not a nonnegative integer")
            entries.append(SpectrumEntry(J, r, lam, mult.to_int()))
    total = sum(e.multiplicity for e in entries)
    if total != len(L):
        raise VerificationError(f"multiplicities sum to {total}, not |L| = {len(L)}")
    report = SpectrumReport(s, L, entries, transition_matrix(s, pi, L))
    return report


@dataclass
class CrossCheck:
    ok: bool
    max_error: float
    pairs: list  # (exact eigenvalue as complex, numeric eigenvalue)
    message: str = ""


def numeric_cross_check(report: SpectrumReport, M: Optional[list] = None, tol: float = TOLERANCE) -> CrossCheck:
    """Pair exact eigenvalues with dense numeric ones and compare."""
    M = report.matrix if M is None else M
    exact = [complex(v) for v in report.eigenvalues()]
    numeric = list(np.linalg.eigvals(np.array([[float(x) for x in row] for row in M], dtype=float)))
    if len(exact) != len(numeric):
        return CrossCheck(False, float("inf"), [], f"{len(exact)} exact vs {len(numeric)} numeric eigenvalues")
    cost = np.abs(np.subtract.outer(np.array(exact), np.array(numeric)))
    rows, cols = linear_sum_assignment(cost)
    pairs = [(exact[i], complex(numeric[j])) for i, j in zip(rows, cols)]
    err = float(cost[rows, cols].max()) if len(exact) else 0.0
    if err > tol:
        bad = [f"{a:.10g} vs {b:.10g}" for a, b in pairs if abs(a - b) > tol]
        return CrossCheck(False, err, pairs, "mismatched eigenvalues: " + "; ".join(bad))
    return CrossCheck(True, err, pairs, "")


def spectrum_polynomial(report: SpectrumReport) -> list:
    """prod (x - lambda)^mult, exact, lowest degree first."""
    poly = [ONE]
    for lam in report.eigenvalues():
        nxt = [ZERO] * (len(poly) + 1)
        for k, c in enumerate(poly):
            nxt[k + 1] = nxt[k + 1] + c
            nxt[k] = nxt[k] - c * lam
        poly = nxt
    return poly


def check_charpoly(report: SpectrumReport) -> bool:
    """Exact comparison of det(xI - M) with the spectrum polynomial."""
    want = charpoly(report.matrix)
    have = spectrum_polynomial(report)
    return len(want) == len(have) and all(a == b for a, b in zip(have, want))
