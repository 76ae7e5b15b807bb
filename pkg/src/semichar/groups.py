"""Character theory of finite groups given as multiplication tables.

``character_table`` runs Dixon-Schneider: central characters are found as
common eigenvectors of the class-multiplication matrices over a prime field
F_p (p = 1 mod exp(G), p > 2 sqrt|G|), character values mod p are lifted to
cyclotomic integers through eigenvalue multiplicities, and the result is
checked against both orthogonality relations before it is returned.

Symmetric-group helpers (Murnaghan-Nakayama, hook lengths) live here too.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .cyclotomic import Cyclotomic
from .errors import BudgetError, InputError, VerificationError
from .semigroup import Semigroup, is_group

DEFAULT_GROUP_BUDGET = 2000


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: tuple
    centralizer_size: int

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass
class GroupCharacterTable:
    group: Semigroup
    classes: tuple
    class_of: tuple  # group element -> class index
    irreducibles: list  # rows of Cyclotomic, one per class
    degrees: tuple
    exponent: int
    inverse_class: tuple = field(repr=False, default=())

    def __len__(self):
        return len(self.irreducibles)

    def value(self, row: int, g: int) -> Cyclotomic:
        """Value of irreducible ``row`` at group element ``g`` (local index)."""
        return self.irreducibles[row][self.class_of[g]]

    def values(self, row: int) -> list:
        """Element-indexed values of ``row``."""
        chi = self.irreducibles[row]
        return [chi[c] for c in self.class_of]

    def trivial_row(self) -> int:
        return 0


def _inverses(g: Semigroup) -> list:
    t = g.table
    e = g.identity
    inv = [None] * len(g)
    for x in range(len(g)):
        for y in range(len(g)):
            if t[x][y] == e:
                inv[x] = y
                break
    return inv


def _require_group(g: Semigroup):
    if not is_group(g):
        raise InputError(f"{g.name or 'input'} is not a group")


def conjugacy_classes(g: Semigroup) -> list:
    """Conjugacy classes ordered by their smallest member."""
    return list(_class_data(g)[0])


def _class_data(g: Semigroup):
    def build():
        _require_group(g)
        t = g.table
        inv = _inverses(g)
        n = len(g)
        class_of = [None] * n
        classes = []
        for x in range(n):
            if class_of[x] is not None:
                continue
            orbit = sorted({t[t[inv[y]][x]][y] for y in range(n)})
            for m in orbit:
                class_of[m] = len(classes)
            classes.append(ConjugacyClass(x, tuple(orbit), n // len(orbit)))
        return tuple(classes), tuple(class_of), inv

    return g.cached("conj_classes", build)


def element_order(g: Semigroup, x: int) -> int:
    e = g.identity
    k, p = 1, x
    while p != e:
        p = g.table[p][x]
        k += 1
    return k


# ---------------------------------------------------------------------------
# modular linear algebra


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def choose_prime(order: int, exponent: int) -> int:
    """Smallest prime p = 1 mod exponent with p > 2 sqrt(order)."""
    p = exponent + 1
    while not (_is_prime(p) and p * p > 4 * order):
        p += exponent
    return p


def _prime_factors(n: int) -> list:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _primitive_root(p: int) -> int:
    fs = _prime_factors(p - 1)
    for a in range(2, p):
        if all(pow(a, (p - 1) // f, p) != 1 for f in fs):
            return a
    return 1  # p == 2


def _rref(vectors, p):
    """Row-reduce a list of vectors mod p; returns (basis, pivots)."""
    rows = [list(v) for v in vectors]
    basis, pivots = [], []
    for v in rows:
        for b, c in zip(basis, pivots):
            if v[c]:
                f = v[c]
                v = [(x - f * y) % p for x, y in zip(v, b)]
        lead = next((i for i, x in enumerate(v) if x), None)
        if lead is None:
            continue
        inv = pow(v[lead], p - 2, p)
        v = [(x * inv) % p for x in v]
        for k, b in enumerate(basis):
            if b[lead]:
                f = b[lead]
                basis[k] = [(x - f * y) % p for x, y in zip(b, v)]
        basis.append(v)
        pivots.append(lead)
    return basis, pivots


def _nullspace(a, p):
    """Basis of {x : a x = 0} mod p for a square matrix ``a`` (list of rows)."""
    m = len(a)
    n = len(a[0]) if m else 0
    rows = [list(r) for r in a]
    piv_cols = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if rows[i][c] % p), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in piv_cols]
    out = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for i, pc in enumerate(piv_cols):
            v[pc] = (-rows[i][fc]) % p
        out.append(v)
    return out


def _charpoly(a, p):
    """Characteristic polynomial mod p (coefficients low to high) via Hessenberg form."""
    n = len(a)
    h = [list(r) for r in a]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if h[i][m - 1] % p), None)
        if piv is None:
            continue
        if piv != m:
            h[m], h[piv] = h[piv], h[m]
            for r in h:
                r[m], r[piv] = r[piv], r[m]
        inv = pow(h[m][m - 1], p - 2, p)
        for i in range(m + 1, n):
            u = (h[i][m - 1] * inv) % p
            if u:
                h[i] = [(x - u * y) % p for x, y in zip(h[i], h[m])]
                for r in h:
                    r[m] = (r[m] + u * r[i]) % p
    # recurrence on leading principal submatrices of the Hessenberg matrix
    polys = [[1]]
    for k in range(n):
        prev = polys[-1]
        nxt = [0] + prev  # x * p_k
        for i, c in enumerate(prev):
            nxt[i] = (nxt[i] - h[k][k] * c) % p
        t = 1
        for i in range(k - 1, -1, -1):
            t = (t * h[i + 1][i]) % p
            if not t:
                break
            coef = (t * h[i][k]) % p
            for j, c in enumerate(polys[i]):
                nxt[j] = (nxt[j] - coef * c) % p
        polys.append(nxt)
    return polys[-1]


def _roots(poly, p):
    out = []
    for x in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % p
        if acc == 0:
            out.append(x)
    return out


# ---------------------------------------------------------------------------
# Dixon-Schneider


def character_table(g: Semigroup, budget: int = DEFAULT_GROUP_BUDGET) -> GroupCharacterTable:
    """Exact irreducible character table of the group ``g``."""
    if len(g) > budget:
        raise BudgetError(f"group order {len(g)} exceeds budget {budget}", count=len(g))
    return g.cached("char_table", lambda: _dixon(g))


def _dixon(g: Semigroup) -> GroupCharacterTable:
    classes, class_of, inv = _class_data(g)
    t = g.table
    n = len(g)
    k = len(classes)
    ident = g.identity
    one = class_of[ident]
    exponent = 1
    for c in classes:
        exponent = math.lcm(exponent, element_order(g, c.representative))
    p = choose_prime(n, exponent)
    inv_class = tuple(class_of[inv[c.representative]] for c in classes)
    sizes = [c.size for c in classes]

    # a[j][m][l] = #{x in C_j : x^-1 z_l in C_m}, z_l the representative of C_l
    a = [[[0] * k for _ in range(k)] for _ in range(k)]
    for l, c in enumerate(classes):
        z = c.representative
        for x in range(n):
            a[class_of[x]][class_of[t[inv[x]][z]]][l] += 1

    spaces = [[[1 if i == j else 0 for i in range(k)] for j in range(k)]]
    done = []
    for j in range(k):
        if not spaces:
            break
        mj = [[a[j][m][l] % p for l in range(k)] for m in range(k)]
        nxt = []
        for basis in spaces:
            basis, piv = _rref(basis, p)
            d = len(basis)
            if d == 1:
                done.append(basis[0])
                continue
            images = [[sum(r[l] * b[l] for l in range(k)) % p for r in mj] for b in basis]
            # coordinates of M b_i in the basis: read off pivot entries
            rest = [[images[i][piv[r]] for i in range(d)] for r in range(d)]
            for lam in _roots(_charpoly(rest, p), p):
                shifted = [[(rest[r][c] - (lam if r == c else 0)) % p for c in range(d)] for r in range(d)]
                kernel = _nullspace(shifted, p)
                vecs = [[sum(cf * b[l] for cf, b in zip(kv, basis)) % p for l in range(k)] for kv in kernel]
                if len(vecs) == 1:
                    done.append(vecs[0])
                elif vecs:
                    nxt.append(vecs)
        spaces = nxt
    if spaces or len(done) != k:
        raise VerificationError(f"Dixon-Schneider did not split into {k} eigenvectors (got {len(done)})")

    z = pow(_primitive_root(p), (p - 1) // exponent, p)
    # power classes of each representative
    powers = []
    for c in classes:
        row, x = [], ident
        for _ in range(exponent):
            row.append(class_of[x])
            x = t[x][c.representative]
        powers.append(row)
    inv_e = pow(exponent, p - 2, p)
    zpow = [pow(z, i, p) for i in range(exponent)]
    raw = []
    for w in done:
        s = pow(w[one], p - 2, p)
        w = [(x * s) % p for x in w]
        norm = sum(w[l] * w[inv_class[l]] * pow(sizes[l], p - 2, p) for l in range(k)) % p
        d2 = (n * pow(norm, p - 2, p)) % p
        deg = next((d for d in range(1, math.isqrt(n) + 1) if (d * d - d2) % p == 0), None)
        if deg is None:
            raise VerificationError("no degree matches the central character")
        chi_p = [(deg * w[l] * pow(sizes[l], p - 2, p)) % p for l in range(k)]
        row = []
        for l in range(k):
            mult = {}
            for e in range(exponent):
                acc = 0
                for s_ in range(exponent):
                    acc += chi_p[powers[l][s_]] * zpow[(-e * s_) % exponent]
                m = (acc * inv_e) % p
                if m > deg:
                    raise VerificationError("eigenvalue multiplicity out of range during lift")
                if m:
                    mult[e] = m
            row.append(mult)
        raw.append((deg, row))
    _check_orthogonality(raw, sizes, inv_class, n, exponent)
    rows = [(deg, [Cyclotomic.from_exponents(exponent, m) for m in r]) for deg, r in raw]
    rows.sort(key=lambda dr: _row_key(dr, exponent))
    irreducibles = [r for _, r in rows]
    trivial = next(i for i, r in enumerate(irreducibles) if all(v == 1 for v in r))
    irreducibles.insert(0, irreducibles.pop(trivial))
    degrees = tuple(r[one].to_int() for r in irreducibles)
    return GroupCharacterTable(g, classes, class_of, irreducibles, degrees, exponent, inv_class)


def _row_key(dr, exponent):
    deg, row = dr
    return (deg, [tuple(v.lift(exponent) if exponent % v.n == 0 else ()) for v in row])


def _raw_mul(a: dict, b: dict, e: int) -> dict:
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            key = (i + j) % e
            out[key] = out.get(key, 0) + x * y
    return out


def _raw_conj(a: dict, e: int) -> dict:
    return {(-i) % e: x for i, x in a.items()}


def _raw_value(a: dict, e: int) -> Cyclotomic:
    return Cyclotomic.from_exponents(e, a)


def _check_orthogonality(raw, sizes, inv_class, order, e):
    k = len(sizes)
    for i in range(k):
        for j in range(i, k):
            acc = {}
            for l in range(k):
                prod = _raw_mul(raw[i][1][l], _raw_conj(raw[j][1][l], e), e)
                for key, v in prod.items():
                    acc[key] = acc.get(key, 0) + v * sizes[l]
            got = _raw_value(acc, e)
            if got != (order if i == j else 0):
                raise VerificationError(f"row orthogonality fails for rows {i}, {j}")
    for l in range(k):
        for m in range(l, k):
            acc = {}
            for i in range(k):
                prod = _raw_mul(raw[i][1][l], _raw_conj(raw[i][1][m], e), e)
                for key, v in prod.items():
                    acc[key] = acc.get(key, 0) + v
            got = _raw_value(acc, e)
            if got != (order // sizes[l] if l == m else 0):
                raise VerificationError(f"column orthogonality fails for classes {l}, {m}")


# ---------------------------------------------------------------------------
# bilinear form


def inner_product(psi: Sequence, alpha: Sequence, g: Semigroup) -> Cyclotomic:
    """``(1/|G|) sum_g psi(g^-1) alpha(g)``.

    Arguments are element-indexed sequences (length |G|) or, if both are
    class functions, class-indexed (length = number of classes).
    """
    classes, class_of, inv = _class_data(g)
    n = len(g)
    if len(psi) == n and len(alpha) == n:
        total = sum((psi[inv[x]] * alpha[x] for x in range(n)), Cyclotomic.rational(0))
    elif len(psi) == len(classes) and len(alpha) == len(classes):
        inv_class = [class_of[inv[c.representative]] for c in classes]
        total = sum(
            (psi[inv_class[l]] * alpha[l] * c.size for l, c in enumerate(classes)),
            Cyclotomic.rational(0),
        )
    else:
        raise InputError("inner_product arguments must be element- or class-indexed")
    return total * Fraction(1, n)


# ---------------------------------------------------------------------------
# symmetric groups


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        if any(p <= 0 for p in self.parts) or list(self.parts) != sorted(self.parts, reverse=True):
            raise InputError(f"not a partition: {self.parts}")

    @classmethod
    def of(cls, parts) -> "Partition":
        if isinstance(parts, Partition):
            return parts
        return cls(tuple(sorted((int(p) for p in parts if int(p) != 0), reverse=True)))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> dict:
        """``{i: a_i}`` with ``a_i`` the number of parts equal to ``i``."""
        out = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions(r: int) -> list:
    """Partitions of r in reverse lexicographic order, (r) first."""
    out = []

    def rec(rem, cap, acc):
        if rem == 0:
            out.append(Partition(tuple(acc)))
            return
        for p in range(min(rem, cap), 0, -1):
            rec(rem - p, p, acc + [p])

    rec(r, r, [])
    return out


@lru_cache(maxsize=None)
def _mn(beta: frozenset, mu: tuple) -> int:
    if not mu:
        return 1
    h, rest = mu[0], mu[1:]
    total = 0
    for b in beta:
        c = b - h
        if c < 0 or c in beta:
            continue
        between = sum(1 for x in beta if c < x < b)
        total += (-1) ** between * _mn((beta - {b}) | {c}, rest)
    return total


def symmetric_character(lam, mu) -> int:
    """chi^lambda at cycle type mu (Murnaghan-Nakayama on beta-sets)."""
    lam, mu = Partition.of(lam), Partition.of(mu)
    if lam.weight != mu.weight:
        raise InputError(f"weights differ: |{lam}| = {lam.weight}, |{mu}| = {mu.weight}")
    if lam.weight > 12:
        raise BudgetError("symmetric_character supports weight <= 12", count=lam.weight)
    ell = len(lam.parts)
    beta = frozenset(p + ell - 1 - i for i, p in enumerate(lam.parts))
    return _mn(beta, mu.parts)


def hook_f(lam) -> int:
    """Number of standard Young tableaux of shape lambda."""
    lam = Partition.of(lam)
    if lam.weight > 20:
        raise BudgetError("hook_f supports weight <= 20", count=lam.weight)
    conj = [sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0] if lam.parts else 0)]
    prod = 1
    for i, row in enumerate(lam.parts):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(lam.weight) // prod


def stirling2(p: int, r: int) -> int:
    """S(p, r) from the alternating-sum formula."""
    if p < 0 or r < 0:
        raise InputError("stirling2 needs nonnegative arguments")
    total = sum((-1) ** (r - k) * math.comb(r, k) * k ** p for k in range(r + 1))
    return total // math.factorial(r)


def sign_character(s: Semigroup, e: int, g: int) -> int:
    """Sign of ``g`` as a permutation of dom e, for g in the maximal subgroup at e."""
    from . import partial_perm as pp
    from .semigroup import dom_map, ran_map

    if not s.is_concrete:
        raise InputError("sign_character needs partial-permutation elements")
    if s.table[e][e] != e or dom_map(s)[g] != e or ran_map(s)[g] != e:
        raise InputError(f"{s.labels[g]} is not in the maximal subgroup at {s.labels[e]}")
    return pp.permutation_sign(s.elements[g], s.elements[e].domain())


def cycle_type_in(s: Semigroup, e: int, g: int) -> Partition:
    """Cycle type of ``g`` on dom e (concrete semigroups)."""
    from . import partial_perm as pp

    ct = pp.cycle_type(s.elements[g]) if s.elements[e].domain() else ()
    return Partition.of(ct)


def match_symmetric_rows(table: GroupCharacterTable, cycle_types: Sequence) -> dict:
    """Map each partition to the row of ``table`` equal to chi^lambda.

    ``cycle_types[c]`` is the cycle type of class ``c``'s representative.
    """
    if not cycle_types:
        return {}
    r = Partition.of(cycle_types[0]).weight
    out = {}
    for lam in partitions(r):
        vals = [symmetric_character(lam, ct) for ct in cycle_types]
        row = next((i for i, chi in enumerate(table.irreducibles) if all(c == v for c, v in zip(chi, vals))), None)
        if row is None:
            raise VerificationError(f"no row of the table matches chi^{lam}")
        out[lam] = row
    return out

