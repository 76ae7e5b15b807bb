"""JSON and CSV encodings for semigroups, characters, tables and reports.

Semigroups
    {"degree": n, "generators": [[img, ...], ...]}   closure of partial perms
    {"degree": n, "elements": [[img, ...], ...]}     an explicit closed list
    {"size": m, "table": [[...], ...]}               1-based table
  Optional keys: "name", "labels", "inverses" (close under inverses too).

Values
  Rationals print as ``num/den``; cyclotomics as sparse ``c*E(n)^k`` sums in
  increasing exponent.  JSON carries cyclotomics as {order, coeffs} records.
"""

from __future__ import annotations

import csv
import io as _io
import json
from pathlib import Path
from typing import Optional

from . import groups
from . import partial_perm as pp
from .cyclotomic import Cyclotomic, parse_cyclotomic
from .errors import InputError
from .semigroup import DEFAULT_BUDGET, Semigroup, closure, from_partial_perms, from_table


# ---------------------------------------------------------------------------
# semigroups


def _read_json(path) -> object:
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None


def semigroup_from_record(data: dict, cap: int = DEFAULT_BUDGET) -> Semigroup:
    if not isinstance(data, dict):
        raise InputError("semigroup record must be a JSON object")
    name = data.get("name", "")
    labels = data.get("labels")
    if "table" in data:
        table = data["table"]
        if "size" in data and data["size"] != len(table):
            raise InputError(f"size {data['size']} does not match a table with {len(table)} rows")
        return from_table(table, labels=labels, name=name, one_based=True)
    key = "generators" if "generators" in data else "elements" if "elements" in data else None
    if key is None:
        raise InputError("semigroup record needs 'table', 'generators' or 'elements'")
    perms = [pp.PartialPerm.from_json(g) for g in data[key]]
    if "degree" in data and any(p.degree != data["degree"] for p in perms):
        raise InputError(f"a {key[:-1]} does not have degree {data['degree']}")
    if key == "generators":
        s = closure(perms, cap=cap, name=name, with_inverses=bool(data.get("inverses", False)))
    else:
        s = from_partial_perms(perms, name=name)
    if labels is not None:
        if len(labels) != len(s):
            raise InputError(f"{len(labels)} labels for {len(s)} elements")
        s.labels = tuple(labels)
    return s


def load_semigroup(path, cap: int = DEFAULT_BUDGET) -> Semigroup:
    return semigroup_from_record(_read_json(path), cap=cap)


def semigroup_to_record(s: Semigroup) -> dict:
    out = {"name": s.name}
    if s.is_concrete:
        out["degree"] = s.degree
        out["elements"] = [x.images() for x in s.elements]
    else:
        out["size"] = len(s)
        out["table"] = [[v + 1 for v in row] for row in s.table]
        out["labels"] = list(s.labels)
    return out


# ---------------------------------------------------------------------------
# values


def value_text(v) -> str:
    return str(v)


def value_record(v: Cyclotomic) -> dict:
    return v.to_record()


def parse_value(text) -> Cyclotomic:
    if isinstance(text, dict):
        return Cyclotomic.from_record(text)
    if isinstance(text, bool) or isinstance(text, float):
        raise InputError(f"value {text!r} is not exact")
    if isinstance(text, int):
        return Cyclotomic.rational(text)
    try:
        return parse_cyclotomic(str(text))
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot parse value {text!r}") from None


def load_character_values(path, size: int) -> list:
    """Element-indexed values from a JSON list or {"values": [...]}."""
    data = _read_json(path)
    if isinstance(data, dict):
        data = data.get("values")
    if not isinstance(data, list):
        raise InputError("character file must contain a list of values")
    if len(data) != size:
        raise InputError(f"character file has {len(data)} values for {size} elements")
    return [parse_value(v) for v in data]


# ---------------------------------------------------------------------------
# output helpers


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def dump_csv(header: list, rows: list) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def read_csv(text: str) -> tuple:
    rows = list(csv.reader(_io.StringIO(text)))
    if not rows:
        raise InputError("empty CSV")
    return rows[0], rows[1:]


# ---------------------------------------------------------------------------
# group character tables


def group_table_record(table: groups.GroupCharacterTable) -> dict:
    g = table.group
    return {
        "group": g.name,
        "order": len(g),
        "classes": [
            {"representative": g.labels[c.representative], "size": c.size,
             "centralizer": c.centralizer_size}
            for c in table.classes
        ],
        "characters": [[value_record(v) for v in row] for row in table.irreducibles],
    }


def group_table_csv(table: groups.GroupCharacterTable) -> str:
    g = table.group
    header = ["character"] + [g.labels[c.representative] for c in table.classes]
    rows = [[f"chi{r}"] + [str(v) for v in row] for r, row in enumerate(table.irreducibles)]
    return dump_csv(header, rows)


def parse_group_table_csv(text: str) -> tuple:
    """(class headers, rows of Cyclotomic)."""
    header, rows = read_csv(text)
    return header[1:], [[parse_value(v) for v in r[1:]] for r in rows]


# ---------------------------------------------------------------------------
# semigroup character tables


def _column_name(t, c) -> str:
    j, _ = t.columns[c]
    return f"D{j}:{t.semigroup.labels[t.representatives[c]]}"


def char_table_record(t) -> dict:
    def mat(m):
        return [[value_record(v) for v in row] for row in m]

    return {
        "semigroup": t.semigroup.name,
        "labels": [{"d_class": l.d_class_index, "group_char": l.group_char_index} for l in t.labels],
        "columns": [
            {"d_class": j, "group_class": c, "representative": t.semigroup.labels[t.representatives[k]],
             "centralizer": t.centralizers[k]}
            for k, (j, c) in enumerate(t.columns)
        ],
        "C": mat(t.C), "Y": mat(t.Y), "A": mat(t.A), "B": mat(t.B),
    }


def char_table_from_record(rec: dict) -> dict:
    """Matrices of a char-table JSON record back as Cyclotomic lists."""
    return {k: [[Cyclotomic.from_record(v) for v in row] for row in rec[k]] for k in ("C", "Y", "A", "B")}


def char_table_csv(t) -> str:
    header = ["matrix", "row"] + [_column_name(t, c) for c in range(len(t.columns))]
    rows = []
    for name in ("C", "Y", "A", "B"):
        m = getattr(t, name)
        for r, row in enumerate(m):
            # A is indexed by classes on both sides, the others by labels on rows
            rname = _column_name(t, r) if name == "A" else str(t.labels[r])
            rows.append([name, rname] + [str(v) for v in row])
    return dump_csv(header, rows)


def parse_char_table_csv(text: str) -> dict:
    header, rows = read_csv(text)
    out: dict = {}
    for r in rows:
        out.setdefault(r[0], []).append([parse_value(v) for v in r[2:]])
    return out


# ---------------------------------------------------------------------------
# reports


def multiplicity_records(entries, degrees: Optional[dict] = None) -> list:
    out = []
    for lab, m in entries:
        rec = {"d_class": lab.d_class_index, "group_char": lab.group_char_index, "multiplicity": str(m)}
        if degrees is not None:
            rec["degree"] = degrees[lab]
        out.append(rec)
    return out


def records_csv(records: list, columns: list) -> str:
    return dump_csv(columns, [[r[c] for c in columns] for r in records])


def parse_records_csv(text: str) -> list:
    header, rows = read_csv(text)
    return [dict(zip(header, r)) for r in rows]


SPECTRUM_COLUMNS = ["J_class", "character", "eigenvalue_exact", "eigenvalue_float", "multiplicity"]
