"""Reading lattice files.

The on-disk format is UTF-8 JSON:

    {
      "elements": ["0", "a", "b", "1"],
      "order": {"kind": "covers" | "leq", "pairs": [["0", "a"], ...]},
      "multiplication": {"kind": "table", "table": [["0", ...], ...]}
                      | {"kind": "meet"} | {"kind": "trivial"}    (optional)
    }

Pairs [x, y] mean x <= y.  Unknown keys are rejected.  Schema problems raise
LatticeFileError (CLI exit 3); order/axiom problems raise the structural
errors from the core modules (CLI exit 2).
"""
from __future__ import annotations

import json
from typing import Any

from .errors import LatticeFileError
from .lattice import Lattice, build_lattice
from .multiplication import MULT_KINDS, MultLattice, attach_multiplication


def _expect_keys(obj: dict, allowed: set[str], required: set[str], where: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise LatticeFileError(f"unknown key(s) in {where}: {sorted(unknown)}")
    missing = required - set(obj)
    if missing:
        raise LatticeFileError(f"missing key(s) in {where}: {sorted(missing)}")


def parse_lattice_data(data: Any) -> tuple[Lattice, MultLattice | None]:
    """Validate parsed JSON data and build the (mult-)lattice it describes."""
    if not isinstance(data, dict):
        raise LatticeFileError("top level must be a JSON object")
    _expect_keys(data, {"elements", "order", "multiplication"},
                 {"elements", "order"}, "lattice file")

    elements = data["elements"]
    if (not isinstance(elements, list) or not elements
            or not all(isinstance(e, str) for e in elements)):
        raise LatticeFileError('"elements" must be a non-empty list of strings')

    order = data["order"]
    if not isinstance(order, dict):
        raise LatticeFileError('"order" must be an object')
    _expect_keys(order, {"kind", "pairs"}, {"kind", "pairs"}, '"order"')
    kind = order["kind"]
    if kind not in ("covers", "leq"):
        raise LatticeFileError(f'order kind must be "covers" or "leq", got {kind!r}')
    pairs = order["pairs"]
    if not isinstance(pairs, list) or not all(
            isinstance(p, list) and len(p) == 2
            and all(isinstance(x, str) for x in p) for p in pairs):
        raise LatticeFileError('"pairs" must be a list of [name, name] pairs')
    for a, b in pairs:
        if a not in elements or b not in elements:
            bad = a if a not in elements else b
            raise LatticeFileError(f"order pair references undeclared element {bad!r}")

    lat = build_lattice(elements, [tuple(p) for p in pairs], kind)

    if "multiplication" not in data:
        return lat, None
    mult = data["multiplication"]
    if not isinstance(mult, dict):
        raise LatticeFileError('"multiplication" must be an object')
    mkind = mult.get("kind")
    if mkind not in MULT_KINDS:
        raise LatticeFileError(
            f'multiplication kind must be one of {MULT_KINDS}, got {mkind!r}')
    if mkind == "table":
        _expect_keys(mult, {"kind", "table"}, {"kind", "table"}, '"multiplication"')
        table = mult["table"]
        if not isinstance(table, list) or not all(
                isinstance(row, list) and all(isinstance(x, str) for x in row)
                for row in table):
            raise LatticeFileError('"table" must be a list of lists of names')
        return lat, attach_multiplication(lat, "table", table)
    _expect_keys(mult, {"kind"}, {"kind"}, '"multiplication"')
    return lat, attach_multiplication(lat, mkind)


def load_lattice_file(path: str) -> tuple[Lattice, MultLattice | None]:
    """Load a lattice file; LatticeFileError on unreadable or malformed input."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise LatticeFileError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise LatticeFileError(f"{path} is not valid JSON: {exc}") from exc
    return parse_lattice_data(data)
