"""JSON encodings of algebras, functionals, subspaces and reports.

The algebra file format is:

    {"dim": 3, "basis": ["Z", "X", "Y"],
     "brackets": [{"i": 2, "j": 3, "coeffs": {"1": "1"}}]}

with 1-based indices, i < j, and rationals written as "p/q" ("/1" omitted).
Emission is canonical (sorted keys, fixed indentation), so emitting a parsed
document reproduces it byte for byte.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Sequence

from .algebra import LieAlgebra, lie_algebra
from .coadjoint import Functional
from .linalg import Subspace


class FormatError(ValueError):
    pass


def frac_str(x: Fraction) -> str:
    return str(x)  # Fraction renders "p/q" and omits "/1"


def frac_parse(text: str) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as e:
        raise FormatError(f"bad rational {text!r}: {e}") from e


def algebra_to_dict(g: LieAlgebra) -> dict:
    brackets = []
    for i, j, coeffs in g.brackets:
        brackets.append(
            {
                "i": i + 1,
                "j": j + 1,
                "coeffs": {str(k + 1): frac_str(c) for k, c in coeffs},
            }
        )
    return {"dim": g.dim, "basis": list(g.basis_names), "brackets": brackets}


def algebra_from_dict(doc) -> LieAlgebra:
    if not isinstance(doc, dict):
        raise FormatError("algebra document must be a JSON object")
    try:
        dim = int(doc["dim"])
        basis = [str(s) for s in doc["basis"]]
        raw = doc.get("brackets", [])
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError(f"malformed algebra document: {e}") from e
    if dim < 0:
        raise FormatError(f"negative dimension {dim}")
    if len(basis) != dim:
        raise FormatError(f"{len(basis)} basis names for dimension {dim}")
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for entry in raw:
        try:
            i = int(entry["i"])
            j = int(entry["j"])
            coeffs = entry["coeffs"]
        except (KeyError, TypeError, ValueError) as e:
            raise FormatError(f"malformed bracket entry {entry!r}: {e}") from e
        if not (1 <= i < j <= dim):
            raise FormatError(f"bracket indices ({i}, {j}) out of range for dim {dim}")
        if (i - 1, j - 1) in brackets:
            raise FormatError(f"duplicate bracket pair ({i}, {j})")
        parsed = {}
        for k, c in coeffs.items():
            ki = int(k)
            if not 1 <= ki <= dim:
                raise FormatError(f"bracket target {ki} out of range in ({i}, {j})")
            val = frac_parse(c)
            if val:
                parsed[ki - 1] = val
        brackets[(i - 1, j - 1)] = parsed
    return lie_algebra(dim, basis, brackets)


def dumps_canonical(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def algebra_to_json(g: LieAlgebra) -> str:
    return dumps_canonical(algebra_to_dict(g))


def algebra_from_json(text: str) -> LieAlgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}") from e
    return algebra_from_dict(doc)


def algebra_hash(g: LieAlgebra) -> str:
    return hashlib.sha256(algebra_to_json(g).encode()).hexdigest()


def functional_to_list(xi: Functional) -> list[str]:
    return [frac_str(c) for c in xi.coords]


def functional_from_list(g: LieAlgebra, entries: Sequence) -> Functional:
    if len(entries) != g.dim:
        raise FormatError(f"functional needs {g.dim} coordinates, got {len(entries)}")
    return Functional(g, tuple(frac_parse(e) for e in entries))


def subspace_to_rows(sub: Subspace) -> list[list[str]]:
    return [[frac_str(c) for c in row] for row in sub.basis]


def label_to_list(label: Sequence[int]) -> list[int]:
    return list(label)


def fine_label_to_list(fine: Sequence[Sequence[int]]) -> list[list[int]]:
    return [list(e) for e in fine]
