"""Reading and writing code-spec JSON files and sequence text files.

A code-spec document looks like

    {"field": {"p": 2, "n": 2, "modulus": [1, 1, 1], "theta_r": 1},
     "k": 1, "n": 2, "module_side": "left",
     "G": [[[1, 2], [2, 3]]]}

where G[i][j] is the ascending-D coefficient list of generator entry (i, j)
as field-element integers.  module_side selects the left-module convolutional
encoding or the right-module trellis encoding.

Sequence files carry whitespace-separated field-element integers, one time
block per line.
"""

import json

from .code import Sequence, SkewConvCode
from .field import FiniteField
from .skewpoly import SkewPolyMatrix
from .skewtrellis import SkewTrellisCode

__all__ = [
    "CodeSpecError",
    "load_code",
    "loads_code",
    "code_to_dict",
    "dumps_code",
    "parse_sequence",
    "format_sequence",
]


class CodeSpecError(ValueError):
    pass


def _field_from_dict(doc):
    try:
        p = int(doc["p"])
        n = int(doc["n"])
    except KeyError as exc:
        raise CodeSpecError(f"field block is missing {exc}") from None
    modulus = doc.get("modulus")
    theta_r = int(doc.get("theta_r", 0))
    try:
        return FiniteField(p, n, modulus=modulus, theta_r=theta_r)
    except ValueError as exc:
        raise CodeSpecError(f"bad field block: {exc}") from None


def code_from_dict(doc):
    if not isinstance(doc, dict):
        raise CodeSpecError("code spec must be a JSON object")
    for key in ("field", "k", "n", "G"):
        if key not in doc:
            raise CodeSpecError(f"code spec is missing {key!r}")
    field = _field_from_dict(doc["field"])
    k, n = int(doc["k"]), int(doc["n"])
    table = doc["G"]
    if len(table) != k or any(len(row) != n for row in table):
        raise CodeSpecError(f"G must be a {k} x {n} array of coefficient arrays")
    side = doc.get("module_side", "left")
    if side not in ("left", "right"):
        raise CodeSpecError(f"module_side must be 'left' or 'right', got {side!r}")
    try:
        generator = SkewPolyMatrix.from_ints(field, table)
        cls = SkewConvCode if side == "left" else SkewTrellisCode
        return cls(generator)
    except ValueError as exc:
        raise CodeSpecError(str(exc)) from None


def loads_code(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodeSpecError(f"line {exc.lineno}: {exc.msg}") from None
    return code_from_dict(doc)


def load_code(path):
    with open(path, "r", encoding="utf-8") as fh:
        return loads_code(fh.read())


def code_to_dict(code):
    side = "right" if isinstance(code, SkewTrellisCode) else "left"
    f = code.field
    return {
        "field": {
            "p": f.p,
            "n": f.n,
            "modulus": list(f.modulus),
            "theta_r": f.theta_r,
        },
        "k": code.k,
        "n": code.n,
        "module_side": side,
        "G": code.generator.to_ints(),
    }


def dumps_code(code):
    return json.dumps(code_to_dict(code), sort_keys=True, indent=2) + "\n"


def parse_sequence(field, text, width, what="block"):
    """One time block per non-empty line, `width` integers each; errors carry
    1-based line numbers."""
    blocks = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != width:
            raise CodeSpecError(
                f"line {lineno}: expected {width} symbols per {what}, got {len(parts)}"
            )
        try:
            symbols = [int(p) for p in parts]
        except ValueError:
            raise CodeSpecError(f"line {lineno}: symbols must be integers") from None
        for s in symbols:
            if not 0 <= s < field.size:
                raise CodeSpecError(
                    f"line {lineno}: symbol {s} outside [0, {field.size})"
                )
        blocks.append(symbols)
    return Sequence(field, blocks, width=width)


def format_sequence(seq, pretty=False):
    lines = []
    for block in seq.blocks:
        if pretty:
            lines.append(" ".join(seq.field.element_name(c.value) for c in block))
        else:
            lines.append(" ".join(str(c.value) for c in block))
    return "\n".join(lines) + ("\n" if lines else "")
