"""JSON input files for manifolds, hyper-Kähler weight data, vectors and matrices.

Numbers may be JSON integers or strings such as ``"3/4"``; vector entries
may also be polynomial expressions in named unknowns (``"a0"``, ``"Z - a0*h^2"``).
"""

from __future__ import annotations

import json
import os
from importlib import resources
from pathlib import Path

from .alexander import AlexanderPolynomial
from .berezin import AntisymMatrix
from .manifold import ClassicalData
from .rw import HyperKahlerWeightData
from .series import MultiPoly, as_fraction

__all__ = [
    "InputParseError",
    "PRESET_ENV",
    "preset_dir",
    "resolve",
    "load_json",
    "manifold_from_dict",
    "manifold_to_dict",
    "space_from_dict",
    "space_to_dict",
    "load_manifold",
    "load_space",
    "load_vector",
    "load_matrix",
    "format_value",
]

PRESET_ENV = "QI_PRESET_DIR"


class InputParseError(ValueError):
    """The file is missing, is not JSON, or lacks a required field."""


def preset_dir() -> Path:
    override = os.environ.get(PRESET_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("qinv") / "presets"))


def resolve(ref: str) -> Path:
    """A path on disk, or the name of a preset (with or without ``.json``)."""
    path = Path(ref)
    if path.is_file():
        return path
    name = ref[:-5] if ref.endswith(".json") else ref
    if name.startswith("presets/"):
        name = name[len("presets/"):]
    candidate = preset_dir() / f"{name}.json"
    if candidate.is_file():
        return candidate
    raise InputParseError(f"no such file or preset: {ref}")


def load_json(ref: str) -> dict:
    path = resolve(ref)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputParseError(f"{path}: {exc}") from exc
    if not isinstance(data, dict):
        raise InputParseError(f"{path}: top level must be an object")
    return data


def _number(value, field: str):
    try:
        return as_fraction(value)
    except (TypeError, ValueError) as exc:
        raise InputParseError(f"{field}: {exc}") from exc


def _int(value, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputParseError(f"{field} must be an integer, got {value!r}")
    return value


def manifold_from_dict(data: dict) -> ClassicalData:
    """Parse a manifold description; invariant violations surface as DataInvariantError."""
    if "b1" not in data:
        raise InputParseError("manifold file needs b1")
    alexander = None
    if data.get("alexander") is not None:
        coeffs = data["alexander"]
        if not isinstance(coeffs, list) or not coeffs:
            raise InputParseError("alexander must be a non-empty list of t^0..t^d coefficients")
        alexander = AlexanderPolynomial.from_half([_number(c, "alexander") for c in coeffs])
    mu = data.get("linkingMu")
    cup = data.get("cupTriple")
    return ClassicalData(
        b1=_int(data["b1"], "b1"),
        tor_order=_int(data.get("torOrder", 1), "torOrder"),
        cup_triple=None if cup is None else _int(cup, "cupTriple"),
        linking_mu=None if mu is None else _number(mu, "linkingMu"),
        alexander=alexander,
        name=str(data.get("name", "")),
    )


def manifold_to_dict(d: ClassicalData) -> dict:
    out = {"name": d.name, "b1": d.b1, "torOrder": d.tor_order}
    if d.cup_triple is not None:
        out["cupTriple"] = d.cup_triple
    if d.linking_mu is not None:
        out["linkingMu"] = str(d.linking_mu)
    if d.alexander is not None:
        out["alexander"] = [int(c) if c.denominator == 1 else str(c) for c in d.alexander.body.half]
    return out


def space_from_dict(data: dict) -> HyperKahlerWeightData:
    for key in ("n", "eulerChar", "pairing"):
        if key not in data:
            raise InputParseError(f"space file needs {key}")
    if not isinstance(data["pairing"], dict):
        raise InputParseError("pairing must map partition strings to numbers")
    try:
        pairing = {k: _number(v, f"pairing[{k}]") for k, v in data["pairing"].items()}
        return HyperKahlerWeightData(
            str(data.get("name", "")), _int(data["n"], "n"), _number(data["eulerChar"], "eulerChar"), pairing
        )
    except ValueError as exc:
        if type(exc) is ValueError:  # bad partition key
            raise InputParseError(str(exc)) from exc
        raise


def space_to_dict(x: HyperKahlerWeightData) -> dict:
    from .rw import format_partition

    return {
        "name": x.name,
        "n": x.n,
        "eulerChar": str(x.euler_char),
        "pairing": {format_partition(k): str(v) for k, v in x.pairing.items()},
    }


def load_manifold(ref: str) -> ClassicalData:
    return manifold_from_dict(load_json(ref))


def load_space(ref: str) -> HyperKahlerWeightData:
    return space_from_dict(load_json(ref))


def _entry(value):
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return _number(value, "value")
    if isinstance(value, str):
        try:
            return as_fraction(value)
        except ValueError:
            pass
        try:
            return MultiPoly.parse(value)
        except Exception as exc:  # sympy raises a zoo of exception types
            raise InputParseError(f"cannot parse {value!r}: {exc}") from exc
    raise InputParseError(f"unsupported entry {value!r}")


def load_vector(ref: str) -> list:
    """``{"n": n, "values": [v_0, ..., v_n]}``."""
    data = load_json(ref)
    values = data.get("values")
    if not isinstance(values, list):
        raise InputParseError("vector file needs a values list")
    if "n" in data and _int(data["n"], "n") != len(values) - 1:
        raise InputParseError(f"n = {data['n']} but {len(values)} values given")
    return [_entry(v) for v in values]


def load_matrix(ref: str) -> AntisymMatrix:
    data = load_json(ref)
    rows = data.get("matrix")
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputParseError("matrix file needs a list of rows")
    entries = tuple(tuple(_number(v, "matrix") for v in r) for r in rows)
    try:
        return AntisymMatrix(entries)
    except ValueError as exc:
        from .errors import DataInvariantError

        raise DataInvariantError(str(exc)) from exc


def format_value(value) -> str:
    """Exact text for a Fraction, int or MultiPoly (never a decimal)."""
    if hasattr(value, "is_constant") and value.is_constant():
        value = value.constant_value()
    return str(value)
