"""Finite matrix tuples: the model type, word-indexed products, serialization.

A tuple holds r square matrices of equal dimension d over a declared
field ("real" or "complex").  The JSON wire format is

    {"field": "real", "r": 2, "d": 2, "matrices": [[[0, 1], [0, 0]], ...]}

with each matrix given as d rows of d entries.  Complex entries are
two-element arrays [re, im].  Unknown top-level keys are ignored so
files carrying extra metadata (e.g. a "truth" block) round-trip.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import InputError
from .words import Word, validate_word

_FIELDS = ("real", "complex")


@dataclass(frozen=True, eq=False)
class MatrixTuple:
    """Immutable ordered tuple of square matrices with a field tag."""

    field: str
    matrices: tuple[np.ndarray, ...]

    __hash__ = None

    def __eq__(self, other):
        if not isinstance(other, MatrixTuple):
            return NotImplemented
        return (
            self.field == other.field
            and len(self.matrices) == len(other.matrices)
            and all(
                np.array_equal(a, b)
                for a, b in zip(self.matrices, other.matrices)
            )
        )

    def __post_init__(self):
        if self.field not in _FIELDS:
            raise InputError(f"field must be one of {_FIELDS}, got {self.field!r}")
        if len(self.matrices) < 1:
            raise InputError("a matrix tuple needs at least one slot")
        dtype = np.complex128 if self.field == "complex" else np.float64
        frozen = []
        d = None
        for idx, raw in enumerate(self.matrices):
            a = np.asarray(raw)
            if self.field == "real" and np.iscomplexobj(a):
                if np.any(a.imag != 0):
                    raise InputError(f"slot {idx + 1} has complex entries in a real tuple")
                a = a.real
            a = np.array(a, dtype=dtype)
            if a.ndim != 2 or a.shape[0] != a.shape[1]:
                raise InputError(f"slot {idx + 1} is not square: shape {a.shape}")
            if d is None:
                d = a.shape[0]
            elif a.shape[0] != d:
                raise InputError(
                    f"slot {idx + 1} has dimension {a.shape[0]}, expected {d}"
                )
            if not np.all(np.isfinite(a)):
                raise InputError(f"slot {idx + 1} has non-finite entries")
            a.flags.writeable = False
            frozen.append(a)
        if d < 1:
            raise InputError("matrix dimension must be >= 1")
        object.__setattr__(self, "matrices", tuple(frozen))

    @property
    def r(self) -> int:
        return len(self.matrices)

    @property
    def d(self) -> int:
        return self.matrices[0].shape[0]

    def slot(self, letter: int) -> np.ndarray:
        """Matrix for a 1-based letter."""
        if not 1 <= letter <= self.r:
            raise InputError(f"letter {letter} outside alphabet 1..{self.r}")
        return self.matrices[letter - 1]


def product_along(t: MatrixTuple, w: Word) -> np.ndarray:
    """Matrix product read off a word.

    The first letter names the rightmost factor, so for w = (w1, ..., wn)
    the result is A_wn @ ... @ A_w1: letters are applied to a vector in
    reading order.
    """
    w = validate_word(w, t.r)
    out = t.slot(w[0])
    for letter in w[1:]:
        out = t.slot(letter) @ out
    return out


def tuple_distance(s: MatrixTuple, t: MatrixTuple) -> float:
    """max over slots of the Euclidean operator norm of the difference."""
    if s.r != t.r or s.d != t.d:
        raise InputError(
            f"shape mismatch: ({s.r} slots, d={s.d}) vs ({t.r} slots, d={t.d})"
        )
    return max(
        linalg.op_norm(a - b) for a, b in zip(s.matrices, t.matrices)
    )


def scale(t: MatrixTuple, c) -> MatrixTuple:
    """Multiply every slot by the scalar c (complex c needs a complex tuple)."""
    if t.field == "real" and isinstance(c, complex):
        raise InputError("complex scale factor on a real tuple")
    return MatrixTuple(t.field, tuple(c * a for a in t.matrices))


def exterior_square_tuple(t: MatrixTuple) -> MatrixTuple:
    """Apply the second exterior power to every slot."""
    if t.d < 2:
        raise InputError("exterior square needs dimension >= 2")
    return MatrixTuple(t.field, tuple(linalg.exterior_square(a) for a in t.matrices))


def _entry_to_json(x, field: str):
    if field == "complex":
        return [float(np.real(x)), float(np.imag(x))]
    return float(np.real(x))


def _entry_from_json(x, field: str, where: str):
    if field == "complex":
        if not (isinstance(x, list) and len(x) == 2):
            raise InputError(f"{where}: complex entries must be [re, im] pairs")
        re, im = x
        if not all(isinstance(v, (int, float)) for v in (re, im)):
            raise InputError(f"{where}: non-numeric entry")
        return complex(re, im)
    if not isinstance(x, (int, float)) or isinstance(x, bool):
        raise InputError(f"{where}: non-numeric entry")
    return float(x)


def to_json_dict(t: MatrixTuple) -> dict:
    return {
        "field": t.field,
        "r": t.r,
        "d": t.d,
        "matrices": [
            [[_entry_to_json(x, t.field) for x in row] for row in np.asarray(a)]
            for a in t.matrices
        ],
    }


def from_json_dict(payload: dict) -> MatrixTuple:
    if not isinstance(payload, dict):
        raise InputError("tuple payload must be a JSON object")
    for key in ("field", "r", "d", "matrices"):
        if key not in payload:
            raise InputError(f"tuple payload missing key {key!r}")
    field = payload["field"]
    if field not in _FIELDS:
        raise InputError(f"field must be one of {_FIELDS}, got {field!r}")
    r, d = payload["r"], payload["d"]
    if not isinstance(r, int) or not isinstance(d, int) or r < 1 or d < 1:
        raise InputError("r and d must be positive integers")
    mats = payload["matrices"]
    if not isinstance(mats, list) or len(mats) != r:
        raise InputError(f"expected {r} matrices, got {len(mats) if isinstance(mats, list) else 'non-list'}")
    parsed = []
    for i, rows in enumerate(mats):
        where = f"matrix {i + 1}"
        if not isinstance(rows, list) or len(rows) != d:
            raise InputError(f"{where}: expected {d} rows")
        mat = []
        for row in rows:
            if not isinstance(row, list) or len(row) != d:
                raise InputError(f"{where}: expected rows of {d} entries")
            mat.append([_entry_from_json(x, field, where) for x in row])
        parsed.append(mat)
    return MatrixTuple(field, tuple(np.array(m) for m in parsed))


def to_json(t: MatrixTuple, extra: dict | None = None) -> str:
    payload = to_json_dict(t)
    if extra:
        payload.update(extra)
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def from_json(text: str) -> MatrixTuple:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc
    return from_json_dict(payload)
