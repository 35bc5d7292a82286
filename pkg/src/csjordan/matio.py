"""JSON documents for matrices, conjugations, class elements, and reports.

One shared matrix layout: field `n` and field `data`, a row-major list of
[re, im] pairs of length n squared.  Conjugations are their defining
unitary tagged with kind "conjugation"; class elements pair a matrix with
its conjugation.  Writes are atomic (temp file then rename) and floats are
serialized at full round-trip precision.
"""

from __future__ import annotations

import json
import os
import tempfile

import numpy as np

from . import errors
from .conjugation import Conjugation
from .jordan_space import symmetric_element


def matrix_to_doc(a):
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise errors.InvalidDimension("only square matrices serialize")
    n = int(a.shape[0])
    data = [[float(z.real), float(z.imag)] for z in a.reshape(-1)]
    return {"n": n, "data": data}


def doc_to_matrix(doc):
    if not isinstance(doc, dict):
        raise errors.ParseError("matrix document must be an object", field="document")
    if "n" not in doc:
        raise errors.ParseError("missing dimension", field="n")
    n = doc["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise errors.ParseError("dimension must be a positive integer", field="n")
    if "data" not in doc:
        raise errors.ParseError("missing entries", field="data")
    data = doc["data"]
    if not isinstance(data, list) or len(data) != n * n:
        raise errors.ParseError(
            "data must hold exactly n*n entries", field="data"
        )
    flat = np.empty(n * n, dtype=np.complex128)
    for k, pair in enumerate(data):
        if (
            not isinstance(pair, (list, tuple))
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        ):
            raise errors.ParseError(
                "each entry must be a [re, im] pair of numbers", field="data"
            )
        flat[k] = complex(pair[0], pair[1])
    if not np.all(np.isfinite(flat.view(np.float64))):
        raise errors.ParseError("entries must be finite", field="data")
    return flat.reshape(n, n)


def conjugation_to_doc(c):
    doc = matrix_to_doc(c.u)
    doc["kind"] = "conjugation"
    return doc


def doc_to_conjugation(doc, tol=None):
    if isinstance(doc, dict) and doc.get("kind") not in (None, "conjugation"):
        raise errors.ParseError("expected a conjugation document", field="kind")
    return Conjugation(doc_to_matrix(doc), tol=tol)


def element_to_doc(e):
    return {
        "kind": "element",
        "matrix": matrix_to_doc(e.a),
        "conjugation": conjugation_to_doc(e.conj),
    }


def doc_to_element(doc, tol=None):
    if not isinstance(doc, dict):
        raise errors.ParseError("element document must be an object", field="document")
    if "matrix" not in doc or "conjugation" not in doc:
        raise errors.ParseError(
            "element documents need matrix and conjugation", field="matrix"
        )
    c = doc_to_conjugation(doc["conjugation"], tol=tol)
    return symmetric_element(c, doc_to_matrix(doc["matrix"]), tol=tol)


def _read_doc(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise errors.IoFailure(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except ValueError as exc:
        raise errors.ParseError(f"{path} is not valid JSON: {exc}") from exc


def _jsonable(obj):
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.complexfloating,)) or isinstance(obj, complex):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _write_doc(doc, path):
    # write-to-temp plus rename so readers never observe a torn report
    try:
        text = json.dumps(doc, sort_keys=True, indent=2, default=_jsonable)
    except (TypeError, ValueError) as exc:
        raise errors.IoFailure(f"report is not serializable: {exc}") from exc
    directory = os.path.dirname(os.path.abspath(path)) or "."
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(text)
                fh.write("\n")
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    except OSError as exc:
        raise errors.IoFailure(f"cannot write {path}: {exc}") from exc


def load_matrix(path):
    """Read a bare matrix document.  Also accepts a class-element document,
    returning just its matrix part."""
    doc = _read_doc(path)
    if isinstance(doc, dict) and "matrix" in doc:
        return doc_to_matrix(doc["matrix"])
    return doc_to_matrix(doc)


def save_matrix(a, path):
    _write_doc(matrix_to_doc(a), path)


def load_conjugation(path, tol=None):
    return doc_to_conjugation(_read_doc(path), tol=tol)


def save_conjugation(c, path):
    _write_doc(conjugation_to_doc(c), path)


def load_element(path, tol=None):
    return doc_to_element(_read_doc(path), tol=tol)


def save_element(e, path):
    _write_doc(element_to_doc(e), path)


def save_report(report, path):
    _write_doc(report, path)


def load_report(path):
    return _read_doc(path)
