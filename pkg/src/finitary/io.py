"""JSON file formats.

Poset file::

    {"elements": ["a", "b", ...], "hasse": [["a", "b"], ...]}

Series file (omitted segments are zero, scalars use the field's syntax)::

    {"poset": "<builtin name or path>", "entries": [["x", "y", "1/2"], ...]}

A ``poset`` reference is either a builtin name (``chain:N``,
``antichain:N``, ``boolean:N``, ``diamond``, ``point``), a path resolved
relative to the referring file, or an inline poset object.

Isomorphism description file: ``{"poset_map": {...}}`` and/or
``{"conjugator": <series file path or inline series>}``.
"""

import json
import os
import re

from . import poset as _poset
from .errors import ParseError
from .poset import Poset
from .series import Series

__all__ = [
    "load_json", "poset_from_dict", "poset_to_dict", "load_poset", "dump_poset",
    "series_from_dict", "series_to_dict", "load_series", "dump_series", "resolve_poset",
]


def load_json(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON: {e.msg}", e.lineno, e.colno) from None


def _require(cond, msg):
    if not cond:
        raise ParseError(msg)


def poset_from_dict(d, where="poset"):
    _require(isinstance(d, dict), f"{where}: expected a JSON object")
    els = d.get("elements")
    _require(isinstance(els, list) and all(isinstance(e, str) for e in els),
             f"{where}: 'elements' must be a list of strings")
    hasse = d.get("hasse", [])
    _require(isinstance(hasse, list), f"{where}: 'hasse' must be a list of pairs")
    for i, e in enumerate(hasse):
        _require(isinstance(e, list) and len(e) == 2 and all(isinstance(v, str) for v in e),
                 f"{where}: hasse entry {i} must be a pair of element ids")
    return Poset(els, [tuple(e) for e in hasse])


def poset_to_dict(p):
    return p.to_dict()


_BUILTIN = re.compile(r"(chain|antichain|boolean):(\d+)|diamond|point")


def builtin_poset(name):
    m = _BUILTIN.fullmatch(name)
    if m is None:
        return None
    if name == "diamond":
        return _poset.diamond()
    if name == "point":
        return _poset.point()
    kind, n = m.group(1), int(m.group(2))
    return {"chain": _poset.chain, "antichain": _poset.antichain,
            "boolean": _poset.boolean_lattice}[kind](n)


def resolve_poset(ref, base_dir="."):
    """Turn a poset reference (name, path or inline object) into a Poset."""
    if isinstance(ref, dict):
        return poset_from_dict(ref)
    _require(isinstance(ref, str), "poset reference must be a string or object")
    p = builtin_poset(ref)
    if p is not None:
        return p
    return load_poset(os.path.join(base_dir, ref))


def load_poset(path):
    ref = builtin_poset(path) if not os.path.exists(path) else None
    if ref is not None:
        return ref
    return poset_from_dict(load_json(path), where=str(path))


def dump_poset(p):
    return json.dumps(poset_to_dict(p), indent=2, ensure_ascii=False)


def series_from_dict(d, field, poset=None, base_dir=".", where="series"):
    """Parse a series object.  ``poset`` overrides the file's own poset reference."""
    _require(isinstance(d, dict), f"{where}: expected a JSON object")
    if poset is None:
        _require("poset" in d, f"{where}: missing 'poset' reference")
        poset = resolve_poset(d["poset"], base_dir)
    entries = d.get("entries", [])
    _require(isinstance(entries, list), f"{where}: 'entries' must be a list")
    triples = []
    for i, e in enumerate(entries):
        _require(isinstance(e, list) and len(e) == 3 and isinstance(e[0], str)
                 and isinstance(e[1], str) and isinstance(e[2], (str, int))
                 and not isinstance(e[2], bool),
                 f"{where}: entry {i} must be [lo, hi, scalar]")
        try:
            v = field(e[2])
        except ParseError as err:
            raise ParseError(f"{where}: entry {i} ({e[0]!r}, {e[1]!r}): {err}") from None
        triples.append((e[0], e[1], v))
    return Series(poset, triples, field)


def series_to_dict(s, poset_ref):
    return {"poset": poset_ref,
            "entries": [[x, y, str(v)] for (x, y), v in s.items()]}


def load_series(path, field, poset=None):
    return series_from_dict(load_json(path), field, poset,
                            base_dir=os.path.dirname(os.path.abspath(path)), where=str(path))


def dump_series(s, poset_ref):
    return json.dumps(series_to_dict(s, poset_ref), indent=2, ensure_ascii=False)
