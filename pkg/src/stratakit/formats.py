"""Presentation files and result documents.

A presentation file is JSON with exactly three top-level keys, in this order::

    {
      "vertices": ["1", "2"],
      "arrows": [{"label": "a.1.1", "source": "1", "target": "2", "degree": 0}],
      "relations": [["b.1.1", "a.1.1"]]
    }

Relations are ``[later, earlier]`` pairs.  ``degree`` may be omitted on input
and then defaults to 0.  The canonical form written by :func:`dumps_presentation`
keeps arrows in declaration order, sorts relations by the declaration order of
their arrows, always writes ``degree``, and uses two-space indentation with a
trailing newline.
"""

from __future__ import annotations

import json
from typing import Any, Mapping

from .algebra import Arrow, QuiverPresentation, validate
from .errors import PresentationError
from .homology import HHProfile

PRESENTATION_KEYS = ("vertices", "arrows", "relations")
ARROW_KEYS = ("label", "source", "target", "degree")


def presentation_to_dict(presentation: QuiverPresentation) -> dict[str, Any]:
    canon = presentation.canonical()
    return {
        "vertices": list(canon.vertices),
        "arrows": [{"label": a.label, "source": a.source, "target": a.target, "degree": a.degree} for a in canon.arrows],
        "relations": [list(r) for r in canon.relations],
    }


def presentation_from_dict(doc: Any) -> QuiverPresentation:
    if not isinstance(doc, Mapping):
        raise PresentationError("presentation document must be a JSON object")
    extra = set(doc) - set(PRESENTATION_KEYS)
    if extra:
        raise PresentationError(f"unknown top-level keys: {sorted(extra)}")
    vertices = doc.get("vertices")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise PresentationError("'vertices' must be a list of strings")
    arrows = []
    for rec in doc.get("arrows", []):
        if not isinstance(rec, Mapping):
            raise PresentationError("each arrow must be an object")
        missing = {"label", "source", "target"} - set(rec)
        if missing:
            raise PresentationError(f"arrow record missing {sorted(missing)}")
        extra = set(rec) - set(ARROW_KEYS)
        if extra:
            raise PresentationError(f"arrow record has unknown keys {sorted(extra)}")
        degree = rec.get("degree", 0)
        if isinstance(degree, bool) or not isinstance(degree, int):
            raise PresentationError(f"arrow {rec['label']!r}: degree must be an integer")
        for key in ("label", "source", "target"):
            if not isinstance(rec[key], str):
                raise PresentationError(f"arrow {key} must be a string")
        arrows.append(Arrow(rec["label"], rec["source"], rec["target"], degree))
    relations = []
    for rel in doc.get("relations", []):
        if not (isinstance(rel, list) and len(rel) == 2 and all(isinstance(r, str) for r in rel)):
            raise PresentationError(f"relation {rel!r} must be a two-element list of labels")
        relations.append(tuple(rel))
    return validate(QuiverPresentation(tuple(vertices), tuple(arrows), tuple(relations)))


def dumps_presentation(presentation: QuiverPresentation) -> str:
    return json.dumps(presentation_to_dict(presentation), indent=2) + "\n"


def loads_presentation(text: str) -> QuiverPresentation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PresentationError(f"not valid JSON: {exc.msg} at line {exc.lineno}") from exc
    return presentation_from_dict(doc)


def profile_pairs(profile: HHProfile) -> list[list[int]]:
    """Sorted ``[degree, dimension]`` pairs; zero dimensions are left out."""
    return [[p, d] for p, d in profile.items()]


def result_document(input_doc: Any, name: str, parameters: Mapping[str, Any], result: Any, *, version: str, elapsed_ms: int) -> dict:
    return {
        "input": input_doc,
        "computation": {"name": name, "parameters": dict(parameters)},
        "result": result,
        "meta": {"tool": "stratakit", "version": version, "elapsed_ms": elapsed_ms},
    }


def _flat_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        if value and all(isinstance(v, list) for v in value):
            return ";".join(":".join(_flat_value(x) for x in v) for v in value)
        return ";".join(_flat_value(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    return str(value)


def flatten(result: Any, prefix: str = "") -> dict[str, str]:
    """Dotted keys to strings, used for CSV and table output.

    Lists of pairs become ``a:b;c:d``; other lists are ``;``-joined.
    """
    if not isinstance(result, Mapping):
        return {prefix or "value": _flat_value(result)}
    out: dict[str, str] = {}
    for k, v in result.items():
        key = f"{prefix}.{k}" if prefix else str(k)
        if isinstance(v, Mapping):
            out.update(flatten(v, key))
        else:
            out[key] = _flat_value(v)
    return out
