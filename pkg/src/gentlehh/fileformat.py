"""Reading and writing the triangulation file format.

A triangulation file is a UTF-8 JSON document

    {"name": "...", "triangles": [[side, side, side], ...]}

where each side is ``{"label": str, "kind": "arc"|"boundary",
"from": str, "to": str}`` and the three sides of a triangle are listed in
counter-clockwise order.  Extra top-level keys (fixture expectations,
notes) are ignored by the parser.
"""

import json

from .surface import ARC, BOUNDARY, Side, Triangle, TriangulationInput


class FormatError(ValueError):
    """The document is not a well-formed triangulation file."""


def parse_triangulation(doc) -> TriangulationInput:
    """Build a :class:`TriangulationInput` from a decoded JSON document."""
    if not isinstance(doc, dict):
        raise FormatError("top level must be a JSON object")
    name = doc.get("name")
    if not isinstance(name, str) or not name:
        raise FormatError("missing or empty 'name'")
    raw_triangles = doc.get("triangles")
    if not isinstance(raw_triangles, list) or not raw_triangles:
        raise FormatError("'triangles' must be a non-empty list")

    triangles = []
    for t_idx, raw_tri in enumerate(raw_triangles):
        if not isinstance(raw_tri, list) or len(raw_tri) != 3:
            raise FormatError("triangle %d must be a list of three sides" % t_idx)
        sides = []
        for s_idx, raw_side in enumerate(raw_tri):
            if not isinstance(raw_side, dict):
                raise FormatError(
                    "triangle %d side %d must be an object" % (t_idx, s_idx))
            try:
                label = raw_side["label"]
                kind = raw_side["kind"]
                src = raw_side["from"]
                dst = raw_side["to"]
            except KeyError as exc:
                raise FormatError(
                    "triangle %d side %d: missing key %s" % (t_idx, s_idx, exc))
            if kind not in (ARC, BOUNDARY):
                raise FormatError(
                    "triangle %d side %d: kind must be 'arc' or 'boundary', "
                    "got %r" % (t_idx, s_idx, kind))
            for value in (label, src, dst):
                if not isinstance(value, str) or not value:
                    raise FormatError(
                        "triangle %d side %d: labels and vertex names must be "
                        "non-empty strings" % (t_idx, s_idx))
            sides.append(Side(label=label, kind=kind, src=src, dst=dst))
        triangles.append(Triangle(sides=(sides[0], sides[1], sides[2])))
    return TriangulationInput(name=name, triangles=tuple(triangles))


def loads(text: str) -> TriangulationInput:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("invalid JSON: %s" % exc)
    return parse_triangulation(doc)


def load_file(path) -> TriangulationInput:
    with open(path, encoding="utf-8") as handle:
        return loads(handle.read())


def as_document(data: TriangulationInput) -> dict:
    """Serialize back to the file format (inverse of parse_triangulation)."""
    return {
        "name": data.name,
        "triangles": [
            [
                {"label": s.label, "kind": s.kind, "from": s.src, "to": s.dst}
                for s in tri.sides
            ]
            for tri in data.triangles
        ],
    }


def dumps(data: TriangulationInput) -> str:
    return json.dumps(as_document(data), indent=2) + "\n"


def dump_file(data: TriangulationInput, path):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(data))
