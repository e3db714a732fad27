"""JSON instance and coloring files."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .geometry import CornerLShape, Frame, GroundedLShape, Interval, Polyline, intersection_graph
from .hypergraph import Coloring, Hypergraph, neighborhood_hypergraph

KINDS = ("intervals", "grounded_lshapes", "corner_lshapes", "frames", "strings", "hypergraph")


class InstanceFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Instance:
    kind: str
    items: Any  # list of shapes, or a Hypergraph for kind "hypergraph"
    classes: tuple[int, ...] | None = None  # optional proper coloring of a string family
    descriptor: dict | None = None  # free-form geometric notes, carried through unchanged

    def __len__(self) -> int:
        return self.items.n if self.kind == "hypergraph" else len(self.items)

    def hypergraph(self) -> Hypergraph:
        """The hypergraph a coloring of this instance is verified against."""
        if self.kind == "hypergraph":
            return self.items
        return neighborhood_hypergraph(intersection_graph(self.items))


def _ints(value, n: int | None, where: str) -> list[int]:
    if not isinstance(value, list) or (n is not None and len(value) != n):
        raise InstanceFormatError(f"{where}: expected a list of {n} integers, got {value!r}")
    for x in value:
        if not isinstance(x, int) or isinstance(x, bool):
            raise InstanceFormatError(f"{where}: {x!r} is not an integer")
    return value


def _shape(kind: str, raw, where: str):
    try:
        if kind == "intervals":
            return Interval(*_ints(raw, 2, where))
        if kind == "grounded_lshapes":
            return GroundedLShape(*_ints(raw, 3, where))
        if kind == "corner_lshapes":
            return CornerLShape(*_ints(raw, 4, where))
        if kind == "frames":
            return Frame(*_ints(raw, 4, where))
        if kind == "strings":
            if not isinstance(raw, list):
                raise InstanceFormatError(f"{where}: a string is a list of [x, y] points")
            return Polyline(tuple(tuple(_ints(p, 2, f"{where} point {j}")) for j, p in enumerate(raw)))
    except InstanceFormatError:
        raise
    except ValueError as exc:
        raise InstanceFormatError(f"{where}: {exc}") from exc
    raise InstanceFormatError(f"unknown kind {kind!r}")


def _encode_shape(item) -> list:
    if isinstance(item, Interval):
        return [item.a, item.b]
    if isinstance(item, GroundedLShape):
        return [item.x, item.depth, item.width]
    if isinstance(item, CornerLShape):
        return [item.x, item.y, item.height, item.width]
    if isinstance(item, Frame):
        return [item.x1, item.y1, item.x2, item.y2]
    if isinstance(item, Polyline):
        return [list(p) for p in item.points]
    raise TypeError(f"cannot encode {type(item).__name__}")


def instance_from_json(doc) -> Instance:
    if not isinstance(doc, dict) or "kind" not in doc or "items" not in doc:
        raise InstanceFormatError('instance must be an object with "kind" and "items"')
    kind = doc["kind"]
    if kind not in KINDS:
        raise InstanceFormatError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    raw = doc["items"]
    if kind == "hypergraph":
        if not isinstance(raw, dict) or "n" not in raw or "edges" not in raw:
            raise InstanceFormatError('hypergraph items must be {"n": int, "edges": [[ids]...]}')
        n = raw["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise InstanceFormatError(f"hypergraph n must be a non-negative integer, got {n!r}")
        if not isinstance(raw["edges"], list):
            raise InstanceFormatError("hypergraph edges must be a list")
        edges = [tuple(_ints(e, None, f"edge {i}")) for i, e in enumerate(raw["edges"])]
        try:
            items = Hypergraph(n, tuple(edges))
        except ValueError as exc:
            raise InstanceFormatError(str(exc)) from exc
    else:
        if not isinstance(raw, list):
            raise InstanceFormatError("items must be a list")
        items = [_shape(kind, r, f"item {i}") for i, r in enumerate(raw)]
    classes = doc.get("classes")
    if classes is not None:
        classes = tuple(_ints(classes, len(items), "classes"))
    return Instance(kind, items, classes, doc.get("descriptor"))


def instance_to_json(inst: Instance) -> dict:
    if inst.kind == "hypergraph":
        items = {"n": inst.items.n, "edges": [list(e) for e in inst.items.edges]}
    else:
        items = [_encode_shape(it) for it in inst.items]
    doc = {"kind": inst.kind, "items": items}
    if inst.classes is not None:
        doc["classes"] = list(inst.classes)
    if inst.descriptor is not None:
        doc["descriptor"] = inst.descriptor
    return doc


def dumps(doc) -> str:
    """Canonical text: compact separators, keys in insertion order, trailing newline."""
    return json.dumps(doc, separators=(",", ":")) + "\n"


def parse_json(text: str, source: str = "<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def read_instance(path: str) -> Instance:
    with open(path) as fh:
        text = fh.read()
    return instance_from_json(parse_json(text, path))


def write_text(path: str, text: str) -> None:
    with open(path, "w") as fh:
        fh.write(text)


def coloring_to_json(col: Coloring, algo: str, k: int, verified: bool) -> dict:
    return {"colors": list(col.colors), "palette_size": col.palette_size, "algo": algo, "k": k, "verified": verified}


def coloring_from_json(doc) -> tuple[Coloring, dict]:
    if not isinstance(doc, dict) or "colors" not in doc:
        raise InstanceFormatError('coloring must be an object with "colors"')
    colors = _ints(doc["colors"], None, "colors")
    palette = doc.get("palette_size", max(colors, default=-1) + 1)
    try:
        col = Coloring(tuple(colors), palette)
    except ValueError as exc:
        raise InstanceFormatError(str(exc)) from exc
    return col, doc


def read_coloring(path: str) -> tuple[Coloring, dict]:
    with open(path) as fh:
        text = fh.read()
    return coloring_from_json(parse_json(text, path))
