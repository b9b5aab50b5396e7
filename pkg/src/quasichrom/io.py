"""Reading and writing instance files.

An instance file is JSON::

    {"group": "Z^2 + Z/4", "list": [[2, 2, 1], [0, 2, 3]]}

or, for a CW instance, ``{"cw": {"A": [[...], ...], "B": [[...], ...], "ell": n}}``
where each inner array of ``A`` and ``B`` is one column vector of length ``ell``.
Graphs use the text format ``n_vertices`` followed by one ``i j`` edge per
line (1-indexed); ``;`` may replace newlines.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .abelian import ElementList, FgAbelianGroup
from .errors import InputError, ParseError
from .transforms import CwInstance, cw_to_bm


@dataclass(frozen=True)
class Instance:
    group: FgAbelianGroup | None = None
    elements: ElementList | None = None
    cw: CwInstance | None = None

    def pair(self) -> tuple[FgAbelianGroup, ElementList]:
        """The pair to compute with; CW-only instances are converted first."""
        if self.elements is not None:
            return self.elements.group, self.elements
        if self.cw is not None:
            return cw_to_bm(self.cw)
        raise ParseError("list", "instance has neither a list nor a cw block")


def _int_vectors(value: Any, field: str, length: int | None = None) -> list[tuple[int, ...]]:
    if not isinstance(value, list):
        raise ParseError(field, "expected a JSON array of integer arrays")
    out = []
    for k, row in enumerate(value):
        if not isinstance(row, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in row
        ):
            raise ParseError(f"{field}[{k}]", "expected an array of integers")
        if length is not None and len(row) != length:
            raise ParseError(f"{field}[{k}]", f"expected {length} entries, got {len(row)}")
        out.append(tuple(row))
    return out


def parse_instance(payload: Any) -> Instance:
    if not isinstance(payload, dict):
        raise ParseError("instance", "expected a JSON object")
    group = elements = cw = None
    if "group" in payload:
        if not isinstance(payload["group"], str):
            raise ParseError("group", "expected a string such as 'Z^2 + Z/4'")
        group = FgAbelianGroup.parse(payload["group"])
        vectors = _int_vectors(payload.get("list", []), "list", group.ngens)
        elements = ElementList(group, tuple(vectors))
    elif "list" in payload:
        raise ParseError("group", "a list needs a group descriptor")
    if "cw" in payload:
        block = payload["cw"]
        if not isinstance(block, dict):
            raise ParseError("cw", "expected an object with A, B and ell")
        ell = block.get("ell")
        if not isinstance(ell, int) or isinstance(ell, bool) or ell < 0:
            raise ParseError("cw.ell", "expected a nonnegative integer")
        a = _int_vectors(block.get("A", []), "cw.A", ell)
        b = _int_vectors(block.get("B", []), "cw.B", ell)
        cw = CwInstance.from_vectors(a, b, ell)
    if group is None and cw is None:
        raise ParseError("group", "missing; give 'group' and 'list' or a 'cw' block")
    return Instance(group, elements, cw)


def load_instance(path: str | Path) -> Instance:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("instance", f"invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return parse_instance(payload)


def pair_to_json(gamma: FgAbelianGroup, a: ElementList) -> dict:
    return {"group": str(gamma), "list": a.tolist()}


def parse_graph(text: str) -> tuple[int, list[tuple[int, int]]]:
    chunks = [c.strip() for c in text.replace(";", "\n").splitlines()]
    chunks = [c for c in chunks if c and not c.startswith("#")]
    if not chunks:
        raise ParseError("graph", "empty graph description")
    try:
        n = int(chunks[0])
    except ValueError:
        raise ParseError("graph", f"first entry must be the vertex count, got {chunks[0]!r}") from None
    edges = []
    for line in chunks[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise ParseError("graph", f"expected an edge 'i j', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return n, edges


def load_graph(path: str | Path) -> tuple[int, list[tuple[int, int]]]:
    try:
        return parse_graph(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
