"""Reading and writing the line-oriented ``tower v1`` text format.

::

    tower v1
    base_genus 0
    degree 2
    branch b1 (1 2) signs 01
    handle a 1 (1 2)
    glue b1 1 b2 2 [cross]

A file with ``signs`` on any element line describes a double tower; element
lines without signs then carry all-zero signs. Glue lines use 1-based cycle
indices and an optional ``cross`` flag for gluing unbranched points crosswise.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Union

from .cover import BaseCurve, FiberPoint, GluedCover, MonodromyCover, Node, RelationError, SignedTower
from .perm import Perm
from .weyl import SignedPerm

Loaded = Union[MonodromyCover, SignedTower, GluedCover]

_ELEMENT = re.compile(r"^(?P<perm>.*?)(?:\s+signs\s+(?P<signs>\S+))?\s*$")


class TowerFormatError(ValueError):
    """A tower file that cannot be loaded; ``line`` is 1-based, or None for whole-file errors."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _int(tok: str, what: str, line: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise TowerFormatError(f"expected an integer {what}, got {tok!r}", line) from None


def loads(text: str) -> Loaded:
    rows = []
    for num, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((num, body))
    if not rows or rows[0][1].split() != ["tower", "v1"]:
        raise TowerFormatError("first line must be 'tower v1'", rows[0][0] if rows else 1)
    genus = degree = None
    branches: list[tuple[int, str, str, str | None]] = []
    handles: dict[tuple[str, int], tuple[int, str, str | None]] = {}
    glues: list[tuple[int, list[str]]] = []
    for num, body in rows[1:]:
        key, _, rest = body.partition(" ")
        rest = rest.strip()
        if key == "base_genus":
            genus = _int(rest, "base genus", num)
            if genus < 0:
                raise TowerFormatError("base genus must be non-negative", num)
        elif key == "degree":
            degree = _int(rest, "degree", num)
            if degree < 1:
                raise TowerFormatError("degree must be positive", num)
        elif key == "branch":
            label, _, elem = rest.partition(" ")
            if not label:
                raise TowerFormatError("branch line needs a label", num)
            m = _ELEMENT.match(elem.strip())
            branches.append((num, label, m["perm"], m["signs"]))
        elif key == "handle":
            toks = rest.split(None, 2)
            if len(toks) < 2 or toks[0] not in ("a", "b"):
                raise TowerFormatError("handle line must read 'handle <a|b> <index> <perm>'", num)
            idx = _int(toks[1], "handle index", num)
            m = _ELEMENT.match(toks[2].strip() if len(toks) > 2 else "")
            if (toks[0], idx) in handles:
                raise TowerFormatError(f"handle {toks[0]} {idx} given twice", num)
            handles[(toks[0], idx)] = (num, m["perm"], m["signs"])
        elif key == "glue":
            glues.append((num, rest.split()))
        else:
            raise TowerFormatError(f"unknown directive {key!r}", num)
    if genus is None or degree is None:
        raise TowerFormatError("missing base_genus or degree line")
    signed = any(s is not None for *_, s in branches) or any(s is not None for _, _, s in handles.values())

    def element(num: int, perm: str, signs: str | None):
        try:
            if signed:
                return SignedPerm.parse(perm, signs if signs is not None else "0" * degree, degree)
            return Perm.parse(perm, degree)
        except ValueError as exc:
            raise TowerFormatError(str(exc), num) from None

    hs = []
    for i in range(1, genus + 1):
        for side in ("a", "b"):
            if (side, i) not in handles:
                raise TowerFormatError(f"missing handle {side} {i}")
            hs.append(element(*handles.pop((side, i))))
    if handles:
        (side, i), (num, *_) = next(iter(handles.items()))
        raise TowerFormatError(f"handle {side} {i} exceeds the base genus", num)
    labels = tuple(lab for _, lab, _, _ in branches)
    if len(set(labels)) != len(labels):
        raise TowerFormatError("duplicate branch label")
    bs = tuple(element(num, perm, signs) for num, _, perm, signs in branches)
    kind = SignedTower if signed else MonodromyCover
    try:
        smooth = kind(BaseCurve(genus, labels), degree, tuple(hs), bs)
    except RelationError as exc:
        raise TowerFormatError(str(exc)) from None
    except ValueError as exc:
        raise TowerFormatError(str(exc)) from None
    if not glues:
        return smooth
    nodes = []
    for num, toks in glues:
        cross = bool(toks) and toks[-1] == "cross"
        if cross:
            toks = toks[:-1]
        if len(toks) != 4:
            raise TowerFormatError("glue line must read 'glue <label> <cycle> <label> <cycle> [cross]'", num)
        for lab in (toks[0], toks[2]):
            if lab not in labels:
                raise TowerFormatError(f"unknown label {lab!r}", num)
        p = FiberPoint(toks[0], _int(toks[1], "cycle index", num) - 1)
        q = FiberPoint(toks[2], _int(toks[3], "cycle index", num) - 1)
        nodes.append((num, Node(p, q, cross)))
    try:
        return GluedCover(smooth, tuple(nd for _, nd in nodes))
    except ValueError as exc:
        raise TowerFormatError(str(exc), nodes[-1][0]) from None


def load(path: str | Path) -> Loaded:
    return loads(Path(path).read_text(encoding="utf-8"))


def dumps(x: Loaded) -> str:
    g = x if isinstance(x, GluedCover) else GluedCover(x)
    smooth = g.smooth
    signed = isinstance(smooth, SignedTower)

    def fmt(e) -> str:
        return f"{e.sigma} signs {e.sign_string()}" if signed else str(e)

    out = ["tower v1", f"base_genus {smooth.base.genus}", f"degree {smooth.degree}"]
    for i in range(smooth.base.genus):
        out.append(f"handle a {i + 1} {fmt(smooth.handles[2 * i])}")
        out.append(f"handle b {i + 1} {fmt(smooth.handles[2 * i + 1])}")
    for lab, e in zip(smooth.labels, smooth.branches):
        out.append(f"branch {lab} {fmt(e)}")
    for nd in g.nodes:
        line = f"glue {nd.p.label} {nd.p.index + 1} {nd.q.label} {nd.q.index + 1}"
        out.append(line + (" cross" if nd.cross else ""))
    return "\n".join(out) + "\n"


def dump(x: Loaded, path: str | Path) -> None:
    Path(path).write_text(dumps(x), encoding="utf-8")
