"""JSON structure files.

One JSON object per structure::

    {"kind": "brace-like", "order": 2, "labels": ["1", "g"],
     "add": [[0, 0], [1, 1]], "mul": [[0, 1], [1, 0]],
     "lambda": [[0, 1], [0, 1]]}

``kind`` fixes which auxiliary field must be present: ``lambda`` (an
order x order matrix, ``lambda[a][b]`` the image of b under lam_a) for
``semi-truss`` and ``brace-like``, ``sigma`` (a list) for ``skew-truss``,
``iota`` (a list) for ``almost``, and none for ``semi-brace``. The kinds
``semigroup`` and ``group`` carry a single ``table``. ``labels``, ``name`` and
``description`` are cosmetic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .algebra import FiniteGroup, as_group
from .errors import KindFieldMismatch, RangeFormatError, SyntaxFormatError
from .semibrace import AlmostLeftSemiBrace, LeftSemiBrace
from .truss import BraceLikeSemiTruss, LeftSemiTruss, SkewLeftTruss

AUX = {
    "semi-truss": ("lambda",),
    "brace-like": ("lambda",),
    "skew-truss": ("sigma",),
    "semi-brace": (),
    "almost": ("iota",),
}
SINGLE = ("semigroup", "group")
KINDS = tuple(AUX) + SINGLE
AUX_FIELDS = ("lambda", "sigma", "iota")
COSMETIC = ("labels", "name", "description")


@dataclass
class StructureFile:
    kind: str
    order: int
    add: list | None = None
    mul: list | None = None
    lam: list | None = None
    sigma: list | None = None
    iota: list | None = None
    table: list | None = None
    labels: list | None = None
    name: str | None = None
    description: str | None = None

    def to_structure(self):
        """The library object this file describes (no axioms are checked here)."""
        t = lambda m: tuple(tuple(r) for r in m)
        k = self.kind
        if k == "semi-truss":
            return LeftSemiTruss(t(self.add), t(self.mul), t(self.lam))
        if k == "brace-like":
            return BraceLikeSemiTruss(t(self.add), t(self.mul), t(self.lam))
        if k == "skew-truss":
            return SkewLeftTruss(t(self.add), t(self.mul), tuple(self.sigma))
        if k == "semi-brace":
            return LeftSemiBrace(t(self.add), t(self.mul))
        if k == "almost":
            return AlmostLeftSemiBrace(t(self.add), t(self.mul), tuple(self.iota))
        if k == "semigroup":
            return t(self.table)
        return as_group(t(self.table))

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "order": self.order}
        if self.name is not None:
            d["name"] = self.name
        if self.description is not None:
            d["description"] = self.description
        if self.labels is not None:
            d["labels"] = list(self.labels)
        if self.kind in SINGLE:
            d["table"] = _lists(self.table)
            return d
        d["add"] = _lists(self.add)
        d["mul"] = _lists(self.mul)
        if self.lam is not None:
            d["lambda"] = _lists(self.lam)
        if self.sigma is not None:
            d["sigma"] = list(self.sigma)
        if self.iota is not None:
            d["iota"] = list(self.iota)
        return d


def _lists(m):
    return [list(r) for r in m]


def _matrix(doc, key, n):
    m = doc.get(key)
    if not isinstance(m, list) or len(m) != n:
        raise SyntaxFormatError(f"{key} must be a list of {n} rows")
    for i, row in enumerate(m):
        if not isinstance(row, list) or len(row) != n:
            raise SyntaxFormatError(f"{key}[{i}] must be a list of {n} integers")
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool):
                raise SyntaxFormatError(f"{key}[{i}][{j}] is not an integer")
            if not 0 <= v < n:
                raise RangeFormatError(f"{key}[{i}][{j}] out of range: {v} not in [0, {n})")
    return [list(r) for r in m]


def _vector(doc, key, n):
    v = doc.get(key)
    if not isinstance(v, list) or len(v) != n:
        raise SyntaxFormatError(f"{key} must be a list of {n} integers")
    for i, x in enumerate(v):
        if not isinstance(x, int) or isinstance(x, bool):
            raise SyntaxFormatError(f"{key}[{i}] is not an integer")
        if not 0 <= x < n:
            raise RangeFormatError(f"{key}[{i}] out of range: {x} not in [0, {n})")
    return list(v)


def from_dict(doc) -> StructureFile:
    if not isinstance(doc, dict):
        raise SyntaxFormatError("top level must be a JSON object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise SyntaxFormatError(f"kind must be one of {list(KINDS)}, got {kind!r}")
    n = doc.get("order")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise SyntaxFormatError("order must be a positive integer")
    allowed = {"kind", "order", *COSMETIC}
    allowed |= {"table"} if kind in SINGLE else {"add", "mul", *AUX_FIELDS}
    unknown = sorted(set(doc) - allowed)
    if unknown:
        if any(k in AUX_FIELDS or k in ("add", "mul", "table") for k in unknown):
            raise KindFieldMismatch(f"kind {kind!r} does not take field(s) {unknown}")
        raise SyntaxFormatError(f"unknown field(s) {unknown}")
    sf = StructureFile(kind=kind, order=n)
    labels = doc.get("labels")
    if labels is not None:
        if not (isinstance(labels, list) and len(labels) == n
                and all(isinstance(x, str) for x in labels)):
            raise SyntaxFormatError(f"labels must be a list of {n} strings")
        sf.labels = list(labels)
    sf.name = doc.get("name")
    sf.description = doc.get("description")
    if kind in SINGLE:
        if "table" not in doc:
            raise KindFieldMismatch(f"kind {kind!r} requires field 'table'")
        sf.table = _matrix(doc, "table", n)
        return sf
    for key in ("add", "mul"):
        if key not in doc:
            raise SyntaxFormatError(f"missing field {key!r}")
    need = set(AUX[kind])
    present = {k for k in AUX_FIELDS if k in doc}
    if need - present:
        raise KindFieldMismatch(f"kind {kind!r} requires field(s) {sorted(need - present)}")
    if present - need:
        raise KindFieldMismatch(f"kind {kind!r} does not take field(s) {sorted(present - need)}")
    sf.add = _matrix(doc, "add", n)
    sf.mul = _matrix(doc, "mul", n)
    if "lambda" in need:
        sf.lam = _matrix(doc, "lambda", n)
    if "sigma" in need:
        sf.sigma = _vector(doc, "sigma", n)
    if "iota" in need:
        sf.iota = _vector(doc, "iota", n)
    return sf


def parse_structure(text: str) -> StructureFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SyntaxFormatError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}")
    return from_dict(doc)


def load(path) -> StructureFile:
    with open(path, encoding="utf-8") as fh:
        return parse_structure(fh.read())


def from_structure(obj, name=None, labels=None) -> StructureFile:
    """Inverse of :meth:`StructureFile.to_structure`."""
    if isinstance(obj, BraceLikeSemiTruss):
        sf = StructureFile("brace-like", obj.n, _lists(obj.add), _lists(obj.mul), lam=_lists(obj.lam))
    elif isinstance(obj, LeftSemiTruss):
        sf = StructureFile("semi-truss", obj.n, _lists(obj.add), _lists(obj.mul), lam=_lists(obj.lam))
    elif isinstance(obj, SkewLeftTruss):
        sf = StructureFile("skew-truss", obj.n, _lists(obj.add), _lists(obj.mul), sigma=list(obj.sigma))
    elif isinstance(obj, AlmostLeftSemiBrace):
        sf = StructureFile("almost", obj.n, _lists(obj.add), _lists(obj.mul), iota=list(obj.iota))
    elif isinstance(obj, LeftSemiBrace):
        sf = StructureFile("semi-brace", obj.n, _lists(obj.add), _lists(obj.mul))
    elif isinstance(obj, FiniteGroup):
        sf = StructureFile("group", obj.n, table=_lists(obj.op))
    elif isinstance(obj, tuple):
        sf = StructureFile("semigroup", len(obj), table=_lists(obj))
    else:
        raise TypeError(f"cannot serialise {type(obj).__name__}")
    sf.name, sf.labels = name, labels
    return sf


def serialize(sf: StructureFile) -> str:
    """Pretty JSON with one table row per line."""
    d = sf.to_dict()
    parts = []
    for k, v in d.items():
        if isinstance(v, list) and v and isinstance(v[0], list):
            rows = ",\n    ".join(json.dumps(r) for r in v)
            parts.append(f'  "{k}": [\n    {rows}\n  ]')
        else:
            parts.append(f'  "{k}": {json.dumps(v)}')
    return "{\n" + ",\n".join(parts) + "\n}\n"


def fixture_names() -> list[str]:
    return sorted(
        p.name for p in resources.files("trusslab").joinpath("data").iterdir()
        if p.name.endswith(".json")
    )


def fixture_text(name: str) -> str:
    if not name.endswith(".json"):
        name += ".json"
    return resources.files("trusslab").joinpath("data").joinpath(name).read_text(encoding="utf-8")


def load_fixture(name: str) -> StructureFile:
    return parse_structure(fixture_text(name))
