"""Instance files and report serialization."""

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from .points import PointSet

SCHEMA_VERSION = 1


class InstanceError(ValueError):
    """Malformed instance file; the message carries the file position or JSON path."""

    def __init__(self, source, where, message):
        self.source = source
        self.where = where
        super().__init__(f"{source}: {where}: {message}")


@dataclass(frozen=True)
class Instance:
    name: str
    points: PointSet
    basis: tuple = None
    expected: dict = field(default=None, compare=False, hash=False)

    @property
    def dim(self):
        return self.points.dim

    def to_json(self):
        out = {"name": self.name, "points": [list(p) for p in self.points]}
        if self.basis is not None:
            out["basis"] = [list(b) for b in self.basis]
        if self.expected is not None:
            out["expected"] = self.expected
        return out

    def canonical(self):
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    def digest(self):
        core = {"name": self.name, "points": [list(p) for p in self.points]}
        if self.basis is not None:
            core["basis"] = [list(b) for b in self.basis]
        return hashlib.sha256(json.dumps(core, sort_keys=True).encode()).hexdigest()[:16]


def _int_vector(value, where, source, dim=None):
    if not isinstance(value, list) or not value:
        raise InstanceError(source, where, "expected a nonempty list of integers")
    for k, c in enumerate(value):
        if not isinstance(c, int) or isinstance(c, bool):
            raise InstanceError(source, f"{where}[{k}]", f"expected an integer, got {c!r}")
    if dim is not None and len(value) != dim:
        raise InstanceError(source, where, f"dimension {len(value)} differs from {dim}")
    return tuple(value)


def instance_from_obj(obj, source="<instance>"):
    if not isinstance(obj, dict):
        raise InstanceError(source, "$", "top level must be an object")
    unknown = set(obj) - {"name", "points", "basis", "expected"}
    if unknown:
        raise InstanceError(source, "$", f"unknown keys {sorted(unknown)}")
    name = obj.get("name")
    if not isinstance(name, str) or not name:
        raise InstanceError(source, "$.name", "expected a nonempty string")
    pts = obj.get("points")
    if not isinstance(pts, list) or not pts:
        raise InstanceError(source, "$.points", "expected a nonempty list of points")
    dim = None
    seen = {}
    for i, p in enumerate(pts):
        v = _int_vector(p, f"$.points[{i}]", source, dim)
        dim = len(v)
        if v in seen:
            raise InstanceError(source, f"$.points[{i}]", f"duplicate of $.points[{seen[v]}]")
        seen[v] = i
    basis = None
    if "basis" in obj:
        if not isinstance(obj["basis"], list):
            raise InstanceError(source, "$.basis", "expected a list of points")
        basis = tuple(_int_vector(b, f"$.basis[{i}]", source, dim)
                      for i, b in enumerate(obj["basis"]))
        for i, b in enumerate(basis):
            if b not in seen:
                raise InstanceError(source, f"$.basis[{i}]", "basis point is not in points")
    expected = obj.get("expected")
    if expected is not None and not isinstance(expected, dict):
        raise InstanceError(source, "$.expected", "expected an object")
    return Instance(name, PointSet(seen, dim), basis, expected)


def parse_instance(text, source="<string>"):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(source, f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return instance_from_obj(obj, source)


def load_instance(path):
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InstanceError(str(path), "file", exc.strerror) from None
    return parse_instance(text, str(path))


def load_corpus(directory):
    directory = Path(directory)
    if not directory.is_dir():
        raise InstanceError(str(directory), "directory", "not a directory")
    return [load_instance(p) for p in sorted(directory.glob("*.json"))]


def builtin_corpus_dir():
    return Path(__file__).parent / "data" / "corpus"


def builtin_corpus():
    return load_corpus(builtin_corpus_dir())


def schema_path(name):
    return Path(__file__).parent / "schemas" / f"{name}.schema.json"


def dump_json(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def atomic_write(path, data):
    """Write via a temp file in the same directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    mode = "wb" if isinstance(data, bytes) else "w"
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, mode) as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise
    return path
