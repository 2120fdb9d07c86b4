"""Reading the JSON spec files that describe mathematical objects.

One file per object.  Any slot that takes a sub-object also accepts
{"ref": "relative/path.json"}, resolved against the referring file's
directory, so fixtures compose without duplication.

Parse problems raise FormatError; a well-formed file describing a
structure that breaks its own laws raises ValidationError from the
constructors, carrying the violated invariant's name.
"""

import json
import os

from .categories import MatrixFormCategory, RawCategory
from .division import GradedDivisionRing
from .errors import FormatError
from .fields import field_from_json
from .groupoids import groupoid_from_json
from .matrices import HomMatrix
from .matrix_ring import MatrixRing
from .modules import GradedModule


def load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc


def _chase(data, base_dir, seen):
    """Follow {"ref": path} indirections, returning (data, directory)."""
    while isinstance(data, dict) and set(data) == {"ref"}:
        target = os.path.normpath(os.path.join(base_dir, data["ref"]))
        if target in seen:
            raise FormatError(f"reference cycle through {target}")
        seen = seen | {target}
        data = load_json(target)
        base_dir = os.path.dirname(target)
    return data, base_dir


def _require(data, key, path):
    if not isinstance(data, dict) or key not in data:
        raise FormatError(f"{path}: missing key {key!r}")
    return data[key]


def load_groupoid(data, base_dir="", seen=frozenset()):
    data, base_dir = _chase(data, base_dir, seen)
    return groupoid_from_json(data)


def load_field(data, base_dir="", seen=frozenset()):
    data, _ = _chase(data, base_dir, seen)
    return field_from_json(data)


def load_division_ring(data, base_dir="", seen=frozenset()):
    data, base_dir = _chase(data, base_dir, seen)
    field = load_field(_require(data, "field", "ring"), base_dir, seen)
    groupoid = load_groupoid(_require(data, "groupoid", "ring"), base_dir, seen)
    support = [groupoid.morphism_from_json(m) for m in _require(data, "support", "ring")]
    factor = {}
    for row in _require(data, "factor", "ring"):
        if not (isinstance(row, (list, tuple)) and len(row) == 3):
            raise FormatError(f"factor row must be [morphism, morphism, scalar], got {row!r}")
        s = groupoid.morphism_from_json(row[0])
        t = groupoid.morphism_from_json(row[1])
        factor[(s, t)] = field.coerce(row[2])
    return GradedDivisionRing(field, groupoid, support, factor)


def load_matrix_ring(data, base_dir="", seen=frozenset()):
    data, base_dir = _chase(data, base_dir, seen)
    ring = load_division_ring(_require(data, "ring", "matrix ring"), base_dir, seen)
    g = ring.groupoid
    raw = _require(data, "signatures", "matrix ring")
    signatures = [[g.morphism_from_json(m) for m in sig] for sig in raw]
    return MatrixRing(ring, signatures)


def load_matrix(data, base_dir="", seen=frozenset()):
    data, base_dir = _chase(data, base_dir, seen)
    ring = load_division_ring(_require(data, "ring", "matrix"), base_dir, seen)
    g = ring.groupoid
    rows = [g.morphism_from_json(m) for m in _require(data, "row_signature", "matrix")]
    cols = [g.morphism_from_json(m) for m in _require(data, "col_signature", "matrix")]
    entries = {}
    for row in data.get("entries", []):
        if not (isinstance(row, (list, tuple)) and len(row) == 3):
            raise FormatError(f"matrix entry must be [row, col, scalar], got {row!r}")
        i, j, raw_val = row
        if not isinstance(i, int) or not isinstance(j, int):
            raise FormatError(f"matrix entry indices must be integers, got {row!r}")
        entries[(i, j)] = ring.field.coerce(raw_val)
    return HomMatrix(ring, rows, cols, entries)


def load_module(data, base_dir="", seen=frozenset()):
    data, base_dir = _chase(data, base_dir, seen)
    ring = load_division_ring(_require(data, "ring", "module"), base_dir, seen)
    g = ring.groupoid
    shifts = [g.morphism_from_json(m) for m in _require(data, "shifts", "module")]
    return GradedModule(ring, shifts)


def load_vectors(data, base_dir="", seen=frozenset()):
    """A module plus a list of homogeneous vectors in it."""
    data, base_dir = _chase(data, base_dir, seen)
    module = load_module(_require(data, "module", "vectors"), base_dir, seen)
    g = module.ring.groupoid
    vectors = []
    for vd in _require(data, "vectors", "vectors"):
        degree = g.morphism_from_json(_require(vd, "degree", "vector"))
        entries = {}
        for row in vd.get("entries", []):
            if not (isinstance(row, (list, tuple)) and len(row) == 2 and isinstance(row[0], int)):
                raise FormatError(f"vector entry must be [index, scalar], got {row!r}")
            entries[row[0]] = module.ring.field.coerce(row[1])
        vectors.append(module.vector(degree, entries))
    return module, vectors


def load_category(data, base_dir="", seen=frozenset()):
    """Either matrix form or a raw structure-constant category."""
    data, base_dir = _chase(data, base_dir, seen)
    if "raw_category" in data:
        raw = data["raw_category"]
        field = load_field(_require(raw, "field", "raw category"), base_dir, seen)
        objects = _require(raw, "objects", "raw category")
        hom_dims = {}
        for row in _require(raw, "homs", "raw category"):
            if not (isinstance(row, (list, tuple)) and len(row) == 3):
                raise FormatError(f"hom row must be [target, source, dim], got {row!r}")
            hom_dims[(row[0], row[1])] = row[2]
        compose = {}
        for row in raw.get("compose", []):
            if not (isinstance(row, (list, tuple)) and len(row) == 3):
                raise FormatError(f"compose row must be [left, right, coeffs], got {row!r}")
            left, right, coeffs = row
            compose[(tuple(left), tuple(right))] = {
                pair[0]: pair[1] for pair in coeffs
            }
        identities = {
            name: {pair[0]: pair[1] for pair in vec}
            for name, vec in _require(raw, "identities", "raw category").items()
        }
        return RawCategory(objects, field, hom_dims, compose, identities)
    fields = [
        load_field(fd, base_dir, seen)
        for fd in _require(data, "division_rings", "category")
    ]
    dims = _require(data, "dims", "category")
    if not isinstance(dims, dict):
        raise FormatError(f"category dims must map object names to count lists, got {dims!r}")
    return MatrixFormCategory(_require(data, "objects", "category"), fields, dims)


_LOADERS = [
    ("blocks", "groupoid", load_groupoid),
    ("raw", "groupoid", load_groupoid),
    ("signatures", "matrix ring", load_matrix_ring),
    ("row_signature", "matrix", load_matrix),
    ("shifts", "module", load_module),
    ("vectors", "vectors", load_vectors),
    ("support", "ring", load_division_ring),
    ("division_rings", "category", load_category),
    ("raw_category", "category", load_category),
]


def load_any(path):
    """Detect the object kind from its keys; returns (kind, object)."""
    data = load_json(path)
    base_dir = os.path.dirname(path)
    if not isinstance(data, dict):
        raise FormatError(f"{path}: top level must be a JSON object")
    for key, kind, loader in _LOADERS:
        if key in data:
            return kind, loader(data, base_dir)
    raise FormatError(f"{path}: cannot tell what kind of object this file describes")


def load_kind(path, loader):
    """Load a file with a specific loader, resolving refs from its directory."""
    return loader(load_json(path), os.path.dirname(path))
