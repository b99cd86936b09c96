"""
On-disk cache of representation matrices.

One JSON file per module holds N, the shape, the dimension, the weight table
and every generator matrix as (row, col, numerator, denominator) quadruples.
The payload is checksummed with sha256; a file whose checksum or version does
not match is reported and rebuilt.  Valid files are never rewritten.
"""

import hashlib
import json
import logging
import os
from fractions import Fraction
from pathlib import Path

from .algebra import so
from .linalg import SparseMatrix
from .reps import RepModule, tensor_module

FORMAT_VERSION = 1
CACHE_ENV = "PFAFFLAB_CACHE_DIR"

log = logging.getLogger(__name__)


class CacheError(Exception):
    pass


def default_cache_dir():
    return Path(os.environ.get(CACHE_ENV) or Path.home() / ".cache" / "pfafflab")


def cache_path(cache_dir, N, shape):
    name = "so%d_shape%s.json" % (N, "-".join(map(str, shape)) or "0")
    return Path(cache_dir) / name


def module_payload(module):
    mats = {}
    for (i, j), M in sorted(module.gen_matrices.items()):
        mats["%d,%d" % (i, j)] = [[r, c, x.numerator, x.denominator] for (r, c), x in sorted(M.entries())]
    return {
        "N": module.N,
        "shape": list(module.shape or ()),
        "dim": module.dim,
        "weights": [[[Fraction(x).numerator, Fraction(x).denominator] for x in w] for w in module.weights],
        "matrices": mats,
    }


def _digest(payload):
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def module_from_payload(payload):
    A = so(payload["N"])
    d = payload["dim"]
    mats = {}
    for key, quads in payload["matrices"].items():
        i, j = map(int, key.split(","))
        mats[i, j] = SparseMatrix.from_entries((d, d), {(r, c): Fraction(a, b) for r, c, a, b in quads})
    weights = [tuple(Fraction(a, b) for a, b in w) for w in payload["weights"]]
    shape = tuple(payload["shape"])
    return RepModule(A, mats, weights, name="shape%s" % ",".join(map(str, shape)), shape=shape)


def write_module(path, module):
    payload = module_payload(module)
    doc = {"version": FORMAT_VERSION, "sha256": _digest(payload), "module": payload}
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(doc, sort_keys=True))
    os.replace(tmp, path)


def read_module(path):
    """Load and verify a cached module; raises CacheError on any mismatch."""
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, ValueError) as e:
        raise CacheError("unreadable cache file %s: %s" % (path, e))
    if not isinstance(doc, dict) or doc.get("version") != FORMAT_VERSION:
        raise CacheError("cache file %s has an unsupported version" % path)
    payload = doc.get("module")
    if payload is None or _digest(payload) != doc.get("sha256"):
        raise CacheError("checksum mismatch in %s" % path)
    try:
        return module_from_payload(payload)
    except (KeyError, TypeError, ValueError) as e:
        raise CacheError("malformed cache file %s: %s" % (path, e))


def load_or_build(N, shape, cache_dir=None):
    """(module, status) with status "loaded", "built" or "rebuilt"."""
    shape = tuple(shape)
    path = cache_path(cache_dir or default_cache_dir(), N, shape)
    status = "built"
    if path.exists():
        try:
            return read_module(path), "loaded"
        except CacheError as e:
            log.warning("%s; recomputing", e)
            status = "rebuilt"
    module = tensor_module(N, shape)
    if module.dim:
        write_module(path, module)
    return module, status
