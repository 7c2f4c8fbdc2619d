"""Content-addressed on-disk cache for CLI results."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Any, Callable, Optional

# Sign and orientation conventions; changing any entry invalidates cached results.
CONVENTIONS = {
    "group_algebra_product": "left-to-right (x*y applies x first)",
    "ihx": "Jacobi form, three cyclic rotations sum to zero",
    "stu": "T - U - S = 0, S ordered (leg p, leg p+1, new leg)",
    "tree_vertex_order": "out, right, left",
    "bracket_sign": "(-1)^r c(u ⊗ Φτ_r(f))",
    "endo_composition": "(f∘g)(x) = f(g(x)); [f,x] = f(x)x^-1",
    "cabling": "right action, act(f∘g) = act(g)∘act(f)",
    "quotient_pivots": "ascending trivalent count, leftmost pivot eliminated",
    "q_seed": "nested minus crossing on arcs 1..4",
}


def convention_hash() -> str:
    blob = json.dumps(CONVENTIONS, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def cache_dir() -> Path:
    return Path(os.environ.get("JACOBI_CACHE_DIR", ".jacobi-cache"))


def cache_key(module: str, params: dict) -> str:
    blob = json.dumps({"module": module, "params": params, "conventions": convention_hash()},
                      sort_keys=True, default=str).encode()
    return hashlib.sha256(blob).hexdigest()


def load(module: str, params: dict) -> Optional[Any]:
    path = cache_dir() / f"{cache_key(module, params)}.json"
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, ValueError):
        return None


def store(module: str, params: dict, value: Any) -> None:
    """Write-temp-then-rename so concurrent readers never see partial files."""
    directory = cache_dir()
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{cache_key(module, params)}.json"
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(value, fh, sort_keys=True)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cached(module: str, params: dict, compute: Callable[[], Any], enabled: bool = True) -> Any:
    if enabled:
        hit = load(module, params)
        if hit is not None:
            return hit
    value = compute()
    # round-trip so cold and warm runs return identical objects
    value = json.loads(json.dumps(value, sort_keys=True))
    if enabled:
        store(module, params, value)
    return value
