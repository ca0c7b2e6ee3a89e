"""JSON payloads for library values and the versioned run report."""

from __future__ import annotations

import dataclasses
import hashlib
import json
from typing import Any, Iterable

from . import __version__
from .core import MonomialIdeal, PrimeSupport, Ring
from .gb import Polynomial

SCHEMA = "assprime.run-report/1"


def to_jsonable(obj: Any) -> Any:
    """Convert library values to plain JSON types.

    Prime supports become variable-name arrays in ring order, ideals become
    {"ring": [...], "gens": [...]} with generators in canonical order.
    """
    if isinstance(obj, PrimeSupport):
        return obj.names
    if isinstance(obj, MonomialIdeal):
        return {"ring": list(obj.ring.vars), "gens": [str(g) for g in obj.gens]}
    if isinstance(obj, Ring):
        return list(obj.vars)
    if isinstance(obj, Polynomial):
        return str(obj)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        out = {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
        for name in ("passed", "persistent"):
            if hasattr(type(obj), name) and isinstance(getattr(type(obj), name), property):
                out[name] = getattr(obj, name)
        return out
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, float):
        return round(obj, 3)
    return obj


def digest(parts: Iterable[str]) -> str:
    h = hashlib.sha256()
    for p in parts:
        data = p.encode("utf-8")
        h.update(len(data).to_bytes(8, "big"))
        h.update(data)
    return "sha256:" + h.hexdigest()


def run_report(command: list, inputs: list, result: Any, timing_ms: float,
               caveats: Iterable[str] = ()) -> dict:
    return {
        "schema": SCHEMA,
        "tool_version": __version__,
        "command": list(command),
        "inputs_digest": digest(inputs),
        "result": to_jsonable(result),
        "timing_ms": round(timing_ms, 3),
        "caveats": sorted(set(caveats)),
    }


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
