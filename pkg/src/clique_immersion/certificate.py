"""JSON interchange for immersion certificates.

Schema::

    {"n": int, "branch": [int], "paths": [{"u": int, "v": int, "vertices": [int]}],
     "method": str (optional), "trace": str (optional)}

Pairs are listed with ``u < v``, sorted lexicographically, and each vertex
list runs from ``u`` to ``v``.
"""

from __future__ import annotations

import json
from typing import Any

from .immersion import Finding, Immersion, Violation


class CertificateSchemaError(ValueError):
    pass


def certificate_dict(
    im: Immersion, n: int, method: str | None = None, trace: str | None = None
) -> dict[str, Any]:
    out: dict[str, Any] = {
        "n": n,
        "branch": sorted(im.branch),
        "paths": [{"u": u, "v": v, "vertices": list(path)} for (u, v), path in sorted(im.paths.items())],
    }
    if method is not None:
        out["method"] = method
    if trace is not None:
        out["trace"] = trace
    return out


def dumps_certificate(im: Immersion, n: int, method: str | None = None, trace: str | None = None) -> str:
    return json.dumps(certificate_dict(im, n, method, trace), indent=1) + "\n"


def _int_list(value: Any, what: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise CertificateSchemaError(f"{what} must be a list of integers")
    return value


def load_certificate(data: dict[str, Any] | str) -> tuple[int, Immersion, list[Violation]]:
    """Parse a certificate into ``(n, immersion, schema findings)``.

    Ordering problems that still leave a usable immersion (unsorted or
    repeated entries) come back as findings; vertex ranges are left to the
    verifier.  Unusable input raises :class:`CertificateSchemaError`.
    """
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise CertificateSchemaError(f"not JSON: {exc}") from None
    if not isinstance(data, dict):
        raise CertificateSchemaError("certificate must be a JSON object")
    n = data.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise CertificateSchemaError("'n' must be a non-negative integer")
    branch = _int_list(data.get("branch"), "'branch'")
    raw_paths = data.get("paths")
    if not isinstance(raw_paths, list):
        raise CertificateSchemaError("'paths' must be a list")
    findings: list[Violation] = []
    if len(set(branch)) != len(branch):
        findings.append(Violation(Finding.MALFORMED, "branch list repeats a vertex"))
    if branch != sorted(branch):
        findings.append(Violation(Finding.MALFORMED, "branch list is not sorted"))
    paths: dict[tuple[int, int], tuple[int, ...]] = {}
    keys = []
    for entry in raw_paths:
        if not isinstance(entry, dict) or not {"u", "v", "vertices"} <= entry.keys():
            raise CertificateSchemaError("each path needs 'u', 'v' and 'vertices'")
        u, v = entry["u"], entry["v"]
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (u, v)):
            raise CertificateSchemaError("'u' and 'v' must be integers")
        vertices = _int_list(entry["vertices"], "'vertices'")
        if (u, v) in paths:
            findings.append(Violation(Finding.MALFORMED, f"pair ({u}, {v}) listed twice", pairs=((u, v),)))
        keys.append((u, v))
        paths[(u, v)] = tuple(vertices)
    if keys != sorted(keys):
        findings.append(Violation(Finding.MALFORMED, "paths are not sorted by pair"))
    return n, Immersion(frozenset(branch), paths), findings
