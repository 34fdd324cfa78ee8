"""Backend selection for the exact search kernels.

The compiled ``_kernels`` extension is used when it imported successfully
and the instance fits in 64-bit words; otherwise the pure-Python kernels
run.  Set ``CLIQUE_IMMERSION_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os
from collections.abc import Sequence
from types import ModuleType

from . import _pykernels

_compiled: ModuleType | None
try:
    if os.environ.get("CLIQUE_IMMERSION_PURE"):
        raise ImportError("pure-Python kernels forced")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKENDS: dict[str, ModuleType] = {"python": _pykernels}
if _compiled is not None:
    BACKENDS["cython"] = _compiled

WORD = 64


def backend_name() -> str:
    return "cython" if _compiled is not None else "python"


def _pick(*sizes: int) -> ModuleType:
    if _compiled is not None and all(s <= WORD for s in sizes):
        return _compiled
    return _pykernels


def max_clique(adj: Sequence[int], n: int) -> int:
    return _pick(n).max_clique(list(adj), n)


def k_coloring(adj: Sequence[int], n: int, k: int) -> list[int] | None:
    return _pick(n).k_coloring(list(adj), n, k)


def hom_search(
    adj: Sequence[int], n: int, target_adj: Sequence[int], m: int, root: int
) -> list[int] | None:
    return _pick(n, m).hom_search(list(adj), n, list(target_adj), m, root)
