"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set ``REFEX_PURE_PYTHON=1`` to force the fallback. The compiled kernels
work on 64-bit masks; wider instances always go to the Python kernels.
"""

from __future__ import annotations

import os
from typing import Sequence

from refex import _kernels_py

try:
    if os.environ.get("REFEX_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from refex import _kernels as _compiled
except ImportError:
    _compiled = None

BACKENDS = {"python": _kernels_py}
if _compiled is not None:
    BACKENDS["cython"] = _compiled

BACKEND = "cython" if _compiled is not None else "python"


def _pick(masks: Sequence[int], target: int, backend: str | None):
    name = backend or BACKEND
    mod = BACKENDS[name]
    if mod is not _kernels_py and max([target.bit_length(), *(m.bit_length() for m in masks)]) > 64:
        return _kernels_py
    return mod


def min_cover(masks: Sequence[int], target: int, backend: str | None = None) -> tuple[int, ...] | None:
    return _pick(masks, target, backend).min_cover(masks, target)


def greedy_cover(masks: Sequence[int], target: int, backend: str | None = None) -> tuple[int, ...] | None:
    return _pick(masks, target, backend).greedy_cover(masks, target)
