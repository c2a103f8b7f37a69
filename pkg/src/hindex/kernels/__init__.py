"""Hot loops of the exhaustive sweeps.

The compiled extension ``_core`` is used when it was built; otherwise the
pure-Python ``_fallback`` with identical results.  ``use_backend`` switches
explicitly (tests and the benchmark run both).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from types import ModuleType

import numpy as np

from . import _fallback

try:
    from . import _core
except ImportError:  # extension not built
    _core = None

SCAN_MAX_N = 7

_active: ModuleType = _core if _core is not None else _fallback


def available_backends() -> list[str]:
    return ["compiled", "python"] if _core is not None else ["python"]


def backend() -> str:
    return _active.BACKEND


def use_backend(name: str) -> None:
    global _active
    if name == "compiled":
        if _core is None:
            raise RuntimeError("compiled kernels are not built; run `pip install -e .`")
        _active = _core
    elif name == "python":
        _active = _fallback
    else:
        raise ValueError(f"unknown backend {name!r}")


def _module(name: str | None) -> ModuleType:
    if name is None:
        return _active
    return {"compiled": _core, "python": _fallback}[name] or _fallback


@lru_cache(maxsize=None)
def harmonic_scale(n: int) -> int:
    """Common denominator L = lcm(1..2n-2) of every edge weight on ``n`` vertices."""
    return math.lcm(*range(1, max(2, 2 * n - 2) + 1))


@dataclass
class ScanBlock:
    """Per-graph statistics of the connected graphs in one mask range.

    ``h_scaled`` is H(G) * ``scale``; ``kab`` columns are the part sizes when
    the graph is complete bipartite and zero otherwise.
    """

    n: int
    scale: int
    mask: np.ndarray
    m: np.ndarray
    m1: np.ndarray
    h_scaled: np.ndarray
    sum_min: np.ndarray
    sum_max: np.ndarray
    triangle_free: np.ndarray
    kab_a: np.ndarray
    kab_b: np.ndarray

    def __len__(self) -> int:
        return len(self.mask)


def scan_connected(n: int, start: int = 0, stop: int | None = None, backend: str | None = None) -> ScanBlock:
    if not 1 <= n <= SCAN_MAX_N:
        raise ValueError(f"labeled sweeps support 1 <= n <= {SCAN_MAX_N}, got {n}")
    total = 1 << (n * (n - 1) // 2)
    stop = total if stop is None else min(stop, total)
    scale = harmonic_scale(n)
    two_l_over = [0] + [2 * scale // s for s in range(1, 2 * n)]
    cols = _module(backend).scan_connected(n, start, stop, two_l_over)
    return ScanBlock(n, scale, *cols)


def tree_code(n: int, edges, backend: str | None = None) -> int:
    us = [u for u, _ in edges]
    vs = [v for _, v in edges]
    return _module(backend).tree_code(n, us, vs)


def prufer_tree_codes(n: int, backend: str | None = None) -> np.ndarray:
    """Tree code of each labeled tree, indexed by Prüfer sequence (base-``n`` number)."""
    return _module(backend).prufer_tree_codes(n)
