"""Selects the kernel implementation (compiled extension or numpy fallback).

The compiled module ``maxreps._core`` is preferred when importable; set the
environment variable ``MAXREPS_BACKEND=pure`` (or call :func:`use`) to force
the fallback, e.g. for benchmarking.
"""

from __future__ import annotations

import os

from . import _pure

try:
    from . import _core
except ImportError:
    _core = None

_impl = _pure if (_core is None or os.environ.get("MAXREPS_BACKEND") == "pure") else _core


def available_backends() -> list[str]:
    return ["pure"] + (["compiled"] if _core is not None else [])


def backend_name() -> str:
    return _impl.BACKEND_NAME


def use(name: str) -> str:
    """Switch the active backend ('pure', 'compiled' or 'auto'); returns it."""
    global _impl
    if name == "auto":
        _impl = _core if _core is not None else _pure
    elif name == "pure":
        _impl = _pure
    elif name == "compiled":
        if _core is None:
            raise RuntimeError("compiled backend is not available")
        _impl = _core
    else:
        raise ValueError(f"unknown backend {name!r}")
    return _impl.BACKEND_NAME


def get(name: str):
    """The raw kernel module for an explicit backend name."""
    if name == "pure":
        return _pure
    if name == "compiled":
        if _core is None:
            raise RuntimeError("compiled backend is not available")
        return _core
    raise ValueError(f"unknown backend {name!r}")


def collect(sym):
    return _impl.collect(sym)


def tally(sym, tnum=0, tden=1):
    return _impl.tally(sym, tnum, tden)


def oracle_collect(sym):
    return _impl.oracle_collect(sym)
