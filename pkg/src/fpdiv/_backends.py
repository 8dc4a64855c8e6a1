"""Backend selection: compiled extension when available, pure Python always.

The active backend is chosen at import time: the extension if it built, the
pure model otherwise.  FPDIV_BACKEND=ext|pure|auto overrides the default,
and set_backend() switches at runtime.  Both backends export the same
functions and produce identical values, which the test suite enforces.
"""

import os

from fpdiv import _pycore

try:
    from fpdiv import _core
except ImportError:
    _core = None

_REGISTRY = {"pure": _pycore}
if _core is not None:
    _REGISTRY["ext"] = _core

_active = None


def available_backends():
    """Names of importable backends, compiled one first."""
    names = []
    if _core is not None:
        names.append("ext")
    names.append("pure")
    return names


def set_backend(name):
    """Select 'ext', 'pure', or 'auto'; returns the backend module."""
    global _active
    if name == "auto" or name is None:
        name = "ext" if _core is not None else "pure"
    if name not in _REGISTRY:
        raise ValueError(
            "unknown backend %r; available: %s"
            % (name, ", ".join(available_backends()))
        )
    _active = _REGISTRY[name]
    return _active


def active_backend():
    """The module currently serving scalar kernels and drivers."""
    if _active is None:
        set_backend(os.environ.get("FPDIV_BACKEND", "auto"))
    return _active


def get_backend(name=None):
    """A specific backend module without changing the active one."""
    if name is None or name == "auto":
        return _REGISTRY["ext"] if "ext" in _REGISTRY else _REGISTRY["pure"]
    if name not in _REGISTRY:
        raise ValueError(
            "unknown backend %r; available: %s"
            % (name, ", ".join(available_backends()))
        )
    return _REGISTRY[name]
