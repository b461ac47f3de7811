"""Kernel facade: selects the reduction-machine backend at import time.

The compiled extension (``extreal._speedup``) is preferred when it has been
built; the pure-Python machine is the fallback and the reference semantics.
Set ``PCA_BACKEND=pure`` (or ``compiled``) to force a choice.  Both backends
implement exactly the same fueled call-by-value semantics, including step
counts.
"""

from __future__ import annotations

import os

from . import machine as _pure

_choice = os.environ.get("PCA_BACKEND", "").strip().lower()

if _choice == "pure":
    _impl = _pure
    BACKEND = "pure"
else:
    try:
        from . import _speedup as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        if _choice == "compiled":
            raise ImportError(
                "PCA_BACKEND=compiled but extreal._speedup is not built; "
                "run `python setup.py build_ext --inplace`"
            )
        _impl = _pure
        BACKEND = "pure"

eval_term = _impl.eval_term
apply_value = _impl.apply_value
apply_values = _impl.apply_values
kleene_eq = _impl.kleene_eq

from .terms import DEFAULT_FUEL, Defined, FuelConfig, FuelExhausted, P, P0, P1, Value  # noqa: E402


def _const_value(t) -> Value:
    out = eval_term(t)
    assert isinstance(out, Defined)
    return out.value


def pair_value(a: Value, b: Value, cfg: FuelConfig = DEFAULT_FUEL) -> Value:
    """p a b as an element; pairing of values is always defined."""
    out = apply_values(_const_value(P), [a, b], cfg)
    assert isinstance(out, Defined)
    return out.value


def project(v: Value, i: int, cfg: FuelConfig = DEFAULT_FUEL) -> Value | None:
    """The i-th projection of v, or None when fuel runs out.

    Projections are partial: a machine error propagates to the caller.
    """
    out = apply_value(_const_value(P0 if i == 0 else P1), v, cfg)
    if isinstance(out, FuelExhausted):
        return None
    return out.value


def pure_backend():
    """The reference machine, regardless of the selected backend."""
    return _pure


def compiled_backend():
    """The compiled machine, or None when it is not built."""
    try:
        from . import _speedup

        return _speedup
    except ImportError:
        return None
