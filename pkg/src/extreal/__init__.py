"""extreal: an executable partial combinatory algebra over the naturals,
with bracket abstraction, canonical set names, and a three-valued checker
for the extensional realizability relation."""

from .terms import (
    App,
    Const,
    ConstKind,
    DEFAULT_FUEL,
    Defined,
    FuelConfig,
    FuelExhausted,
    IllTypedApplication,
    MachineError,
    Num,
    Opaque,
    StuckApplication,
    Term,
    Tri,
    UnboundVariable,
    Value,
    ValueSizeExceeded,
    Var,
    app,
    embed,
    num,
    num_value,
    opaque_value,
)
from .kernel import BACKEND, apply_value, apply_values, eval_term, kleene_eq

__all__ = [
    "App",
    "BACKEND",
    "Const",
    "ConstKind",
    "DEFAULT_FUEL",
    "Defined",
    "FuelConfig",
    "FuelExhausted",
    "IllTypedApplication",
    "MachineError",
    "Num",
    "Opaque",
    "StuckApplication",
    "Term",
    "Tri",
    "UnboundVariable",
    "Value",
    "ValueSizeExceeded",
    "Var",
    "app",
    "apply_value",
    "apply_values",
    "embed",
    "eval_term",
    "kleene_eq",
    "num",
    "num_value",
    "opaque_value",
]
