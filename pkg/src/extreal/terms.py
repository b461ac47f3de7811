"""Application terms and canonical values of the combinator machine.

Terms are finite application trees over the machine constants and the
numerals; values are weak canonical forms (constants applied below their
arity, numerals, inert opaque heads).  Application is a partial operation:
besides honest divergence (modelled by fuel) there are two kinds of hard
failure, kept apart so callers can tell a crash from a timeout.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class MachineError(Exception):
    """Base class for evaluation failures that are errors, not divergence."""


class IllTypedApplication(MachineError):
    """A numeral was used in function position; numerals are inert data."""


class StuckApplication(MachineError):
    """A delta rule hit an argument outside its domain (PRED #0, D on non-numerals)."""


class UnboundVariable(MachineError):
    pass


class ValueSizeExceeded(MachineError):
    """A value grew past the configured node cap; never silently truncated."""


class Tri(enum.Enum):
    """Three-valued answer used by the fueled equality tests."""

    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    @staticmethod
    def of(b: bool) -> "Tri":
        return Tri.TRUE if b else Tri.FALSE


class ConstKind(enum.Enum):
    K = "K"
    S = "S"
    D = "D"
    SUCC = "SUCC"
    PRED = "PRED"
    KBAR = "KBAR"
    # Defined constants: aliases for closed combinator terms, expanded on
    # evaluation.  They never occur as value heads.
    P = "P"
    P0 = "P0"
    P1 = "P1"


# Arity at which a delta rule fires.  P/P0/P1 are absent on purpose: they are
# macro constants, not primitives.
DELTA_ARITY = {
    ConstKind.K: 2,
    ConstKind.KBAR: 2,
    ConstKind.S: 3,
    ConstKind.D: 4,
    ConstKind.SUCC: 1,
    ConstKind.PRED: 1,
}

# Number of arguments a defined constant absorbs before its body could fire.
DEFINED_ARITY = {ConstKind.P: 3, ConstKind.P0: 1, ConstKind.P1: 1}


@dataclass(frozen=True, slots=True)
class Const:
    kind: ConstKind


@dataclass(frozen=True, slots=True)
class Num:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("numerals are naturals")


@dataclass(frozen=True, slots=True)
class Var:
    name: str


@dataclass(frozen=True, slots=True)
class App:
    fun: "Term"
    arg: "Term"


@dataclass(frozen=True, slots=True)
class Opaque:
    """An element of the algebra embedded into term syntax.

    With `value` attached it evaluates to that value; without, it is an inert
    head that just accumulates arguments.
    """

    ident: str
    value: "Value | None" = None


Term = Const | Num | Var | App | Opaque


@dataclass(frozen=True, slots=True, eq=False)
class Value:
    """A weak canonical form: no delta rule fires at its head."""

    head: Const | Num | Opaque
    args: tuple["Value", ...] = ()
    size: int = field(init=False, repr=False)
    _hash: int = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "size", 1 + sum(a.size for a in self.args))
        object.__setattr__(self, "_hash", hash((self.head, self.args)))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Value):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.size == other.size
            and self.head == other.head
            and self.args == other.args
        )

    def is_numeral(self) -> bool:
        return isinstance(self.head, Num)

    @property
    def numeral(self) -> int:
        if not isinstance(self.head, Num):
            raise ValueError(f"not a numeral value: {self!r}")
        return self.head.n


# Values produced by the machines are interned so that structural equality
# of results usually reduces to identity (the checker memoizes on values).
_INTERN: dict[Value, Value] = {}


def intern_value(v: Value) -> Value:
    hit = _INTERN.get(v)
    if hit is not None:
        return hit
    if len(_INTERN) > 1_000_000:
        _INTERN.clear()
    _INTERN[v] = v
    return v


@dataclass(frozen=True, slots=True)
class Defined:
    value: Value
    steps: int


@dataclass(frozen=True, slots=True)
class FuelExhausted:
    steps: int
    note: str


Outcome = Defined | FuelExhausted


@dataclass(frozen=True, slots=True)
class FuelConfig:
    max_steps: int = 100_000
    max_value_size: int = 1_000_000

    def __post_init__(self):
        if self.max_steps <= 0 or self.max_value_size <= 0:
            raise ValueError("fuel limits must be strictly positive")


DEFAULT_FUEL = FuelConfig()

# Constant term singletons.
K = Const(ConstKind.K)
S = Const(ConstKind.S)
D = Const(ConstKind.D)
SUCC = Const(ConstKind.SUCC)
PRED = Const(ConstKind.PRED)
KBAR = Const(ConstKind.KBAR)
P = Const(ConstKind.P)
P0 = Const(ConstKind.P0)
P1 = Const(ConstKind.P1)


def num(n: int) -> Num:
    return Num(n)


def app(fun: Term, *args: Term) -> Term:
    """Left-associated application: app(f, a, b) is (f a) b."""
    t = fun
    for a in args:
        t = App(t, a)
    return t


def num_value(n: int) -> Value:
    return Value(Num(n))


def opaque_value(ident: str) -> Value:
    return Value(Opaque(ident))


def embed(v: Value, ident: str = "_") -> Opaque:
    """Wrap an already-evaluated element so it can occur inside a term."""
    return Opaque(ident, v)
