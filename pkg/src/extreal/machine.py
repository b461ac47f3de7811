"""Pure-Python reduction machine: fuel-bounded call-by-value evaluation.

The machine is iterative (explicit instruction and value stacks) so that a
divergent self-application burns fuel instead of the host stack.  Each firing
of the application operation costs one step; outcomes are deterministic and
monotone in fuel.

This module is the reference semantics.  A compiled twin with identical
behaviour may be selected at import time by :mod:`extreal.kernel`.
"""

from __future__ import annotations

from .bracket import EXPANSIONS, Lam
from .terms import (
    App,
    Const,
    ConstKind,
    DEFAULT_FUEL,
    DELTA_ARITY,
    Defined,
    FuelConfig,
    FuelExhausted,
    IllTypedApplication,
    Num,
    Opaque,
    Outcome,
    StuckApplication,
    Term,
    Tri,
    UnboundVariable,
    Value,
    ValueSizeExceeded,
    Var,
    intern_value,
)

_OP_EVAL = 0
_OP_APPLY = 1
_OP_PUSH = 2

_K = ConstKind.K
_KBAR = ConstKind.KBAR
_S = ConstKind.S
_D = ConstKind.D
_SUCC = ConstKind.SUCC
_PRED = ConstKind.PRED

_defined_const_cache: dict[ConstKind, Value] = {}


def _defined_const_value(kind: ConstKind) -> Value:
    v = _defined_const_cache.get(kind)
    if v is None:
        out = _run([(_OP_EVAL, EXPANSIONS[kind], None)], [], DEFAULT_FUEL)
        assert isinstance(out, Defined)
        v = out.value
        _defined_const_cache[kind] = v
    return v


def _accumulate(f: Value, a: Value, max_size: int) -> Value:
    if f.size + a.size > max_size:
        raise ValueSizeExceeded(
            f"value of {f.size + a.size} nodes exceeds the cap of {max_size}"
        )
    return intern_value(Value(f.head, f.args + (a,)))


def _run(ops: list, vstack: list, cfg: FuelConfig) -> Outcome:
    steps = 0
    max_steps = cfg.max_steps
    max_size = cfg.max_value_size
    while ops:
        op = ops.pop()
        tag = op[0]
        if tag == _OP_PUSH:
            vstack.append(op[1])
        elif tag == _OP_EVAL:
            t, env = op[1], op[2]
            while True:  # unfold application spines without re-pushing atoms
                match t:
                    case App(fun, arg):
                        ops.append((_OP_APPLY,))
                        ops.append((_OP_EVAL, arg, env))
                        t = fun
                        continue
                    case Const(kind):
                        if kind in DELTA_ARITY:
                            vstack.append(intern_value(Value(t)))
                        else:
                            vstack.append(_defined_const_value(kind))
                    case Num():
                        vstack.append(intern_value(Value(t)))
                    case Var(name):
                        if env is None or name not in env:
                            raise UnboundVariable(name)
                        vstack.append(env[name])
                    case Opaque(_, value):
                        vstack.append(value if value is not None else intern_value(Value(t)))
                    case Lam():
                        raise TypeError("lambda terms must be compiled before evaluation")
                    case Value():
                        # Allow already-evaluated elements spliced into trees.
                        vstack.append(t)
                    case _:
                        raise TypeError(f"not a term: {t!r}")
                break
        else:  # _OP_APPLY
            steps += 1
            if steps > max_steps:
                return FuelExhausted(
                    steps - 1,
                    f"fuel exhausted: {len(ops)} pending operations, "
                    f"{len(vstack)} values on the stack",
                )
            a = vstack.pop()
            f = vstack.pop()
            head = f.head
            if isinstance(head, Num):
                raise IllTypedApplication(f"numeral #{head.n} applied as a function")
            if isinstance(head, Opaque):
                vstack.append(_accumulate(f, a, max_size))
                continue
            kind = head.kind
            arity = DELTA_ARITY[kind]
            if len(f.args) + 1 < arity:
                vstack.append(_accumulate(f, a, max_size))
                continue
            args = f.args + (a,)
            if kind is _K:
                vstack.append(args[0])
            elif kind is _KBAR:
                vstack.append(args[1])
            elif kind is _S:
                fa, fb, fc = args
                # (fa fc)(fb fc), both applications by value.
                ops.append((_OP_APPLY,))
                ops.append((_OP_APPLY,))
                ops.append((_OP_PUSH, fc))
                ops.append((_OP_PUSH, fb))
                ops.append((_OP_APPLY,))
                ops.append((_OP_PUSH, fc))
                ops.append((_OP_PUSH, fa))
            elif kind is _SUCC:
                if not args[0].is_numeral():
                    raise StuckApplication("SUCC on a non-numeral")
                vstack.append(intern_value(Value(Num(args[0].numeral + 1))))
            elif kind is _PRED:
                if not args[0].is_numeral():
                    raise StuckApplication("PRED on a non-numeral")
                n = args[0].numeral
                if n == 0:
                    raise StuckApplication("PRED #0")
                vstack.append(intern_value(Value(Num(n - 1))))
            else:  # _D
                sel_a, sel_b = args[0], args[1]
                if not (sel_a.is_numeral() and sel_b.is_numeral()):
                    raise StuckApplication("D selectors must be numerals")
                vstack.append(args[2] if sel_a.numeral == sel_b.numeral else args[3])
    assert len(vstack) == 1
    return Defined(vstack.pop(), steps)


def eval_term(t: Term, env: dict[str, Value] | None = None, cfg: FuelConfig = DEFAULT_FUEL) -> Outcome:
    """Call-by-value, leftmost-innermost evaluation of a term."""
    return _run([(_OP_EVAL, t, env)], [], cfg)


def apply_value(f: Value, a: Value, cfg: FuelConfig = DEFAULT_FUEL) -> Outcome:
    """The partial application operation of the algebra, on elements."""
    return _run([(_OP_APPLY,)], [f, a], cfg)


def apply_values(f: Value, args: list[Value] | tuple[Value, ...], cfg: FuelConfig = DEFAULT_FUEL) -> Outcome:
    """Left-associated application of several arguments; fuel is budgeted
    per application, steps reported in total."""
    cur = f
    total = 0
    for a in args:
        out = apply_value(cur, a, cfg)
        if isinstance(out, FuelExhausted):
            return out
        cur = out.value
        total += out.steps
    return Defined(cur, total)


def kleene_eq(t1: Term, t2: Term, cfg: FuelConfig = DEFAULT_FUEL) -> Tri:
    """Both sides defined with identical values / definitely different / out of fuel."""
    o1 = eval_term(t1, None, cfg)
    o2 = eval_term(t2, None, cfg)
    if isinstance(o1, FuelExhausted) or isinstance(o2, FuelExhausted):
        return Tri.UNKNOWN
    return Tri.of(o1.value == o2.value)
