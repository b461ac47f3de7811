"""Bracket abstraction: lambda binders compiled to pure K/S terms.

The translation guarantees more than extensional correctness: every output
of ``abstract`` is *always defined* — substituting values for its free
variables yields a canonical value, no matter what those values are.  Under
call-by-value application this property is what keeps the fixed-point
combinators from spinning, so the usual ``K t when x not free in t``
shortcut is restricted to subterms that are themselves manifestly defined.
"""

from __future__ import annotations

from dataclasses import dataclass

from .terms import (
    App,
    Const,
    ConstKind,
    DEFINED_ARITY,
    DELTA_ARITY,
    K,
    Num,
    Opaque,
    S,
    Term,
    Var,
)


@dataclass(frozen=True, slots=True)
class Lam:
    var: str
    body: "LambdaTerm"


LambdaTerm = Term | Lam

# The identity combinator S K K.
SKK = App(App(S, K), K)


def free_vars(t: LambdaTerm) -> frozenset[str]:
    match t:
        case Var(name):
            return frozenset((name,))
        case App(fun, arg):
            return free_vars(fun) | free_vars(arg)
        case Lam(var, body):
            return free_vars(body) - {var}
        case _:
            return frozenset()


def always_defined(t: Term) -> bool:
    """True when every closing substitution of t denotes a value.

    Holds for atoms and for constant-headed spines applied strictly below
    arity with always-defined arguments.  Variable-headed and numeral-headed
    applications are unknown or ill-typed, hence False.
    """
    head = t
    nargs = 0
    while isinstance(head, App):
        if not always_defined(head.arg):
            return False
        nargs += 1
        head = head.fun
    match head:
        case Const(kind):
            arity = DELTA_ARITY.get(kind) or DEFINED_ARITY[kind]
            return nargs < arity
        case Num():
            return nargs == 0
        case Var():
            return nargs == 0
        case Opaque(_, value):
            # A bare opaque head is inert and absorbs anything; an attached
            # value may be a real function, so applications are unknown.
            return nargs == 0 or value is None
        case _:
            return False


def abstract(x: str, t: Term) -> Term:
    """λ*x.t on a Lam-free term: built from K, S and the symbols of t."""
    match t:
        case Var(name) if name == x:
            return SKK
        case App(fun, arg) if x in free_vars(t) or not always_defined(t):
            return App(App(S, abstract(x, fun)), abstract(x, arg))
        case _:
            # x not free and t manifestly defined (atoms always are).
            return App(K, t)


def compile_term(t: LambdaTerm) -> Term:
    """Eliminate every Lam node, innermost binders first."""
    match t:
        case Lam(var, body):
            return abstract(var, compile_term(body))
        case App(fun, arg):
            return App(compile_term(fun), compile_term(arg))
        case _:
            return t


def lam(*parts: object) -> Lam:
    """lam("x", "y", body) builds nested binders around a term."""
    *names, body = parts
    t = body
    for name in reversed(names):
        t = Lam(name, t)  # type: ignore[arg-type]
    return t  # type: ignore[return-value]


def _v(name: str) -> Var:
    return Var(name)


# Expansions of the defined constants.  P is pairing, P0/P1 the (partial)
# projections; the aliases are exactly these compilations.
PAIR_TERM = compile_term(lam("x", "y", "z", App(App(_v("z"), _v("x")), _v("y"))))
PROJ0_TERM = compile_term(lam("x", App(_v("x"), K)))
PROJ1_TERM = compile_term(lam("x", App(_v("x"), Const(ConstKind.KBAR))))

EXPANSIONS = {
    ConstKind.P: PAIR_TERM,
    ConstKind.P0: PROJ0_TERM,
    ConstKind.P1: PROJ1_TERM,
}
