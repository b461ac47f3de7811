"""The compiler surface: bracket abstraction, fixed points, primitive recursion.

``fixpoint`` and ``double_fixpoint`` return closed terms satisfying, on the
nose in this machine,

    f a ↓         f a b  ≃ a (f a) b
    g a b ↓       g a b c ≃ a (h a b) c
    h a b ↓       h a b c ≃ b (g a b) c

and ``primrec`` the recursor with  r a b #0 ≃ a  and
r a b #(n+1) ≃ b (r a b #n) #n.
"""

from __future__ import annotations

from functools import cache

from .bracket import Lam, LambdaTerm, SKK, abstract, always_defined, compile_term, free_vars, lam
from .terms import App, D, Num, PRED, Term, Var, app

__all__ = [
    "Lam",
    "LambdaTerm",
    "SKK",
    "abstract",
    "always_defined",
    "compile_term",
    "double_fixpoint",
    "fixpoint",
    "free_vars",
    "lam",
    "primrec",
]


@cache
def fixpoint() -> Term:
    """The fixed-point combinator: f := \\a. c c with c := \\d b. a (d d) b."""
    c = lam("d", "b", app(Var("a"), App(Var("d"), Var("d")), Var("b")))
    return compile_term(lam("a", App(c, c)))


def _guarded_body(a: str, b: str) -> Lam:
    # t(a,b) := \x c. a (\z. b x z) c — the inner binder delays unfolding.
    return lam(
        "x", "c",
        app(Var(a), lam("z", app(Var(b), Var("x"), Var("z"))), Var("c")),
    )


@cache
def double_fixpoint() -> tuple[Term, Term]:
    """Mutual fixed points g, h.

    g := \\a b. f t(a,b).  For h, the inner function \\c. b (f t(a,b)) c is
    produced by applying \\x c. b x c to the *evaluated* fixed point, so that
    the element a receives in  g a b c ≃ a (h a b) c  is identical to h a b;
    binding c over the unevaluated splice would denote a different element.
    """
    f = fixpoint()
    t_ab = _guarded_body("a", "b")
    g = compile_term(lam("a", "b", App(f, t_ab)))
    eta = lam("x", "c", app(Var("b"), Var("x"), Var("c")))
    h = compile_term(lam("a", "b", App(eta, App(f, t_ab))))
    return g, h


@cache
def primrec() -> Term:
    """Primitive recursion from the fixed point, D, and PRED.

    Both branches of the definition-by-cases sit under a dummy binder so the
    recursive unfolding is only evaluated when the selector says so.
    """
    f = fixpoint()
    w, a, b, n = Var("w"), Var("a"), Var("b"), Var("n")
    base = lam("_z", a)
    step = lam(
        "_z",
        app(b, app(w, a, b, App(PRED, n)), App(PRED, n)),
    )
    body = app(D, n, Num(0), base, step, Num(0))
    return App(f, compile_term(lam("w", "a", "b", "n", body)))
