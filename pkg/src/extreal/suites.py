"""Built-in property suites, shared by the test harness and the CLI.

Each suite runs a deterministic, seeded corpus of law checks and returns one
result per case; a failing case carries a standalone scenario snippet that
reproduces it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .checker import RealizerPair, Status, check, truth_eval
from .compiler import SKK, compile_term, double_fixpoint, fixpoint, lam, primrec
from .formulas import (
    AllIn,
    And,
    Eq,
    ExIn,
    Formula,
    Imp,
    Mem,
    Not,
    Or,
    fmt,
    substitute,
)
from .kernel import apply_value, apply_values, eval_term, kleene_eq, pair_value, project
from .names import (
    Arrow,
    DEFAULT_BUDGET,
    EnumBudget,
    Explicit,
    Graph,
    Internal,
    Nat,
    OMEGA,
    OPair,
    Sing,
    TYPE_O,
    UPair,
    VName,
    enumerate_triples,
    eq_type,
    gen_elems,
    internalize,
)
from .parser import print_term
from .realizers import (
    AxiomId,
    axiom_realizer,
    arrow_realizer,
    bounded_separation_terms,
    choice_realizer,
    collection_name,
    eq_realizers,
    i_r_value,
    infinity_terms,
    op_formula,
    p_,
    pairing_name,
    pairing_realizers,
    proj,
    separation_name,
    synthesize,
    term_mutants,
    union_name,
    up_formula,
    value_of,
)
from .terms import (
    App,
    D,
    DEFAULT_FUEL,
    Defined,
    FuelConfig,
    FuelExhausted,
    K,
    KBAR,
    MachineError,
    Num,
    Opaque,
    P,
    P0,
    P1,
    PRED,
    S,
    SUCC,
    Term,
    Tri,
    Value,
    Var,
    app,
    num,
    num_value,
)


@dataclass
class CaseResult:
    name: str
    ok: bool
    detail: str = ""
    snippet: str = ""


@dataclass
class SuiteReport:
    suite: str
    seed: int
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def failures(self) -> list[CaseResult]:
        return [c for c in self.cases if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.failures


def kleene_agree(t1: Term, t2: Term, cfg: FuelConfig = DEFAULT_FUEL) -> bool | None:
    """Kleene equality with hard failures counted as undefined; None when
    fuel runs out on either side."""

    def run(t):
        try:
            return eval_term(t, None, cfg)
        except MachineError:
            return None

    o1, o2 = run(t1), run(t2)
    if o1 is None and o2 is None:
        return True
    if o1 is None or o2 is None:
        other = o2 if o1 is None else o1
        if isinstance(other, FuelExhausted):
            return None
        return False
    if isinstance(o1, FuelExhausted) or isinstance(o2, FuelExhausted):
        return None
    return o1.value == o2.value


# --- random printable terms and values ------------------------------------

_VALUE_ATOMS: tuple[Term, ...] = (K, D, KBAR) + tuple(num(i) for i in range(5))


def random_closed_term(rng: random.Random, max_leaves: int, atoms=_VALUE_ATOMS) -> Term:
    leaves = rng.randint(1, max_leaves)

    def build(n: int) -> Term:
        if n == 1:
            return rng.choice(atoms)
        k = rng.randint(1, n - 1)
        return App(build(k), build(n - k))

    return build(leaves)


def random_printable_value(
    rng: random.Random, max_leaves: int = 4, cfg: FuelConfig = DEFAULT_FUEL
) -> tuple[Term, Value]:
    while True:
        t = random_closed_term(rng, max_leaves)
        try:
            out = eval_term(t, None, cfg)
        except MachineError:
            continue
        if isinstance(out, Defined):
            return t, out.value


def _eval_snip(lhs: Term, rhs: Term) -> str:
    return f"eval ({print_term(lhs)}) expect ({print_term(rhs)})"


# --- suite: pca-laws --------------------------------------------------------


def suite_pca_laws(seed: int, cfg: FuelConfig = DEFAULT_FUEL, budget: EnumBudget = DEFAULT_BUDGET,
                   rounds: int = 200) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("pca-laws", seed)

    bad = []
    for _ in range(rounds):
        ta, _ = random_printable_value(rng)
        tb, _ = random_printable_value(rng)
        if kleene_agree(app(K, ta, tb), ta, cfg) is not True:
            bad.append(_eval_snip(app(K, ta, tb), ta))
        if kleene_agree(app(KBAR, ta, tb), tb, cfg) is not True:
            bad.append(_eval_snip(app(KBAR, ta, tb), tb))
    rep.cases.append(CaseResult("k-law", not bad, f"{rounds} instances",
                                bad[0] if bad else ""))

    bad = []
    for _ in range(rounds):
        ta, _ = random_printable_value(rng)
        tb, _ = random_printable_value(rng)
        tc, _ = random_printable_value(rng)
        lhs = app(S, ta, tb, tc)
        rhs = App(App(ta, tc), App(tb, tc))
        if kleene_agree(lhs, rhs, cfg) is False:
            bad.append(_eval_snip(lhs, rhs))
    rep.cases.append(CaseResult("s-law", not bad, f"{rounds} instances", bad[0] if bad else ""))

    bad = []
    for _ in range(rounds):
        n = rng.randint(0, 64)
        m = n if rng.random() < 0.5 else rng.randint(0, 64)
        ta, _ = random_printable_value(rng)
        tb, _ = random_printable_value(rng)
        lhs = app(D, num(n), num(m), ta, tb)
        rhs = ta if n == m else tb
        if kleene_agree(lhs, rhs, cfg) is not True:
            bad.append(_eval_snip(lhs, rhs))
    rep.cases.append(CaseResult("d-law", not bad, f"{rounds} instances", bad[0] if bad else ""))

    bad = []
    for _ in range(rounds):
        n = rng.randint(0, 200)
        if kleene_agree(App(SUCC, num(n)), num(n + 1), cfg) is not True:
            bad.append(_eval_snip(App(SUCC, num(n)), num(n + 1)))
        if kleene_agree(App(PRED, num(n + 1)), num(n), cfg) is not True:
            bad.append(_eval_snip(App(PRED, num(n + 1)), num(n)))
    try:
        eval_term(App(PRED, num(0)), None, cfg)
        bad.append("-- PRED #0 should be stuck")
    except MachineError:
        pass
    rep.cases.append(CaseResult("succ-pred", not bad, f"{rounds} instances", bad[0] if bad else ""))

    bad = []
    for _ in range(rounds):
        ta, _ = random_printable_value(rng)
        tb, _ = random_printable_value(rng)
        if kleene_agree(App(P0, app(P, ta, tb)), ta, cfg) is not True:
            bad.append(_eval_snip(App(P0, app(P, ta, tb)), ta))
        if kleene_agree(App(P1, app(P, ta, tb)), tb, cfg) is not True:
            bad.append(_eval_snip(App(P1, app(P, ta, tb)), tb))
    rep.cases.append(CaseResult("pairing-projections", not bad, f"{rounds} instances",
                                bad[0] if bad else ""))

    bad = []
    for n, m in ((i, j) for i in range(5) for j in range(5)):
        want = Tri.of(n == m)
        got = kleene_eq(num(n), num(m), cfg)
        if got is not want:
            bad.append(f"-- kleene_eq #{n} #{m} gave {got}")
    rep.cases.append(CaseResult("numeral-injectivity", not bad, "25 pairs", bad[0] if bad else ""))
    return rep


# --- suite: abstraction -----------------------------------------------------


def subst_oracle(t: Term, var: str, a: Term) -> Term:
    """Independent substitution on binder-free terms."""
    match t:
        case Var(name):
            return a if name == var else t
        case App(fun, arg):
            return App(subst_oracle(fun, var, a), subst_oracle(arg, var, a))
        case _:
            return t


def random_open_term(rng: random.Random, max_leaves: int, var: str) -> Term:
    atoms = _VALUE_ATOMS + (Var(var), Var(var), SUCC, PRED)
    return random_closed_term(rng, max_leaves, atoms)


def term_size(t: Term) -> int:
    match t:
        case App(fun, arg):
            return 1 + term_size(fun) + term_size(arg)
        case _:
            return 1
    raise AssertionError


def suite_abstraction(seed: int, cfg: FuelConfig = DEFAULT_FUEL, budget: EnumBudget = DEFAULT_BUDGET,
                      rounds: int = 100) -> SuiteReport:
    from .compiler import abstract

    rng = random.Random(seed)
    rep = SuiteReport("abstraction", seed)

    bad = []
    size_bad = []
    for _ in range(rounds):
        body = random_open_term(rng, 12, "x")
        s = abstract("x", body)
        ta, _ = random_printable_value(rng)
        lhs = App(s, ta)
        rhs = subst_oracle(body, "x", ta)
        if kleene_agree(lhs, rhs, cfg) is False:
            bad.append(_eval_snip(lhs, rhs))
        if term_size(s) > 10 * term_size(body) ** 2:
            size_bad.append(f"-- |compiled| = {term_size(s)} for |t| = {term_size(body)}")
    rep.cases.append(CaseResult("substitution-law", not bad, f"{rounds} instances",
                                bad[0] if bad else ""))
    rep.cases.append(CaseResult("size-bound", not size_bad, "|compile(t)| <= 10*|t|^2",
                                size_bad[0] if size_bad else ""))

    ok = kleene_agree(App(abstract("x", Var("x")), num(7)), num(7), cfg) is True
    rep.cases.append(CaseResult("identity", ok, "(\\x. x) #7 = #7"))
    k_like = compile_term(lam("x", "y", Var("x")))
    s_like = compile_term(lam("x", "y", "z", app(Var("x"), Var("z"), App(Var("y"), Var("z")))))
    kbar_like = compile_term(lam("x", "y", Var("y")))
    bad = []
    for _ in range(50):
        ta, _ = random_printable_value(rng)
        tb, _ = random_printable_value(rng)
        tc, _ = random_printable_value(rng)
        if kleene_agree(app(k_like, ta, tb), app(K, ta, tb), cfg) is not True:
            bad.append(_eval_snip(app(k_like, ta, tb), ta))
        if kleene_agree(app(kbar_like, ta, tb), app(KBAR, ta, tb), cfg) is not True:
            bad.append(_eval_snip(app(kbar_like, ta, tb), tb))
        if kleene_agree(app(s_like, ta, tb, tc), app(S, ta, tb, tc), cfg) is False:
            bad.append("-- compiled S disagrees")
    rep.cases.append(CaseResult("k-s-compilations", not bad, "50 instances", bad[0] if bad else ""))
    return rep


# --- suite: fixpoints -------------------------------------------------------


def suite_fixpoints(seed: int, cfg: FuelConfig = DEFAULT_FUEL, budget: EnumBudget = DEFAULT_BUDGET,
                    rounds: int = 50) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("fixpoints", seed)
    f = fixpoint()
    g, h = double_fixpoint()
    r = primrec()

    bad = []
    for _ in range(20):
        ta, _ = random_printable_value(rng)
        out = eval_term(App(f, ta), None, cfg)
        if not isinstance(out, Defined):
            bad.append(f"eval ({print_term(App(f, ta))})")
    rep.cases.append(CaseResult("f-defined", not bad, "f a defined, 20 instances",
                                bad[0] if bad else ""))

    bad = []
    for _ in range(rounds):
        ta, _ = random_printable_value(rng)
        tb, _ = random_printable_value(rng)
        lhs = app(f, ta, tb)
        rhs = app(ta, App(f, ta), tb)
        if kleene_agree(lhs, rhs, cfg) is False:
            bad.append(_eval_snip(lhs, rhs))
    rep.cases.append(CaseResult("f-law", not bad, f"f a b = a (f a) b, {rounds} instances",
                                bad[0] if bad else ""))

    # One-step hand unfolding: f K b = K (f K) b = f K.
    bad = []
    for _ in range(10):
        tb, _ = random_printable_value(rng)
        if kleene_agree(app(f, K, tb), App(f, K), cfg) is not True:
            bad.append(_eval_snip(app(f, K, tb), App(f, K)))
    rep.cases.append(CaseResult("f-unfold-oracle", not bad, "f K b = f K", bad[0] if bad else ""))

    bad_def, bad_g, bad_h = [], [], []
    for _ in range(rounds):
        ta, _ = random_printable_value(rng)
        tb, _ = random_printable_value(rng)
        tc, _ = random_printable_value(rng)
        if not isinstance(eval_term(app(g, ta, tb), None, cfg), Defined):
            bad_def.append(f"eval ({print_term(app(g, ta, tb))})")
        if not isinstance(eval_term(app(h, ta, tb), None, cfg), Defined):
            bad_def.append(f"eval ({print_term(app(h, ta, tb))})")
        if kleene_agree(app(g, ta, tb, tc), app(ta, app(h, ta, tb), tc), cfg) is False:
            bad_g.append(_eval_snip(app(g, ta, tb, tc), app(ta, app(h, ta, tb), tc)))
        if kleene_agree(app(h, ta, tb, tc), app(tb, app(g, ta, tb), tc), cfg) is False:
            bad_h.append(_eval_snip(app(h, ta, tb, tc), app(tb, app(g, ta, tb), tc)))
    rep.cases.append(CaseResult("gh-defined", not bad_def, "g a b, h a b defined",
                                bad_def[0] if bad_def else ""))
    rep.cases.append(CaseResult("g-law", not bad_g, f"g a b c = a (h a b) c, {rounds} instances",
                                bad_g[0] if bad_g else ""))
    rep.cases.append(CaseResult("h-law", not bad_h, f"h a b c = b (g a b) c, {rounds} instances",
                                bad_h[0] if bad_h else ""))

    bad = []
    for _ in range(20):
        ta, _ = random_printable_value(rng)
        tb, _ = random_printable_value(rng)
        if kleene_agree(app(r, ta, tb, num(0)), ta, cfg) is not True:
            bad.append(_eval_snip(app(r, ta, tb, num(0)), ta))
        n = rng.randint(0, 6)
        lhs = app(r, ta, tb, num(n + 1))
        rhs = app(tb, app(r, ta, tb, num(n)), num(n))
        if kleene_agree(lhs, rhs, cfg) is False:
            bad.append(_eval_snip(lhs, rhs))
    big = FuelConfig(max_steps=max(cfg.max_steps, 400_000), max_value_size=cfg.max_value_size)
    add = compile_term(lam("m", "n", app(r, Var("m"), lam("u", "v", App(SUCC, Var("u"))), Var("n"))))
    if kleene_agree(app(add, num(2), num(3)), num(5), big) is not True:
        bad.append(_eval_snip(app(add, num(2), num(3)), num(5)))
    rep.cases.append(CaseResult("primrec", not bad, "recursor laws and 2+3=5",
                                bad[0] if bad else ""))
    return rep


# --- random names and the equality suite -----------------------------------


def random_finite_name(rng: random.Random, rank: int) -> VName:
    if rank <= 0:
        return Nat(rng.randint(0, 3))
    choice = rng.random()
    sub = lambda: random_finite_name(rng, rank - 1)  # noqa: E731
    if choice < 0.4:
        triples = tuple(
            (num_value(rng.randint(0, 3)), num_value(rng.randint(0, 3)), sub())
            for _ in range(rng.randint(0, 3))
        )
        return Explicit(triples)
    if choice < 0.6:
        return Sing(sub())
    if choice < 0.8:
        return UPair(sub(), sub())
    return OPair(sub(), sub())


def suite_equality(seed: int, cfg: FuelConfig = DEFAULT_FUEL, budget: EnumBudget = DEFAULT_BUDGET,
                   rounds: int = 30) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("equality", seed)
    ir = i_r_value()

    bad = []
    for _ in range(rounds):
        x = random_finite_name(rng, rng.randint(0, 3))
        ver = check(RealizerPair.both(ir), Eq(x, x), budget, cfg)
        if ver.status is not Status.REALIZED:
            bad.append(f"-- i_r fails x=x on {x}")
    for n in range(7):
        ver = check(RealizerPair.both(ir), Eq(Nat(n), Nat(n)), budget, cfg)
        if ver.status is not Status.REALIZED:
            bad.append(f"check (i_r, i_r) eq(nat {n}, nat {n}) expect realized")
    rep.cases.append(CaseResult("reflexivity", not bad,
                                f"{rounds} random finite names (rank <= 3) and naturals <= 6",
                                bad[0] if bad else ""))

    _, i_s_t, i_t_t, i_0_t, i_1_t = eq_realizers()
    i_s, i_t, i_0, i_1 = (value_of(t) for t in (i_s_t, i_t_t, i_0_t, i_1_t))
    bad = []
    for n in range(5):
        wit = synthesize(Eq(Nat(n), Nat(n)), budget, cfg)
        swapped = apply_value(i_s, wit.a, cfg)
        if not isinstance(swapped, Defined) or check(
            RealizerPair.both(swapped.value), Eq(Nat(n), Nat(n)), budget, cfg
        ).status is not Status.REALIZED:
            bad.append(f"-- i_s fails on nat {n}")
        chained = apply_value(i_t, pair_value(wit.a, wit.a, cfg), cfg)
        if not isinstance(chained, Defined) or check(
            RealizerPair.both(chained.value), Eq(Nat(n), Nat(n)), budget, cfg
        ).status is not Status.REALIZED:
            bad.append(f"-- i_t fails on nat {n}")
    for n, m in ((1, 4), (2, 5)):
        eqw = synthesize(Eq(Nat(n), Nat(n)), budget, cfg)
        memw = synthesize(Mem(Nat(n), Nat(m)), budget, cfg)
        left = apply_value(i_0, pair_value(eqw.a, memw.a, cfg), cfg)
        if not isinstance(left, Defined) or check(
            RealizerPair.both(left.value), Mem(Nat(n), Nat(m)), budget, cfg
        ).status is not Status.REALIZED:
            bad.append(f"-- i_0 fails on {n} in {m}")
        right = apply_value(i_1, pair_value(eqw.a, memw.a, cfg), cfg)
        if not isinstance(right, Defined) or check(
            RealizerPair.both(right.value), Mem(Nat(n), Nat(m)), budget, cfg
        ).status is not Status.REALIZED:
            bad.append(f"-- i_1 fails on {n} in {m}")
    rep.cases.append(CaseResult("transport-laws", not bad,
                                "i_s, i_t, i_0, i_1 on synthesized numeral realizers",
                                bad[0] if bad else ""))

    bad = []
    for n in range(5):
        for m in range(5):
            if n == m:
                continue
            ver = check(RealizerPair.both(ir), Eq(Nat(n), Nat(m)), budget, cfg)
            if ver.status is not Status.REFUTED:
                bad.append(f"check (i_r, i_r) eq(nat {n}, nat {m}) expect refuted")
    rep.cases.append(CaseResult("numeral-absoluteness", not bad, "n != m <= 4 refuted",
                                bad[0] if bad else ""))
    return rep


# --- suite: czf-axioms ------------------------------------------------------


def _hyp_identity_pair(cfg: FuelConfig) -> Value:
    idv = value_of(SKK, cfg)
    return pair_value(idv, idv, cfg)


def infinity_e0_cases(e0: Value, max_n: int, budget: EnumBudget, cfg: FuelConfig) -> list[tuple[str, Status]]:
    from .checker import check_imp_on_witnesses
    from .formulas import theta

    ir = i_r_value()
    out = []
    for n in range(max_n + 1):
        w = pair_value(num_value(n), ir, cfg)
        ver = check_imp_on_witnesses(
            RealizerPair.both(e0),
            Mem(Nat(n), OMEGA),
            theta(Nat(n), OMEGA),
            [RealizerPair.both(w)],
            budget,
            cfg,
        )
        out.append((f"e0 n={n}", ver.status))
    return out


def infinity_e1_cases(e1: Value, budget: EnumBudget, cfg: FuelConfig) -> list[tuple[str, Status]]:
    from .checker import check_imp_on_witnesses
    from .formulas import theta

    ir = i_r_value()
    out = []
    # zero case
    w0 = pair_value(num_value(0), Value(K), cfg)
    ver = check_imp_on_witnesses(
        RealizerPair.both(e1), theta(Nat(0), OMEGA), Mem(Nat(0), OMEGA),
        [RealizerPair.both(w0)], budget, cfg,
    )
    out.append(("e1 zero-case", ver.status))
    # successor case, y = nat 3 = 2' u {2'}
    m = 2
    disp = compile_term(
        lam("c", app(D, Var("c"), num(m), p_(num(1), Opaque("ir", ir)),
                     p_(num(0), p_(Var("c"), Opaque("ir", ir)))))
    )
    r10 = value_of(disp, cfg)
    r110 = value_of(compile_term(lam("c", p_(Var("c"), Opaque("ir", ir)))), cfg)
    r111 = pair_value(num_value(m), ir, cfg)
    r = pair_value(r10, pair_value(r110, r111, cfg), cfg)
    w1 = pair_value(num_value(1), pair_value(num_value(m), r, cfg), cfg)
    ver = check_imp_on_witnesses(
        RealizerPair.both(e1), theta(Nat(m + 1), OMEGA), Mem(Nat(m + 1), OMEGA),
        [RealizerPair.both(w1)], budget, cfg,
    )
    out.append(("e1 successor-case", ver.status))
    return out


def _dispatch_term(entries: list[tuple[int, Value]]) -> Term:
    # The default branch is never consulted as a realizer, but it is still
    # evaluated and projected when key spaces overlap; keep it pair-shaped.
    body: Term = p_(num(0), num(0))
    c = Var("c")
    for k, r in reversed(entries):
        body = app(D, c, num(k), Opaque(f"d{k}", r), body)
    return body


def skewed_numeral_name(n: int, stride: int = 2, offset: int = 7) -> Explicit:
    """Extensionally the n-th numeral name, but keyed off the diagonal, so
    the two directions of an equality realizer cannot be interchanged."""
    return Explicit(
        tuple(
            (num_value(offset + stride * m), num_value(offset + stride * m), Nat(m))
            for m in range(n)
        )
    )


def infinity_skewed_cases(e0: Value, e1: Value, budget: EnumBudget,
                          cfg: FuelConfig) -> list[tuple[str, Status]]:
    """Forward and backward checks against a skew-keyed copy of the third
    numeral name; these instances see both projections of every equality
    realizer separately."""
    from .checker import check_imp_on_witnesses
    from .formulas import theta

    ir = i_r_value()
    out = []
    n = 3
    y = skewed_numeral_name(n)
    ykey = {m: 7 + 2 * m for m in range(n)}

    # a_1 realizes y = nat-n with distinct key maps per direction.
    left = [(ykey[m], pair_value(num_value(m), ir, cfg)) for m in range(n)]
    right = [(m, pair_value(num_value(ykey[m]), ir, cfg)) for m in range(n)]
    r_eq = value_of(
        compile_term(lam("c", p_(_dispatch_term(left), _dispatch_term(right)))), cfg
    )
    w = pair_value(num_value(n), r_eq, cfg)
    ver = check_imp_on_witnesses(
        RealizerPair.both(e0), Mem(y, OMEGA), theta(y, OMEGA),
        [RealizerPair.both(w)], budget, cfg,
    )
    out.append(("e0 skewed-keys", ver.status))

    # Backward: realize theta(y) through the successor branch with m = 2.
    m = n - 1
    rr0_entries = [
        (ykey[k], pair_value(num_value(0), pair_value(num_value(k), ir, cfg), cfg))
        for k in range(m)
    ] + [(ykey[m], pair_value(num_value(1), ir, cfg))]
    rr0 = value_of(compile_term(lam("c", _dispatch_term(rr0_entries))), cfg)
    rr10_entries = [(k, pair_value(num_value(ykey[k]), ir, cfg)) for k in range(m)]
    rr10 = value_of(compile_term(lam("c", _dispatch_term(rr10_entries))), cfg)
    rr11 = pair_value(num_value(ykey[m]), ir, cfg)
    rr = pair_value(rr0, pair_value(rr10, rr11, cfg), cfg)
    w1 = pair_value(num_value(1), pair_value(num_value(m), rr, cfg), cfg)
    ver = check_imp_on_witnesses(
        RealizerPair.both(e1), theta(y, OMEGA), Mem(y, OMEGA),
        [RealizerPair.both(w1)], budget, cfg,
    )
    out.append(("e1 skewed-keys", ver.status))
    return out


def suite_czf_axioms(seed: int, cfg: FuelConfig = DEFAULT_FUEL,
                     budget: EnumBudget = DEFAULT_BUDGET) -> SuiteReport:
    rep = SuiteReport("czf-axioms", seed)
    ir = i_r_value()

    # Pairing
    z = pairing_name(Nat(1), Nat(2))
    e = value_of(axiom_realizer(AxiomId.PAIRING).term, cfg)
    st = check(RealizerPair.both(e), And(Mem(Nat(1), z), Mem(Nat(2), z)), budget, cfg).status
    rep.cases.append(CaseResult("pairing", st is Status.REALIZED, str(st)))

    # Union
    x = Explicit(((num_value(0), num_value(0), Sing(Nat(1))),))
    y = union_name(x, budget)
    e = value_of(axiom_realizer(AxiomId.UNION).term, cfg)
    st = check(RealizerPair.both(e), AllIn("u", x, AllIn("v", "u", Mem("v", y))), budget, cfg).status
    rep.cases.append(CaseResult("union", st is Status.REALIZED, str(st)))

    # Extensionality on two extensionally equal names
    x1 = Explicit(((num_value(0), num_value(0), Nat(1)),))
    y1 = Sing(Nat(1))
    e = value_of(axiom_realizer(AxiomId.EXTENSIONALITY).term, cfg)
    ea = apply_value(e, _hyp_identity_pair(cfg), cfg)
    ok = isinstance(ea, Defined) and check(
        RealizerPair.both(ea.value), Eq(x1, y1), budget, cfg
    ).status is Status.REALIZED
    rep.cases.append(CaseResult("extensionality", ok, "witness-directed"))

    # Infinity, both directions, plus skew-keyed instances
    e0t, e1t = infinity_terms()
    e0, e1 = value_of(e0t, cfg), value_of(e1t, cfg)
    cases = (
        infinity_e0_cases(e0, 4, budget, cfg)
        + infinity_e1_cases(e1, budget, cfg)
        + infinity_skewed_cases(e0, e1, budget, cfg)
    )
    for name, st in cases:
        rep.cases.append(CaseResult(f"infinity {name}", st is Status.REALIZED, str(st)))

    # Set induction: defining equation and a rank-2 instance
    ev = value_of(axiom_realizer(AxiomId.SET_INDUCTION).term, cfg)
    ok = True
    for ident in ("a1", "a2"):
        a = Value(Opaque(ident))
        lhs = App(Opaque("e", ev), Opaque("a", a))
        rhs = App(Opaque("a", a), compile_term(lam("z", App(Opaque("e", ev), Opaque("a", a)))))
        ok &= kleene_eq(lhs, rhs, cfg) is Tri.TRUE
    rep.cases.append(CaseResult("set-induction equation", ok, "e a = a (\\z. e a)"))
    hypo = value_of(compile_term(lam("c", Opaque("ir", ir))), cfg)
    ea = apply_value(ev, hypo, cfg)
    ok = isinstance(ea, Defined) and check(
        RealizerPair.both(ea.value), Eq(Nat(2), Nat(2)), budget, cfg
    ).status is Status.REALIZED
    rep.cases.append(CaseResult("set-induction instance", ok, "rank-2 witness-directed"))

    # Bounded separation on nat-4 with phi(u) := u in nat 2
    x4 = Explicit(tuple((num_value(k), num_value(k), Nat(k)) for k in range(4)))
    ysep = separation_name(x4, lambda u: Mem(u, Nat(2)), budget, cfg)
    e0s, e1s = (value_of(t, cfg) for t in bounded_separation_terms())
    st = check(RealizerPair.both(e0s), AllIn("u", ysep, And(Mem("u", x4), Mem("u", Nat(2)))),
               budget, cfg).status
    rep.cases.append(CaseResult("separation forward", st is Status.REALIZED, str(st)))
    ok = True
    for n in range(2):
        e1u = apply_value(e1s, num_value(n), cfg)
        wit = synthesize(Mem(Nat(n), Nat(2)), budget, cfg)
        out = apply_value(e1u.value, wit.a, cfg)
        ok &= isinstance(out, Defined) and check(
            RealizerPair.both(out.value), Mem(Nat(n), ysep), budget, cfg
        ).status is Status.REALIZED
    rep.cases.append(CaseResult("separation backward", ok, "per-member witness-directed"))

    # Strong collection on one finite instance
    xc = Explicit(((num_value(0), num_value(0), Nat(1)),))
    acoll = value_of(compile_term(lam("c", Opaque("ir", ir))), cfg)
    yc = collection_name(xc, lambda tr: tr[2], budget)
    e = value_of(axiom_realizer(AxiomId.STRONG_COLLECTION).term, cfg)
    ea = apply_value(e, acoll, cfg)
    phi = And(AllIn("u", xc, ExIn("v", yc, Eq("u", "v"))),
              AllIn("v", yc, ExIn("u", xc, Eq("u", "v"))))
    ok = isinstance(ea, Defined) and check(
        RealizerPair.both(ea.value), phi, budget, cfg
    ).status is Status.REALIZED
    rep.cases.append(CaseResult("strong-collection", ok, "one finite instance"))

    # Subset collection and powerset terms: closed and defined
    for name, axid in (("subset-collection", AxiomId.SUBSET_COLLECTION),
                       ("powerset", AxiomId.POWERSET)):
        t = axiom_realizer(axid).term
        ok = isinstance(eval_term(t, None, cfg), Defined)
        rep.cases.append(CaseResult(f"{name} term defined", ok, ""))
    return rep


# --- suite: pairing-internal -------------------------------------------------


def suite_pairing_internal(seed: int, cfg: FuelConfig = DEFAULT_FUEL,
                           budget: EnumBudget = DEFAULT_BUDGET) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("pairing-internal", seed)
    u0t, u1t, vt, wt, zt = pairing_realizers()
    u0, u1, v, w, z = (value_of(t, cfg) for t in (u0t, u1t, vt, wt, zt))

    bad = []
    for _ in range(8):
        x = random_finite_name(rng, rng.randint(0, 2))
        y = random_finite_name(rng, rng.randint(0, 2))
        if check(RealizerPair.both(u0), up_formula(x, x, Sing(x)), budget, cfg).status is not Status.REALIZED:
            bad.append(f"-- u0 on {x}")
        if check(RealizerPair.both(u1), up_formula(x, y, UPair(x, y)), budget, cfg).status is not Status.REALIZED:
            bad.append(f"-- u1 on {x}, {y}")
        if check(RealizerPair.both(v), op_formula(x, y, OPair(x, y)), budget, cfg).status is not Status.REALIZED:
            bad.append(f"-- v on {x}, {y}")
    rep.cases.append(CaseResult("u0-u1-v", not bad, "rank <= 2 names", bad[0] if bad else ""))

    # w round-trip: i_r realizes OPair(1,2)=OPair(1,2); w extracts both equalities.
    ir = i_r_value()
    wa = apply_value(w, ir, cfg)
    ok = isinstance(wa, Defined) and check(
        RealizerPair.both(wa.value), And(Eq(Nat(1), Nat(1)), Eq(Nat(2), Nat(2))), budget, cfg
    ).status is Status.REALIZED
    rep.cases.append(CaseResult("w-round-trip", ok, "injectivity on a synthesized pair-equality"))

    # z round-trip: from v itself conclude OPair(1,2) = OPair(1,2).
    za = apply_value(z, v, cfg)
    ok = isinstance(za, Defined) and check(
        RealizerPair.both(za.value), Eq(OPair(Nat(1), Nat(2)), OPair(Nat(1), Nat(2))), budget, cfg
    ).status is Status.REALIZED
    rep.cases.append(CaseResult("z-round-trip", ok, "canonicity from the OP realizer"))
    return rep


# --- suite: heo --------------------------------------------------------------


def suite_heo(seed: int, cfg: FuelConfig = DEFAULT_FUEL,
              budget: EnumBudget = DEFAULT_BUDGET) -> SuiteReport:
    rep = SuiteReport("heo", seed)
    oo = Arrow(TYPE_O, TYPE_O)

    ok = True
    for n in range(8):
        for m in range(8):
            want = Tri.of(n == m)
            if eq_type(num_value(n), num_value(m), TYPE_O, budget, cfg).result is not want:
                ok = False
    k5 = apply_value(Value(K), num_value(5), cfg).value
    ok &= eq_type(k5, num_value(5), TYPE_O, budget, cfg).result is Tri.FALSE
    rep.cases.append(CaseResult("base-type-decides", ok, "numerals compared exactly"))

    succ = value_of(SUCC, cfg)
    pred = value_of(PRED, cfg)
    r1 = eq_type(succ, pred, oo, budget, cfg)
    rep.cases.append(CaseResult("succ-vs-pred", r1.result is Tri.FALSE,
                                f"counterexample {r1.counterexample}"))
    eta = value_of(compile_term(lam("x", App(SUCC, Var("x")))), cfg)
    r2 = eq_type(succ, eta, oo, budget, cfg)
    rep.cases.append(CaseResult("succ-vs-eta", r2.result is Tri.UNKNOWN and r2.samples_passed == r2.samples_total,
                                f"{r2.samples_passed}/{r2.samples_total} samples pass"))

    ok = internalize(num_value(3), TYPE_O, budget) == Nat(3)
    rep.cases.append(CaseResult("internalize-base", ok, "int #3 : o = nat 3"))

    const_k = apply_value(Value(K), num_value(2), cfg).value
    const_d = value_of(compile_term(lam("x", app(D, Var("x"), Var("x"), num(2), num(2)))), cfg)
    small = EnumBudget(max_index=5, generators_per_type=budget.generators_per_type)
    ts1, _ = enumerate_triples(internalize(const_k, oo, small), small, cfg)
    ts2, _ = enumerate_triples(internalize(const_d, oo, small), small, cfg)
    members1 = [z for _, _, z in ts1]
    members2 = [z for _, _, z in ts2]
    rep.cases.append(CaseResult("const-fn-triples", members1 == members2,
                                "two constant-2 functions agree on indices <= 5"))

    gens = gen_elems(Arrow(oo, TYPE_O), budget)
    ok = all(isinstance(apply_value(g, succ, cfg), Defined) for g in gens)
    rep.cases.append(CaseResult("higher-generators", ok, "(o)o -> o generators apply to SUCC"))

    # Sampled partial-equivalence behaviour on generator pairs.
    ok = True
    for sigma in (TYPE_O, oo):
        for a in gen_elems(sigma, EnumBudget(max_index=3, generators_per_type=3)):
            if eq_type(a, a, sigma, EnumBudget(max_index=3, generators_per_type=3), cfg).result is Tri.FALSE:
                ok = False
    rep.cases.append(CaseResult("generators-self-related", ok, "v =_sigma v never refuted"))
    return rep


# --- suite: choice-arrow ------------------------------------------------------


def suite_choice_arrow(seed: int, cfg: FuelConfig = DEFAULT_FUEL,
                       budget: EnumBudget = DEFAULT_BUDGET) -> SuiteReport:
    from .realizers import _pairs_uniqueness_part

    rep = SuiteReport("choice-arrow", seed)
    ir = i_r_value()
    small = EnumBudget(max_index=min(3, budget.max_index), generators_per_type=budget.generators_per_type)

    a = value_of(compile_term(lam("c", p_(Var("c"), Opaque("ir", ir)))), cfg)
    f = Graph(a, TYPE_O, TYPE_O)
    ts, _ = enumerate_triples(f, small, cfg)
    ok = all(
        z == OPair(Nat(c.numeral), Nat(c.numeral)) and c == d
        for c, d, z in ts
    )
    rep.cases.append(CaseResult("graph-triples", ok, "graph of \\c. p c i_r at c <= 3"))

    e = value_of(choice_realizer(TYPE_O, TYPE_O), cfg)
    ea = apply_value(e, a, cfg).value
    ea0 = project(ea, 0, cfg)
    ea10 = project(project(ea, 1, cfg), 0, cfg)
    ea11 = project(project(ea, 1, cfg), 1, cfg)

    bad = []
    for c, d, z in ts:
        r = apply_value(ea0, c, cfg).value
        phi = ExIn("x", OMEGA, ExIn("y", OMEGA, op_formula("x", "y", z)))
        if check(RealizerPair.both(r), phi, small, cfg).status is not Status.REALIZED:
            bad.append(f"-- clause 3 fails at c={c.numeral}")
    rep.cases.append(CaseResult("choice-clause-3", not bad, "all sampled triples",
                                bad[0] if bad else ""))

    bad = []
    for n in range(small.max_index + 1):
        r = apply_value(ea10, num_value(n), cfg).value
        phi = ExIn("y", OMEGA, ExIn("z", f, And(op_formula(Nat(n), "y", "z"), Eq("y", Nat(n)))))
        if check(RealizerPair.both(r), phi, small, cfg).status is not Status.REALIZED:
            bad.append(f"-- clause 4 fails at key {n}")
    rep.cases.append(CaseResult("choice-clause-4", not bad, "all sampled keys",
                                bad[0] if bad else ""))

    u0t, u1t, vt, wt, zt = pairing_realizers()
    vv = value_of(vt, cfg)
    gpair = pair_value(vv, vv, cfg)
    out = apply_values(ea11, [num_value(2), num_value(2), gpair], cfg)
    ok = isinstance(out, Defined) and check(
        RealizerPair.both(out.value), Eq(Nat(2), Nat(2)), small, cfg
    ).status is Status.REALIZED
    rep.cases.append(CaseResult("choice-clause-5", ok, "c0 = c1 = #2 with the OP realizer pair"))

    # Arrow types at (o, o)
    oo = Arrow(TYPE_O, TYPE_O)
    arrow = value_of(arrow_realizer(TYPE_O, TYPE_O), cfg)
    e0 = project(arrow, 0, cfg)
    e1 = project(arrow, 1, cfg)
    succ = value_of(SUCC, cfg)
    e0a = apply_value(e0, succ, cfg).value
    e00 = project(e0a, 0, cfg)
    r2 = apply_value(e00, num_value(2), cfg).value
    ok = project(r2, 0, cfg).numeral == 2 and project(project(r2, 1, cfg), 0, cfg).numeral == 3
    rep.cases.append(CaseResult("arrow-direct-eval", ok, "(e0 SUCC)_0 #2 projects to #2 and SUCC #2"))

    bad = []
    ts, _ = enumerate_triples(Internal(succ, oo), small, cfg)
    for c, d, z in ts:
        r = apply_value(e00, c, cfg).value
        phi = ExIn("x", OMEGA, ExIn("y", OMEGA, op_formula("x", "y", z)))
        if check(RealizerPair.both(r), phi, small, cfg).status is not Status.REALIZED:
            bad.append(f"-- arrow clause 1 fails at c={c.numeral}")
    rep.cases.append(CaseResult("arrow-clause-1", not bad, "a = SUCC, sampled triples",
                                bad[0] if bad else ""))

    part = value_of(compile_term(lam("c", p_(Var("c"), p_(Var("c"), Opaque("v", vv))))), cfg)
    uniq = value_of(_pairs_uniqueness_part(), cfg)
    a_arrow = pair_value(part, pair_value(part, uniq, cfg), cfg)
    e1a = apply_value(e1, a_arrow, cfg).value
    e1a0 = project(e1a, 0, cfg)
    e1a1 = project(e1a, 1, cfg)
    ok = all(apply_value(e1a0, num_value(n), cfg).value.numeral == n for n in (0, 1))
    rep.cases.append(CaseResult("arrow-e1-identity", ok, "(e1 a)_0 is the identity on #0, #1"))

    gval = value_of(compile_term(lam("c", proj(App(Opaque("a10", part), Var("c")), "0"))), cfg)
    gname = Internal(gval, oo)
    bad = []
    ts, _ = enumerate_triples(f, small, cfg)
    for c, d, z in ts:
        rc = apply_value(e1a1, c, cfg).value
        if check(RealizerPair.both(project(rc, 0, cfg)), Mem(z, gname), small, cfg).status is not Status.REALIZED:
            bad.append(f"-- subset fails at c={c.numeral}")
    rep.cases.append(CaseResult("arrow-subset", not bad, "sampled triples of the graph name",
                                bad[0] if bad else ""))
    bad = []
    ts, _ = enumerate_triples(gname, small, cfg)
    for c, d, z in ts:
        rc = apply_value(e1a1, c, cfg).value
        if check(RealizerPair.both(project(rc, 1, cfg)), Mem(z, f), small, cfg).status is not Status.REALIZED:
            bad.append(f"-- superset fails at c={c.numeral}")
    rep.cases.append(CaseResult("arrow-superset", not bad, "sampled triples of the internalization",
                                bad[0] if bad else ""))
    return rep


# --- suite: truth-oracle ------------------------------------------------------


def random_fragment_formula(rng: random.Random, qdepth: int, vars_in_scope: tuple[str, ...] = ()) -> Formula:
    def ref():
        if vars_in_scope and rng.random() < 0.5:
            return rng.choice(vars_in_scope)
        return Nat(rng.randint(0, 5))

    roll = rng.random()
    if qdepth > 0 and roll < 0.35:
        var = f"v{len(vars_in_scope)}"
        body = random_fragment_formula(rng, qdepth - 1, vars_in_scope + (var,))
        if rng.random() < 0.5:
            return AllIn(var, Nat(rng.randint(0, 5)), body)
        bound = OMEGA if rng.random() < 0.3 else Nat(rng.randint(0, 5))
        return ExIn(var, bound, body)
    if roll < 0.5:
        kind = rng.randrange(4)
        l = random_fragment_formula(rng, qdepth, vars_in_scope)
        r = random_fragment_formula(rng, max(0, qdepth - 1), vars_in_scope)
        if kind == 0:
            return And(l, r)
        if kind == 1:
            return Or(l, r)
        if kind == 2:
            return Imp(l, r)
        return Not(l)
    if rng.random() < 0.5:
        y = OMEGA if rng.random() < 0.25 else Nat(rng.randint(0, 5))
        return Mem(ref(), y)
    return Eq(ref(), ref())


def suite_truth_oracle(seed: int, cfg: FuelConfig = DEFAULT_FUEL,
                       budget: EnumBudget = DEFAULT_BUDGET, rounds: int = 50) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("truth-oracle", seed)
    bad = []
    for i in range(rounds):
        phi = random_fragment_formula(rng, 2)
        want = truth_eval(phi)
        wit = synthesize(phi, budget, cfg)
        got = wit is not None and check(wit, phi, budget, cfg).status is Status.REALIZED
        if want != got:
            bad.append(f"-- mismatch on {fmt(phi)}: truth={want} realizer-loop={got}")
    rep.cases.append(CaseResult("round-trip", not bad, f"{rounds} sentences", bad[0] if bad else ""))
    return rep


# --- registry ----------------------------------------------------------------

SUITES = {
    "pca-laws": suite_pca_laws,
    "abstraction": suite_abstraction,
    "fixpoints": suite_fixpoints,
    "equality": suite_equality,
    "czf-axioms": suite_czf_axioms,
    "pairing-internal": suite_pairing_internal,
    "heo": suite_heo,
    "choice-arrow": suite_choice_arrow,
    "truth-oracle": suite_truth_oracle,
}


def run_suite(name: str, seed: int = 0, cfg: FuelConfig = DEFAULT_FUEL,
              budget: EnumBudget = DEFAULT_BUDGET) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    return SUITES[name](seed, cfg, budget)
