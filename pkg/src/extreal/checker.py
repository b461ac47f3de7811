"""Three-valued checker for the extensional realizability relation.

``check((a, b), φ)`` decides, clause by clause, whether the pair of machine
values realizes the closed formula φ.  Every positive answer bottoms out in
exhaustively verified clauses; any budget-truncated branch forces Unknown.
A realizer that crashes (a stuck projection or application on a genuine
member) refutes: the clauses only speak about defined applications.

Negation, implication and the unbounded quantifiers range over the whole
algebra, so the checker affirms them only where a decision principle
applies: the bounded-arithmetic fragment (where realizability coincides
with classical truth over the naturals) and constant-valued realizers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .formulas import (
    All,
    AllIn,
    And,
    Eq,
    Ex,
    ExIn,
    Formula,
    Imp,
    Mem,
    NameRef,
    Not,
    Or,
    is_closed,
    fmt,
    substitute,
)
from .kernel import apply_value, pair_value, project
from .names import (
    DEFAULT_BUDGET,
    EnumBudget,
    Nat,
    Omega,
    VName,
    enumerate_triples,
    lookup_triples,
)
from .terms import (
    ConstKind,
    Const,
    DEFAULT_FUEL,
    Defined,
    FuelConfig,
    FuelExhausted,
    MachineError,
    Value,
    num_value,
)


class Status(enum.Enum):
    REALIZED = "realized"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


@dataclass(frozen=True, slots=True)
class RealizerPair:
    a: Value
    b: Value

    @staticmethod
    def both(v: Value) -> "RealizerPair":
        return RealizerPair(v, v)


@dataclass
class Trace:
    clause: str
    status: Status
    note: str = ""
    exhaustive: bool = False
    witness_directed: bool = False
    children: list["Trace"] = field(default_factory=list)

    def to_dict(self, depth: int | None = None) -> dict:
        d = {
            "clause": self.clause,
            "status": self.status.value,
            "note": self.note,
            "exhaustive": self.exhaustive,
            "witness_directed": self.witness_directed,
        }
        if depth is None or depth > 0:
            nxt = None if depth is None else depth - 1
            d["children"] = [c.to_dict(nxt) for c in self.children]
        return d

    def render(self, depth: int | None = None, indent: int = 0) -> str:
        pad = "  " * indent
        flags = []
        if self.exhaustive:
            flags.append("exhaustive")
        if self.witness_directed:
            flags.append("witness-directed")
        suffix = f" [{', '.join(flags)}]" if flags else ""
        note = f" -- {self.note}" if self.note else ""
        lines = [f"{pad}{self.clause}: {self.status.value}{suffix}{note}"]
        if depth is None or depth > 0:
            nxt = None if depth is None else depth - 1
            for c in self.children:
                lines.append(c.render(nxt, indent + 1))
        return "\n".join(lines)


@dataclass
class Verdict:
    status: Status
    trace: Trace
    samples_checked: int

    def __bool__(self):
        return self.status is Status.REALIZED


class FragmentError(ValueError):
    """The formula is outside the decidable bounded-arithmetic fragment."""


def decide_nat_eq(n: int, m: int) -> bool:
    """Is the equality of the n-th and m-th canonical numeral names realizable?

    It is realizable exactly when n = m; for distinct numerals no realizer
    pair exists, so the checker may refute outright.
    """
    return n == m


class _Ctx:
    __slots__ = ("budget", "cfg", "samples", "memo")

    def __init__(self, budget: EnumBudget, cfg: FuelConfig):
        self.budget = budget
        self.cfg = cfg
        self.samples = 0
        # check is pure in (a, b, φ) for fixed budget and fuel; shared
        # sub-names would otherwise be re-verified exponentially often.
        self.memo: dict = {}


def _as_name(r: NameRef) -> VName:
    if isinstance(r, str):
        raise ValueError(f"formula not closed: free variable {r!r}")
    return r


_STUCK = "stuck"
_FUEL = "fuel"


def _apply(ctx: _Ctx, f: Value, a: Value) -> tuple[Value | None, str | None]:
    try:
        out = apply_value(f, a, ctx.cfg)
    except MachineError as exc:
        return None, f"{_STUCK}: {exc}"
    if isinstance(out, FuelExhausted):
        return None, _FUEL
    return out.value, None


def _project(ctx: _Ctx, v: Value, i: int) -> tuple[Value | None, str | None]:
    try:
        out = project(v, i, ctx.cfg)
    except MachineError as exc:
        return None, f"{_STUCK}: {exc}"
    if out is None:
        return None, _FUEL
    return out, None


def _fail(clause: str, failure: str, what: str) -> tuple[Status, Trace]:
    if failure.startswith(_STUCK):
        return Status.REFUTED, Trace(
            clause, Status.REFUTED, note=f"{what} crashed ({failure})", exhaustive=True
        )
    return Status.UNKNOWN, Trace(clause, Status.UNKNOWN, note=f"{what} ran out of fuel")


def check(
    pair: RealizerPair,
    phi: Formula,
    budget: EnumBudget = DEFAULT_BUDGET,
    cfg: FuelConfig = DEFAULT_FUEL,
) -> Verdict:
    """Does the pair realize the closed formula?  Realized / Refuted / Unknown."""
    if not is_closed(phi):
        raise ValueError("check requires a closed formula")
    ctx = _Ctx(budget, cfg)
    status, trace = _check(ctx, pair.a, pair.b, phi)
    return Verdict(status, trace, ctx.samples)


def _check(ctx: _Ctx, a: Value, b: Value, phi: Formula) -> tuple[Status, Trace]:
    ctx.samples += 1
    key = (a, b, phi)
    hit = ctx.memo.get(key)
    if hit is not None:
        return hit
    out = _check_dispatch(ctx, a, b, phi)
    ctx.memo[key] = out
    return out


def _check_dispatch(ctx: _Ctx, a: Value, b: Value, phi: Formula) -> tuple[Status, Trace]:
    match phi:
        case Mem(x, y):
            return _check_mem(ctx, a, b, _as_name(x), _as_name(y))
        case Eq(x, y):
            return _check_eq(ctx, a, b, _as_name(x), _as_name(y))
        case And():
            return _check_and(ctx, a, b, phi)
        case Or():
            return _check_or(ctx, a, b, phi)
        case AllIn():
            return _check_allin(ctx, a, b, phi)
        case ExIn():
            return _check_exin(ctx, a, b, phi)
        case Not(body):
            return _check_not(ctx, body)
        case Imp():
            return _check_imp(ctx, a, b, phi)
        case All() | Ex():
            return Status.UNKNOWN, Trace(
                "quantifier", Status.UNKNOWN, note="unbounded quantifier: not checkable"
            )
    raise TypeError(phi)


def _check_mem(ctx: _Ctx, a: Value, b: Value, x: VName, y: VName) -> tuple[Status, Trace]:
    clause = "mem"
    a0, fail = _project(ctx, a, 0)
    if fail:
        return _fail(clause, fail, "(a)_0")
    b0, fail = _project(ctx, b, 0)
    if fail:
        return _fail(clause, fail, "(b)_0")
    a1, fail = _project(ctx, a, 1)
    if fail:
        return _fail(clause, fail, "(a)_1")
    b1, fail = _project(ctx, b, 1)
    if fail:
        return _fail(clause, fail, "(b)_1")
    matches, exhaustive = lookup_triples(y, a0, b0, ctx.budget, ctx.cfg)
    trace = Trace(clause, Status.UNKNOWN, exhaustive=exhaustive)
    saw_unknown = False
    for z in matches:
        sub_status, sub_trace = _check(ctx, a1, b1, Eq(x, z))
        trace.children.append(sub_trace)
        if sub_status is Status.REALIZED:
            # Candidates from a non-exhaustive lookup are only probable
            # members; a positive answer through them stays Unknown.
            if exhaustive:
                trace.status = Status.REALIZED
                trace.note = "matching triple found"
                return Status.REALIZED, trace
            saw_unknown = True
        elif sub_status is Status.UNKNOWN:
            saw_unknown = True
    if exhaustive and not saw_unknown:
        trace.status = Status.REFUTED
        trace.note = "no matching triple realizes the equality" if matches else "empty exhaustive lookup"
        return Status.REFUTED, trace
    trace.note = "candidate matches passed but membership is not exhaustive" if saw_unknown else ""
    return Status.UNKNOWN, trace


def _check_eq(ctx: _Ctx, a: Value, b: Value, x: VName, y: VName) -> tuple[Status, Trace]:
    clause = "eq"
    if isinstance(x, Nat) and isinstance(y, Nat) and not decide_nat_eq(x.n, y.n):
        return Status.REFUTED, Trace(
            clause,
            Status.REFUTED,
            note=f"distinct numeral names nat {x.n} / nat {y.n}: no realizer exists",
            exhaustive=True,
        )
    trace = Trace(clause, Status.UNKNOWN)
    overall = Status.REALIZED
    for label, src, dst, pi in (("left", x, y, 0), ("right", y, x, 1)):
        triples, exhausted = enumerate_triples(src, ctx.budget, ctx.cfg)
        side = Trace(f"eq/{label}", Status.UNKNOWN, exhaustive=exhausted)
        side_status = Status.REALIZED if exhausted else Status.UNKNOWN
        for c, d, z in triples:
            ac, fail = _apply(ctx, a, c)
            if fail:
                st, t = _fail(f"eq/{label}", fail, "a·c")
                side.children.append(t)
                side_status = st if st is Status.REFUTED else _meet(side_status, st)
                if st is Status.REFUTED:
                    side_status = Status.REFUTED
                    break
                continue
            bd, fail = _apply(ctx, b, d)
            if fail:
                st, t = _fail(f"eq/{label}", fail, "b·d")
                side.children.append(t)
                if st is Status.REFUTED:
                    side_status = Status.REFUTED
                    break
                side_status = _meet(side_status, st)
                continue
            qa, fail = _project(ctx, ac, pi)
            if fail:
                st, t = _fail(f"eq/{label}", fail, f"(a·c)_{pi}")
                side.children.append(t)
                if st is Status.REFUTED:
                    side_status = Status.REFUTED
                    break
                side_status = _meet(side_status, st)
                continue
            qb, fail = _project(ctx, bd, pi)
            if fail:
                st, t = _fail(f"eq/{label}", fail, f"(b·d)_{pi}")
                side.children.append(t)
                if st is Status.REFUTED:
                    side_status = Status.REFUTED
                    break
                side_status = _meet(side_status, st)
                continue
            sub_status, sub_trace = _check(ctx, qa, qb, Mem(z, dst))
            side.children.append(sub_trace)
            if sub_status is Status.REFUTED:
                side_status = Status.REFUTED
                break
            side_status = _meet(side_status, sub_status)
        side.status = side_status
        trace.children.append(side)
        if side_status is Status.REFUTED:
            trace.status = Status.REFUTED
            return Status.REFUTED, trace
        overall = _meet(overall, side_status)
    trace.status = overall
    trace.exhaustive = overall is Status.REALIZED
    return overall, trace


def _meet(s1: Status, s2: Status) -> Status:
    if Status.REFUTED in (s1, s2):
        return Status.REFUTED
    if Status.UNKNOWN in (s1, s2):
        return Status.UNKNOWN
    return Status.REALIZED


def _check_and(ctx: _Ctx, a: Value, b: Value, phi: And) -> tuple[Status, Trace]:
    clause = "and"
    trace = Trace(clause, Status.UNKNOWN, exhaustive=True)
    overall = Status.REALIZED
    for i, sub in ((0, phi.left), (1, phi.right)):
        pa, fail = _project(ctx, a, i)
        if fail:
            return _fail(clause, fail, f"(a)_{i}")
        pb, fail = _project(ctx, b, i)
        if fail:
            return _fail(clause, fail, f"(b)_{i}")
        st, t = _check(ctx, pa, pb, sub)
        trace.children.append(t)
        if st is Status.REFUTED:
            trace.status = Status.REFUTED
            return Status.REFUTED, trace
        overall = _meet(overall, st)
    trace.status = overall
    return overall, trace


def _check_or(ctx: _Ctx, a: Value, b: Value, phi: Or) -> tuple[Status, Trace]:
    clause = "or"
    ta, fail = _project(ctx, a, 0)
    if fail:
        return _fail(clause, fail, "(a)_0")
    tb, fail = _project(ctx, b, 0)
    if fail:
        return _fail(clause, fail, "(b)_0")
    if not (ta.is_numeral() and tb.is_numeral() and ta == tb and ta.numeral in (0, 1)):
        return Status.REFUTED, Trace(
            clause, Status.REFUTED, note="disjunction tags must both be #0 or both #1",
            exhaustive=True,
        )
    pa, fail = _project(ctx, a, 1)
    if fail:
        return _fail(clause, fail, "(a)_1")
    pb, fail = _project(ctx, b, 1)
    if fail:
        return _fail(clause, fail, "(b)_1")
    side = phi.left if ta.numeral == 0 else phi.right
    st, t = _check(ctx, pa, pb, side)
    trace = Trace(clause, st, note=f"tag #{ta.numeral}", exhaustive=True, children=[t])
    return st, trace


def _check_allin(ctx: _Ctx, a: Value, b: Value, phi: AllIn) -> tuple[Status, Trace]:
    clause = "all-in"
    bound = _as_name(phi.bound)
    triples, exhausted = enumerate_triples(bound, ctx.budget, ctx.cfg)
    trace = Trace(clause, Status.UNKNOWN, exhaustive=exhausted)
    members = Status.REALIZED  # meet over the sampled members only
    for c, d, z in triples:
        ac, fail = _apply(ctx, a, c)
        if fail:
            st, t = _fail(clause, fail, "a·c")
            trace.children.append(t)
            if st is Status.REFUTED:
                trace.status = Status.REFUTED
                return Status.REFUTED, trace
            members = _meet(members, st)
            continue
        bd, fail = _apply(ctx, b, d)
        if fail:
            st, t = _fail(clause, fail, "b·d")
            trace.children.append(t)
            if st is Status.REFUTED:
                trace.status = Status.REFUTED
                return Status.REFUTED, trace
            members = _meet(members, st)
            continue
        st, t = _check(ctx, ac, bd, substitute(phi.body, phi.var, z))
        trace.children.append(t)
        if st is Status.REFUTED:
            trace.status = Status.REFUTED
            return Status.REFUTED, trace
        members = _meet(members, st)
    if exhausted:
        trace.status = members
        return members, trace
    if members is Status.REALIZED and triples:
        trace.note = "all sampled members pass; enumeration truncated"
    trace.status = Status.UNKNOWN
    return Status.UNKNOWN, trace


def _check_exin(ctx: _Ctx, a: Value, b: Value, phi: ExIn) -> tuple[Status, Trace]:
    clause = "ex-in"
    bound = _as_name(phi.bound)
    a0, fail = _project(ctx, a, 0)
    if fail:
        return _fail(clause, fail, "(a)_0")
    b0, fail = _project(ctx, b, 0)
    if fail:
        return _fail(clause, fail, "(b)_0")
    a1, fail = _project(ctx, a, 1)
    if fail:
        return _fail(clause, fail, "(a)_1")
    b1, fail = _project(ctx, b, 1)
    if fail:
        return _fail(clause, fail, "(b)_1")
    matches, exhaustive = lookup_triples(bound, a0, b0, ctx.budget, ctx.cfg)
    trace = Trace(clause, Status.UNKNOWN, exhaustive=exhaustive)
    saw_unknown = False
    for z in matches:
        st, t = _check(ctx, a1, b1, substitute(phi.body, phi.var, z))
        trace.children.append(t)
        if st is Status.REALIZED:
            if exhaustive:
                trace.status = Status.REALIZED
                return Status.REALIZED, trace
            saw_unknown = True
        elif st is Status.UNKNOWN:
            saw_unknown = True
    if exhaustive and not saw_unknown:
        trace.status = Status.REFUTED
        trace.note = "witness key selects no usable triple"
        return Status.REFUTED, trace
    trace.note = "candidate witnesses passed but membership is not exhaustive" if saw_unknown else ""
    return Status.UNKNOWN, trace


def _check_not(ctx: _Ctx, body: Formula) -> tuple[Status, Trace]:
    clause = "not"
    if in_fragment(body):
        if truth_eval(body):
            return Status.REFUTED, Trace(
                clause,
                Status.REFUTED,
                note="body is realizable (decided on the arithmetic fragment)",
                exhaustive=True,
            )
        return Status.REALIZED, Trace(
            clause,
            Status.REALIZED,
            note="no realizer of the body exists (decided on the arithmetic fragment)",
            exhaustive=True,
        )
    return Status.UNKNOWN, Trace(
        clause, Status.UNKNOWN, note="negation quantifies over the whole algebra"
    )


def _constant_output(v: Value) -> Value | None:
    """For K-headed one-argument values the application result is fixed."""
    if isinstance(v.head, Const) and v.head.kind is ConstKind.K and len(v.args) == 1:
        return v.args[0]
    return None


def _check_imp(ctx: _Ctx, a: Value, b: Value, phi: Imp) -> tuple[Status, Trace]:
    clause = "imp"
    ca, cb = _constant_output(a), _constant_output(b)
    decidable = in_fragment(phi.hyp)
    if decidable and not truth_eval(phi.hyp):
        return Status.REALIZED, Trace(
            clause,
            Status.REALIZED,
            note="hypothesis has no realizer (decided on the arithmetic fragment)",
            exhaustive=True,
        )
    if ca is not None and cb is not None:
        # Constant realizers collapse the universal over hypothesis realizers.
        st, t = _check(ctx, ca, cb, phi.concl)
        if st is Status.REALIZED:
            return Status.REALIZED, Trace(
                clause, Status.REALIZED, note="constant realizer: conclusion checked once",
                exhaustive=True, children=[t],
            )
        if st is Status.REFUTED and decidable:
            # Hypothesis realizable and the fixed output fails.
            return Status.REFUTED, Trace(
                clause, Status.REFUTED, note="constant realizer refutes the conclusion",
                exhaustive=True, children=[t],
            )
        return Status.UNKNOWN, Trace(clause, Status.UNKNOWN, children=[t])
    if decidable:
        from .realizers import synthesize  # cycle-free: realizers does not import checker

        wit = synthesize(phi.hyp)
        if wit is not None:
            aw, fail = _apply(ctx, a, wit.a)
            if fail:
                return _fail(clause, fail, "a·witness")
            bw, fail = _apply(ctx, b, wit.b)
            if fail:
                return _fail(clause, fail, "b·witness")
            st, t = _check(ctx, aw, bw, phi.concl)
            if st is Status.REFUTED:
                return Status.REFUTED, Trace(
                    clause, Status.REFUTED,
                    note="synthesized hypothesis witness drives the conclusion to a refutation",
                    exhaustive=True, children=[t],
                )
            return Status.UNKNOWN, Trace(
                clause, Status.UNKNOWN,
                note="one synthesized witness passed; the universal over realizers is open",
                children=[t], witness_directed=True,
            )
    return Status.UNKNOWN, Trace(
        clause, Status.UNKNOWN, note="implication quantifies over the whole algebra"
    )


def check_imp_on_witnesses(
    pair: RealizerPair,
    hyp: Formula,
    concl: Formula,
    witnesses: list[RealizerPair],
    budget: EnumBudget = DEFAULT_BUDGET,
    cfg: FuelConfig = DEFAULT_FUEL,
) -> Verdict:
    """Witness-directed implication check.

    Each witness believed to realize the hypothesis is screened first; the
    implication realizer must send every surviving witness to a realizer of
    the conclusion.  A positive verdict is marked witness-directed: the
    universal claim over the whole algebra remains unverified.
    """
    ctx = _Ctx(budget, cfg)
    trace = Trace("imp/witness-directed", Status.UNKNOWN, witness_directed=True)
    usable = 0
    overall = Status.REALIZED
    for i, w in enumerate(witnesses):
        pre_status, pre_trace = _check(ctx, w.a, w.b, hyp)
        if pre_status is Status.REFUTED:
            trace.children.append(
                Trace("witness", Status.UNKNOWN, note=f"witness {i} does not realize the hypothesis; skipped",
                      children=[pre_trace])
            )
            continue
        usable += 1
        aw, fail = _apply(ctx, pair.a, w.a)
        if fail:
            st, t = _fail("imp/witness", fail, "a·witness")
            trace.children.append(t)
            if st is Status.REFUTED:
                trace.status = Status.REFUTED
                return Verdict(Status.REFUTED, trace, ctx.samples)
            overall = _meet(overall, st)
            continue
        bw, fail = _apply(ctx, pair.b, w.b)
        if fail:
            st, t = _fail("imp/witness", fail, "b·witness")
            trace.children.append(t)
            if st is Status.REFUTED:
                trace.status = Status.REFUTED
                return Verdict(Status.REFUTED, trace, ctx.samples)
            overall = _meet(overall, st)
            continue
        st, t = _check(ctx, aw, bw, concl)
        t.note = (f"witness {i}: " + t.note).rstrip(": ")
        trace.children.append(t)
        if st is Status.REFUTED:
            trace.status = Status.REFUTED
            return Verdict(Status.REFUTED, trace, ctx.samples)
        overall = _meet(overall, st)
    if usable == 0:
        trace.status = Status.UNKNOWN
        trace.note = "no usable witnesses"
        return Verdict(Status.UNKNOWN, trace, ctx.samples)
    trace.status = overall
    trace.note = f"{usable} witness(es); universal claim over the algebra unverified"
    return Verdict(overall, trace, ctx.samples)


# ---------------------------------------------------------------------------
# The bounded-arithmetic fragment: truth oracle


def in_fragment(phi: Formula, bound_vars: frozenset[str] = frozenset()) -> bool:
    """Formulas where realizability coincides with arithmetic truth.

    Atoms compare numeral names (membership also against ω̇); quantifiers are
    bounded by numeral names, existentials also by ω̇.
    """

    def ok_elem(r: NameRef) -> bool:
        return (isinstance(r, str) and r in bound_vars) or isinstance(r, Nat)

    def ok_bound_mem(r: NameRef) -> bool:
        return ok_elem(r) or isinstance(r, Omega)

    match phi:
        case Mem(x, y):
            return ok_elem(x) and ok_bound_mem(y)
        case Eq(x, y):
            return ok_elem(x) and ok_elem(y)
        case And(l, r) | Or(l, r) | Imp(l, r):
            return in_fragment(l, bound_vars) and in_fragment(r, bound_vars)
        case Not(b):
            return in_fragment(b, bound_vars)
        case AllIn(v, bound, body):
            return isinstance(bound, Nat) and in_fragment(body, bound_vars | {v})
        case ExIn(v, bound, body):
            return isinstance(bound, (Nat, Omega)) and in_fragment(body, bound_vars | {v})
        case _:
            return False


def _max_numeral(phi: Formula) -> int:
    def of_ref(r: NameRef) -> int:
        return r.n if isinstance(r, Nat) else 0

    match phi:
        case Mem(x, y) | Eq(x, y):
            return max(of_ref(x), of_ref(y))
        case And(l, r) | Or(l, r) | Imp(l, r):
            return max(_max_numeral(l), _max_numeral(r))
        case Not(b):
            return _max_numeral(b)
        case AllIn(_, bound, body) | ExIn(_, bound, body):
            return max(of_ref(bound), _max_numeral(body))
        case _:
            return 0


def truth_eval(phi: Formula) -> bool:
    """Classical truth over the naturals: nat n ↦ n, mem ↦ <, eq ↦ =.

    Existentials over ω̇ are decided by a saturation bound: every atom
    compares against constants, so witnesses above the largest numeral plus
    one behave identically.
    """
    if not in_fragment(phi):
        raise FragmentError(f"not a bounded-arithmetic formula: {fmt(phi)}")
    return _truth(phi)


def _truth(phi: Formula) -> bool:
    match phi:
        case Mem(x, y):
            xn = _as_nat(x)
            if isinstance(y, Omega):
                return True
            return xn < _as_nat(y)
        case Eq(x, y):
            return _as_nat(x) == _as_nat(y)
        case And(l, r):
            return _truth(l) and _truth(r)
        case Or(l, r):
            return _truth(l) or _truth(r)
        case Not(b):
            return not _truth(b)
        case Imp(h, c):
            return (not _truth(h)) or _truth(c)
        case AllIn(v, bound, body):
            assert isinstance(bound, Nat)
            return all(_truth(substitute(body, v, Nat(m))) for m in range(bound.n))
        case ExIn(v, bound, body):
            if isinstance(bound, Nat):
                rng = range(bound.n)
            else:
                rng = range(_max_numeral(body) + 2)
            return any(_truth(substitute(body, v, Nat(m))) for m in rng)
    raise FragmentError(fmt(phi))


def _as_nat(r: NameRef) -> int:
    if isinstance(r, Nat):
        return r.n
    raise FragmentError(f"non-numeral name in arithmetic position: {r}")
