"""Scenario files: declarations plus directives, executed in order.

Grammar (line oriented; ``--`` comments; ``\\`` continues nothing — keep a
directive on one line):

    fuel 200000            budget 8            seed 7
    term two = SUCC #1
    realizer ir = i_r
    name n4 = nat 4
    name x  = { (#0, #0, nat 1); (#1, #1, nat 2) }
    formula f = eq(n4, n4)
    eval (P0 (P #1 #2)) expect #1
    check (ir, ir) f expect realized
    check (ir, ir) eq(nat 2, nat 2)
    check-with-witnesses (e, e) mem(nat 1, omega) => f witnesses [(w, w)] expect realized
    synth-roundtrip ex y in n4. eq(nat 2, y)
    suite pca-laws

Exit status: 0 when every stated expectation holds, 1 on a mismatch, 2 on a
parse error.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .checker import RealizerPair, Status, check, check_imp_on_witnesses, truth_eval
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
    Not,
    Or,
    fmt,
)
from .kernel import eval_term
from .names import (
    DEFAULT_BUDGET,
    EnumBudget,
    Explicit,
    Graph,
    Internal,
    Nat,
    OMEGA,
    OPair,
    Sing,
    TypeName,
    UPair,
    VName,
    parse_type,
    type_name,
)
from .parser import ParseError, parse, print_term
from .realizers import realizer_term, synthesize, value_of
from .suites import SUITES, run_suite
from .terms import DEFAULT_FUEL, Defined, FuelConfig, FuelExhausted, MachineError, Value
from .compiler import compile_term


class ScenarioError(ValueError):
    def __init__(self, msg: str, line: int):
        super().__init__(f"line {line}: {msg}")
        self.line = line


@dataclass
class DirectiveResult:
    line: int
    kind: str
    text: str
    outcome: str
    expected: str | None
    ok: bool
    trace: object = None


@dataclass
class ScenarioReport:
    results: list[DirectiveResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)


@dataclass
class _Env:
    terms: dict[str, object] = field(default_factory=dict)  # name -> Term
    names: dict[str, VName] = field(default_factory=dict)
    formulas: dict[str, Formula] = field(default_factory=dict)
    cfg: FuelConfig = DEFAULT_FUEL
    budget: EnumBudget = DEFAULT_BUDGET
    seed: int = 0


def _strip_comment(line: str) -> str:
    idx = line.find("--")
    return line if idx < 0 else line[:idx]


def _split_top(text: str, sep: str) -> list[str]:
    """Split on sep at paren/brace/bracket depth zero."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def _parse_term(env: _Env, text: str, line: int):
    text = text.strip()
    try:
        t = parse(text)
    except ParseError as exc:
        raise ScenarioError(f"bad term {text!r}: {exc}", line)
    t = compile_term(t)
    return _resolve_term_names(env, t)


def _resolve_term_names(env: _Env, t):
    from .terms import App, Var

    match t:
        case Var(name) if name in env.terms:
            return env.terms[name]
        case App(fun, arg):
            return App(_resolve_term_names(env, fun), _resolve_term_names(env, arg))
        case _:
            return t


def _parse_name(env: _Env, text: str, line: int) -> VName:
    text = text.strip()
    if text in env.names:
        return env.names[text]
    if text == "omega":
        return OMEGA
    head, _, rest = text.partition(" ")
    rest = rest.strip()
    if head == "nat":
        return Nat(int(rest))
    if head in ("sing", "upair", "opair"):
        args = _split_name_args(env, rest, line, 1 if head == "sing" else 2)
        if head == "sing":
            return Sing(args[0])
        if head == "upair":
            return UPair(args[0], args[1])
        return OPair(args[0], args[1])
    if head == "F":
        return type_name(parse_type(rest))
    if head == "int":
        body, _, ty = rest.rpartition(":")
        term = _parse_term(env, body, line)
        out = eval_term(term, None, env.cfg)
        if not isinstance(out, Defined):
            raise ScenarioError("internalized term does not evaluate", line)
        from .names import internalize

        return internalize(out.value, parse_type(ty), env.budget)
    if head == "graph":
        body, _, types = rest.rpartition(":")
        dom, _, cod = types.partition("->")
        term = _parse_term(env, body, line)
        out = eval_term(term, None, env.cfg)
        if not isinstance(out, Defined):
            raise ScenarioError("graph term does not evaluate", line)
        return Graph(out.value, parse_type(dom), parse_type(cod))
    if text.startswith("{"):
        if not text.endswith("}"):
            raise ScenarioError("unterminated explicit name", line)
        inner = text[1:-1].strip()
        triples = []
        if inner:
            for part in _split_top(inner, ";"):
                part = part.strip()
                if not part:
                    continue
                if not (part.startswith("(") and part.endswith(")")):
                    raise ScenarioError(f"triple expected, got {part!r}", line)
                fields = _split_top(part[1:-1], ",")
                if len(fields) != 3:
                    raise ScenarioError("triples have three components", line)
                t1 = _eval_value(env, fields[0], line)
                t2 = _eval_value(env, fields[1], line)
                member = _parse_name(env, fields[2], line)
                triples.append((t1, t2, member))
        return Explicit(tuple(triples))
    raise ScenarioError(f"unknown name syntax {text!r}", line)


def _split_name_args(env: _Env, text: str, line: int, n: int) -> list[VName]:
    # Arguments are either parenthesized name expressions or simple tokens.
    parts = _split_top(text, " ") if "(" not in text else None
    if parts is not None:
        toks = [p for p in parts if p.strip()]
        if len(toks) == n:
            joined = []
            if n == 1:
                return [_parse_name(env, text, line)]
            # two single-token or name-reference args, possibly multiword like "nat 3"
            if len(toks) == 2 and n == 2:
                return [_parse_name(env, toks[0], line), _parse_name(env, toks[1], line)]
        # fall through: try splitting "nat 3 nat 4" style
    out, depth, cur = [], 0, []
    pieces = []
    for ch in text:
        if ch == "(":
            depth += 1
            if depth == 1:
                cur = []
                continue
        elif ch == ")":
            depth -= 1
            if depth == 0:
                pieces.append("".join(cur))
                continue
        if depth > 0:
            cur.append(ch)
        elif not ch.isspace():
            raise ScenarioError(
                f"compound name arguments must be parenthesized: {text!r}", line
            )
    if len(pieces) != n:
        raise ScenarioError(f"expected {n} name argument(s) in {text!r}", line)
    return [_parse_name(env, p, line) for p in pieces]


def _eval_value(env: _Env, text: str, line: int) -> Value:
    t = _parse_term(env, text, line)
    out = eval_term(t, None, env.cfg)
    if not isinstance(out, Defined):
        raise ScenarioError(f"key term does not evaluate: {text!r}", line)
    return out.value


def _parse_formula(env: _Env, text: str, line: int) -> Formula:
    text = text.strip()
    if text in env.formulas:
        return env.formulas[text]
    f, rest = _formula_expr(env, text, line)
    if rest.strip():
        raise ScenarioError(f"trailing input after formula: {rest!r}", line)
    return f


def _formula_expr(env: _Env, text: str, line: int):
    # implication, right associative, lowest precedence
    parts = _split_top(text, "\x00")  # placeholder, manual scan below
    del parts
    lhs, rest = _formula_or(env, text, line)
    rest = rest.lstrip()
    if rest.startswith("=>"):
        rhs, rest2 = _formula_expr(env, rest[2:], line)
        return Imp(lhs, rhs), rest2
    return lhs, rest


def _formula_or(env: _Env, text: str, line: int):
    lhs, rest = _formula_and(env, text, line)
    while True:
        rest = rest.lstrip()
        if rest.startswith("\\/"):
            rhs, rest = _formula_and(env, rest[2:], line)
            lhs = Or(lhs, rhs)
        else:
            return lhs, rest


def _formula_and(env: _Env, text: str, line: int):
    lhs, rest = _formula_atom(env, text, line)
    while True:
        rest = rest.lstrip()
        if rest.startswith("/\\"):
            rhs, rest = _formula_atom(env, rest[2:], line)
            lhs = And(lhs, rhs)
        else:
            return lhs, rest


def _take_balanced(text: str, line: int) -> tuple[str, str]:
    assert text[0] == "("
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                return text[1:i], text[i + 1 :]
    raise ScenarioError("unbalanced parentheses in formula", line)


def _formula_atom(env: _Env, text: str, line: int):
    text = text.lstrip()
    if not text:
        raise ScenarioError("formula expected", line)
    if text.startswith("~"):
        body, rest = _formula_atom(env, text[1:], line)
        return Not(body), rest
    if text.startswith("("):
        inner, rest = _take_balanced(text, line)
        return _parse_formula(env, inner, line), rest
    for kw, cls in (("all ", AllIn), ("ex ", ExIn)):
        if text.startswith(kw):
            rest = text[len(kw):]
            var, _, rest = rest.partition(" in ")
            var = var.strip()
            bound_text, _, body_text = rest.partition(".")
            bound = _name_ref(env, bound_text.strip(), line)
            body, rest2 = _formula_expr(env, body_text, line)
            return cls(var, bound, body), rest2
    for kw, cls in (("ALL ", All), ("EX ", Ex)):
        if text.startswith(kw):
            rest = text[len(kw):]
            var, _, body_text = rest.partition(".")
            body, rest2 = _formula_expr(env, body_text, line)
            return cls(var.strip(), body), rest2
    for kw, cls in (("mem", Mem), ("eq", Eq)):
        if text.startswith(kw) and text[len(kw):].lstrip().startswith("("):
            after = text[len(kw):].lstrip()
            inner, rest = _take_balanced(after, line)
            args = _split_top(inner, ",")
            if len(args) != 2:
                raise ScenarioError(f"{kw} takes two arguments", line)
            return cls(_name_ref(env, args[0].strip(), line),
                       _name_ref(env, args[1].strip(), line)), rest
    # bare formula reference
    for name, f in env.formulas.items():
        if text.startswith(name):
            return f, text[len(name):]
    raise ScenarioError(f"cannot parse formula at {text!r}", line)


def _name_ref(env: _Env, text: str, line: int):
    # A lowercase identifier that is not a declared name is a bound variable.
    if text in env.names:
        return env.names[text]
    if text.isidentifier() and not any(text.startswith(k) for k in ("nat", "omega", "sing", "upair", "opair")):
        return text
    return _parse_name(env, text, line)


def _parse_pair(env: _Env, text: str, line: int) -> RealizerPair:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ScenarioError(f"realizer pair expected, got {text!r}", line)
    parts = _split_top(text[1:-1], ",")
    if len(parts) != 2:
        raise ScenarioError("realizer pairs have two components", line)
    va = _eval_value(env, parts[0], line)
    vb = _eval_value(env, parts[1], line)
    return RealizerPair(va, vb)


_STATUS_WORDS = {
    "realized": Status.REALIZED,
    "refuted": Status.REFUTED,
    "unknown": Status.UNKNOWN,
}


def run_scenario(text: str) -> ScenarioReport:
    env = _Env()
    report = ScenarioReport()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "fuel":
            env.cfg = FuelConfig(max_steps=int(rest), max_value_size=env.cfg.max_value_size)
        elif head == "budget":
            env.budget = EnumBudget(max_index=int(rest),
                                    generators_per_type=env.budget.generators_per_type)
        elif head == "seed":
            env.seed = int(rest)
        elif head == "term":
            name, _, body = rest.partition("=")
            env.terms[name.strip()] = _parse_term(env, body, lineno)
        elif head == "realizer":
            name, _, body = rest.partition("=")
            try:
                env.terms[name.strip()] = realizer_term(body.strip())
            except KeyError as exc:
                raise ScenarioError(str(exc), lineno)
        elif head == "name":
            name, _, body = rest.partition("=")
            env.names[name.strip()] = _parse_name(env, body.strip(), lineno)
        elif head == "formula":
            name, _, body = rest.partition("=")
            env.formulas[name.strip()] = _parse_formula(env, body.strip(), lineno)
        elif head == "eval":
            report.results.append(_run_eval(env, rest, lineno))
        elif head == "check":
            report.results.append(_run_check(env, rest, lineno))
        elif head == "check-with-witnesses":
            report.results.append(_run_check_witnesses(env, rest, lineno))
        elif head == "synth-roundtrip":
            report.results.append(_run_synth(env, rest, lineno))
        elif head == "suite":
            report.results.append(_run_suite_directive(env, rest, lineno))
        else:
            raise ScenarioError(f"unknown directive {head!r}", lineno)
    return report


def _split_expect(text: str) -> tuple[str, str | None]:
    parts = _split_top(text, " ")
    for i, p in enumerate(parts):
        if p == "expect":
            return " ".join(parts[:i]).strip(), " ".join(parts[i + 1 :]).strip()
    return text.strip(), None


def _run_eval(env: _Env, rest: str, lineno: int) -> DirectiveResult:
    body, expected = _split_expect(rest)
    t = _parse_term(env, body, lineno)
    try:
        out = eval_term(t, None, env.cfg)
    except MachineError as exc:
        outcome = f"error: {exc}"
        ok = expected is not None and expected.strip() == "error"
        return DirectiveResult(lineno, "eval", body, outcome, expected, ok if expected else True)
    if isinstance(out, FuelExhausted):
        outcome = "fuel-exhausted"
        ok = expected in (None, "fuel-exhausted")
        return DirectiveResult(lineno, "eval", body, outcome, expected, bool(ok))
    outcome = print_term(_value_to_term(out.value))
    if expected is None:
        return DirectiveResult(lineno, "eval", body, outcome, None, True)
    want = _eval_value(env, expected, lineno)
    return DirectiveResult(lineno, "eval", body, outcome, expected, out.value == want)


def _value_to_term(v: Value):
    from .terms import App

    t = v.head
    for a in v.args:
        t = App(t, _value_to_term(a))
    return t


def _run_check(env: _Env, rest: str, lineno: int) -> DirectiveResult:
    body, expected = _split_expect(rest)
    body = body.strip()
    if not body.startswith("("):
        raise ScenarioError("check needs a realizer pair", lineno)
    pair_text, after = _take_balanced(body, lineno)
    pair = _parse_pair(env, f"({pair_text})", lineno)
    phi = _parse_formula(env, after.strip(), lineno)
    ver = check(pair, phi, env.budget, env.cfg)
    ok = True if expected is None else ver.status is _STATUS_WORDS.get(expected, None)
    return DirectiveResult(lineno, "check", body, ver.status.value, expected, bool(ok), ver.trace)


def _run_check_witnesses(env: _Env, rest: str, lineno: int) -> DirectiveResult:
    body, expected = _split_expect(rest)
    if "witnesses" not in body:
        raise ScenarioError("check-with-witnesses needs a witnesses [...] block", lineno)
    main, _, wtext = body.partition("witnesses")
    main = main.strip()
    pair_text, after = _take_balanced(main, lineno)
    pair = _parse_pair(env, f"({pair_text})", lineno)
    imp = _parse_formula(env, after.strip(), lineno)
    if not isinstance(imp, Imp):
        raise ScenarioError("check-with-witnesses applies to an implication", lineno)
    wtext = wtext.strip()
    if not (wtext.startswith("[") and wtext.endswith("]")):
        raise ScenarioError("witnesses must be bracketed", lineno)
    wits = []
    for part in _split_top(wtext[1:-1], ";"):
        part = part.strip()
        if part:
            wits.append(_parse_pair(env, part, lineno))
    ver = check_imp_on_witnesses(pair, imp.hyp, imp.concl, wits, env.budget, env.cfg)
    ok = True if expected is None else ver.status is _STATUS_WORDS.get(expected, None)
    return DirectiveResult(lineno, "check-with-witnesses", body, ver.status.value,
                           expected, bool(ok), ver.trace)


def _run_synth(env: _Env, rest: str, lineno: int) -> DirectiveResult:
    body, expected = _split_expect(rest)
    phi = _parse_formula(env, body, lineno)
    want = truth_eval(phi)
    wit = synthesize(phi, env.budget, env.cfg)
    got = wit is not None and check(wit, phi, env.budget, env.cfg).status is Status.REALIZED
    agreed = want == got
    outcome = f"truth={want} realizers={got}"
    ok = agreed if expected is None else (expected == "agree") == agreed
    return DirectiveResult(lineno, "synth-roundtrip", body, outcome, expected, ok)


def _run_suite_directive(env: _Env, rest: str, lineno: int) -> DirectiveResult:
    name = rest.strip()
    if name not in SUITES:
        raise ScenarioError(f"unknown suite {name!r}", lineno)
    rep = run_suite(name, env.seed, env.cfg, env.budget)
    outcome = f"{len(rep.cases) - len(rep.failures)}/{len(rep.cases)} cases"
    detail = "\n".join(
        f"  FAIL {c.name}: {c.detail}" + (f"\n    reproduce:\n      {c.snippet}" if c.snippet else "")
        for c in rep.failures
    )
    return DirectiveResult(lineno, "suite", name, outcome + ("\n" + detail if detail else ""),
                           None, rep.ok)
