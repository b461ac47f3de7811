"""Independent reference oracle for the realizability clauses.

A direct boolean recursion over the defining clauses, valid on hereditarily
finite explicit names only.  It shares nothing with the production checker
beyond the reduction machine: no lookup indexing, no memo, no verdict
calculus.  Crashing applications count as non-realization.
"""

from __future__ import annotations

from extreal.formulas import AllIn, And, Eq, ExIn, Formula, Mem, Or, substitute
from extreal.kernel import apply_value, project
from extreal.names import Explicit, VName
from extreal.terms import DEFAULT_FUEL, Defined, FuelConfig, MachineError, Value


class OracleFuelOut(RuntimeError):
    pass


def _triples(x: VName):
    if isinstance(x, Explicit):
        return x.triples
    raise TypeError(f"reference oracle needs explicit names, got {x!r}")


def _proj(v: Value, i: int, cfg: FuelConfig) -> Value | None:
    try:
        out = project(v, i, cfg)
    except MachineError:
        return None
    if out is None:
        raise OracleFuelOut
    return out


def _app(f: Value, a: Value, cfg: FuelConfig) -> Value | None:
    try:
        out = apply_value(f, a, cfg)
    except MachineError:
        return None
    if not isinstance(out, Defined):
        raise OracleFuelOut
    return out.value


def realizes(a: Value, b: Value, phi: Formula, cfg: FuelConfig = DEFAULT_FUEL) -> bool:
    match phi:
        case Mem(x, y):
            a0 = _proj(a, 0, cfg)
            b0 = _proj(b, 0, cfg)
            a1 = _proj(a, 1, cfg)
            b1 = _proj(b, 1, cfg)
            if None in (a0, b0, a1, b1):
                return False
            for ka, kb, z in _triples(y):
                if ka == a0 and kb == b0 and realizes(a1, b1, Eq(x, z), cfg):
                    return True
            return False
        case Eq(x, y):
            for src, dst, pi in ((x, y, 0), (y, x, 1)):
                for c, d, z in _triples(src):
                    ac = _app(a, c, cfg)
                    bd = _app(b, d, cfg)
                    if ac is None or bd is None:
                        return False
                    qa = _proj(ac, pi, cfg)
                    qb = _proj(bd, pi, cfg)
                    if qa is None or qb is None:
                        return False
                    if not realizes(qa, qb, Mem(z, dst), cfg):
                        return False
            return True
        case And(left, right):
            a0, b0 = _proj(a, 0, cfg), _proj(b, 0, cfg)
            a1, b1 = _proj(a, 1, cfg), _proj(b, 1, cfg)
            if None in (a0, b0, a1, b1):
                return False
            return realizes(a0, b0, left, cfg) and realizes(a1, b1, right, cfg)
        case Or(left, right):
            ta, tb = _proj(a, 0, cfg), _proj(b, 0, cfg)
            if ta is None or tb is None:
                return False
            if not (ta.is_numeral() and tb.is_numeral() and ta == tb and ta.numeral in (0, 1)):
                return False
            pa, pb = _proj(a, 1, cfg), _proj(b, 1, cfg)
            if pa is None or pb is None:
                return False
            side = left if ta.numeral == 0 else right
            return realizes(pa, pb, side, cfg)
        case AllIn(var, bound, body):
            for c, d, z in _triples(bound):
                ac = _app(a, c, cfg)
                bd = _app(b, d, cfg)
                if ac is None or bd is None:
                    return False
                if not realizes(ac, bd, substitute(body, var, z), cfg):
                    return False
            return True
        case ExIn(var, bound, body):
            a0, b0 = _proj(a, 0, cfg), _proj(b, 0, cfg)
            a1, b1 = _proj(a, 1, cfg), _proj(b, 1, cfg)
            if None in (a0, b0, a1, b1):
                return False
            for ka, kb, z in _triples(bound):
                if ka == a0 and kb == b0 and realizes(a1, b1, substitute(body, var, z), cfg):
                    return True
            return False
    raise TypeError(f"clause not covered by the reference oracle: {phi!r}")


def nat_explicit(n: int) -> Explicit:
    """The numeral name spelled out as explicit triples, for oracle use."""
    from extreal.terms import num_value

    return Explicit(
        tuple((num_value(m), num_value(m), nat_explicit(m)) for m in range(n))
    )
