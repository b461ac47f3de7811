# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of the pure reduction machine.

Same fueled call-by-value semantics, same step accounting, same exceptions;
terms and values are converted to native nodes at the boundary and the hot
loop runs on C-tagged objects.  Selected automatically by extreal.kernel
when built.
"""

from .bracket import EXPANSIONS, Lam
from .terms import (
    App,
    Const,
    ConstKind,
    intern_value,
    DEFAULT_FUEL,
    Defined,
    FuelExhausted,
    IllTypedApplication,
    Num,
    Opaque,
    StuckApplication,
    Tri,
    UnboundVariable,
    Value,
    ValueSizeExceeded,
    Var,
)

# Head tags.
cdef int T_K = 0
cdef int T_KBAR = 1
cdef int T_S = 2
cdef int T_D = 3
cdef int T_SUCC = 4
cdef int T_PRED = 5
cdef int T_NUM = 6
cdef int T_OPAQUE = 7

cdef dict _KIND_TO_TAG = {
    ConstKind.K: T_K,
    ConstKind.KBAR: T_KBAR,
    ConstKind.S: T_S,
    ConstKind.D: T_D,
    ConstKind.SUCC: T_SUCC,
    ConstKind.PRED: T_PRED,
}

cdef list _TAG_TO_CONST = [None] * 6

for _kind, _tag in _KIND_TO_TAG.items():
    _TAG_TO_CONST[_tag] = Const(_kind)

cdef int[6] _ARITY
_ARITY[T_K] = 2
_ARITY[T_KBAR] = 2
_ARITY[T_S] = 3
_ARITY[T_D] = 4
_ARITY[T_SUCC] = 1
_ARITY[T_PRED] = 1


cdef class NVal:
    cdef int tag
    cdef object num          # Python int when tag == T_NUM
    cdef object opq          # the Opaque head node when tag == T_OPAQUE
    cdef tuple args          # of NVal
    cdef long long size


cdef NVal _mk_nval(int tag, object num, object opq, tuple args):
    cdef NVal v = NVal.__new__(NVal)
    cdef NVal child
    cdef long long size = 1
    v.tag = tag
    v.num = num
    v.opq = opq
    v.args = args
    for child in args:
        size += child.size
    v.size = size
    return v


cdef dict _NUM_CACHE = {}


cdef NVal _nval_num(object n):
    cdef NVal v = _NUM_CACHE.get(n)
    if v is None:
        v = _mk_nval(T_NUM, n, None, ())
        if -1 < n < 256:
            _NUM_CACHE[n] = v
    return v


# --- conversion -------------------------------------------------------------
#
# The checker feeds results of one application straight into the next, so
# conversions are cached in both directions; the cost of crossing the
# boundary is then paid once per distinct value.

cdef dict _TO_NATIVE = {}        # Value -> NVal
cdef dict _FROM_NATIVE = {}      # id(NVal) -> (NVal, Value); the tuple keeps the key alive


cdef void _maybe_trim():
    if len(_TO_NATIVE) > 500_000 or len(_FROM_NATIVE) > 500_000:
        _TO_NATIVE.clear()
        _FROM_NATIVE.clear()


cdef NVal _to_native(object v):
    cdef NVal out = _TO_NATIVE.get(v)
    if out is not None:
        return out
    head = v.head
    cdef tuple args = tuple(_to_native(a) for a in v.args)
    if isinstance(head, Num) and not args:
        out = _nval_num(head.n)
    elif isinstance(head, Num):
        out = _mk_nval(T_NUM, head.n, None, args)
    elif isinstance(head, Opaque):
        out = _mk_nval(T_OPAQUE, None, head, args)
    else:
        out = _mk_nval(<int> _KIND_TO_TAG[head.kind], None, None, args)
    _maybe_trim()
    _TO_NATIVE[v] = out
    _FROM_NATIVE[id(out)] = (out, v)
    return out


cdef object _from_native(NVal v):
    cdef tuple hit = _FROM_NATIVE.get(id(v))
    if hit is not None:
        return hit[1]
    cdef list args = []
    cdef NVal child
    for child in v.args:
        args.append(_from_native(child))
    if v.tag == T_NUM:
        out = intern_value(Value(Num(v.num), tuple(args)))
    elif v.tag == T_OPAQUE:
        out = intern_value(Value(v.opq, tuple(args)))
    else:
        out = intern_value(Value(_TAG_TO_CONST[v.tag], tuple(args)))
    _maybe_trim()
    _FROM_NATIVE[id(v)] = (v, out)
    _TO_NATIVE[out] = v
    return out


cdef bint _nval_eq(NVal a, NVal b):
    if a is b:
        return True
    if a.tag != b.tag or a.size != b.size or len(a.args) != len(b.args):
        return False
    if a.tag == T_NUM:
        if a.num != b.num:
            return False
    elif a.tag == T_OPAQUE:
        if a.opq != b.opq:
            return False
    cdef Py_ssize_t i
    for i in range(len(a.args)):
        if not _nval_eq(<NVal> a.args[i], <NVal> b.args[i]):
            return False
    return True


# --- the machine -------------------------------------------------------------

cdef int OP_EVAL = 0
cdef int OP_APPLY = 1
cdef int OP_PUSH = 2

cdef dict _defined_const_cache = {}


cdef NVal _defined_const_value(object kind):
    cdef NVal v = _defined_const_cache.get(kind)
    if v is None:
        outcome = _run([(OP_EVAL, EXPANSIONS[kind], None)], [], DEFAULT_FUEL.max_steps,
                       DEFAULT_FUEL.max_value_size)
        v = <NVal> outcome[1]
        _defined_const_cache[kind] = v
    return v


cdef NVal _accumulate(NVal f, NVal a, long long max_size):
    if f.size + a.size > max_size:
        raise ValueSizeExceeded(
            f"value of {f.size + a.size} nodes exceeds the cap of {max_size}"
        )
    return _mk_nval(f.tag, f.num, f.opq, f.args + (a,))


cdef tuple _run(list ops, list vstack, long long max_steps, long long max_size):
    """Returns ("d", value, steps) or ("f", steps, note)."""
    cdef long long steps = 0
    cdef int tag, arity, nargs
    cdef NVal f, a, fa, fb, fc
    cdef tuple op
    cdef object t, env
    while ops:
        op = <tuple> ops.pop()
        tag = <int> op[0]
        if tag == OP_PUSH:
            vstack.append(op[1])
        elif tag == OP_EVAL:
            t = op[1]
            env = op[2]
            while True:
                if type(t) is App:
                    ops.append((OP_APPLY, None, None))
                    ops.append((OP_EVAL, (<object> t).arg, env))
                    t = (<object> t).fun
                    continue
                elif type(t) is Const:
                    kind = (<object> t).kind
                    ctag = _KIND_TO_TAG.get(kind)
                    if ctag is not None:
                        vstack.append(_mk_nval(<int> ctag, None, None, ()))
                    else:
                        vstack.append(_defined_const_value(kind))
                elif type(t) is Num:
                    vstack.append(_nval_num((<object> t).n))
                elif type(t) is Var:
                    name = (<object> t).name
                    if env is None or name not in env:
                        raise UnboundVariable(name)
                    vstack.append(_to_native(env[name]))
                elif type(t) is Opaque:
                    attached = (<object> t).value
                    if attached is not None:
                        vstack.append(_to_native(attached))
                    else:
                        vstack.append(_mk_nval(T_OPAQUE, None, t, ()))
                elif type(t) is Value:
                    vstack.append(_to_native(t))
                elif type(t) is NVal:
                    vstack.append(t)
                elif type(t) is Lam:
                    raise TypeError("lambda terms must be compiled before evaluation")
                else:
                    raise TypeError(f"not a term: {t!r}")
                break
        else:  # OP_APPLY
            steps += 1
            if steps > max_steps:
                return (
                    "f",
                    steps - 1,
                    f"fuel exhausted: {len(ops)} pending operations, "
                    f"{len(vstack)} values on the stack",
                )
            a = <NVal> vstack.pop()
            f = <NVal> vstack.pop()
            tag = f.tag
            if tag == T_NUM:
                raise IllTypedApplication(f"numeral #{f.num} applied as a function")
            if tag == T_OPAQUE:
                vstack.append(_accumulate(f, a, max_size))
                continue
            arity = _ARITY[tag]
            nargs = <int> len(f.args)
            if nargs + 1 < arity:
                vstack.append(_accumulate(f, a, max_size))
                continue
            if tag == T_K:
                vstack.append(f.args[0])
            elif tag == T_KBAR:
                vstack.append(a)
            elif tag == T_S:
                fa = <NVal> f.args[0]
                fb = <NVal> f.args[1]
                fc = a
                ops.append((OP_APPLY, None, None))
                ops.append((OP_APPLY, None, None))
                ops.append((OP_PUSH, fc, None))
                ops.append((OP_PUSH, fb, None))
                ops.append((OP_APPLY, None, None))
                ops.append((OP_PUSH, fc, None))
                ops.append((OP_PUSH, fa, None))
            elif tag == T_SUCC:
                if a.tag != T_NUM or a.args:
                    raise StuckApplication("SUCC on a non-numeral")
                vstack.append(_nval_num(a.num + 1))
            elif tag == T_PRED:
                if a.tag != T_NUM or a.args:
                    raise StuckApplication("PRED on a non-numeral")
                if a.num == 0:
                    raise StuckApplication("PRED #0")
                vstack.append(_nval_num(a.num - 1))
            else:  # T_D
                fa = <NVal> f.args[0]
                fb = <NVal> f.args[1]
                if fa.tag != T_NUM or fb.tag != T_NUM or fa.args or fb.args:
                    raise StuckApplication("D selectors must be numerals")
                vstack.append(f.args[2] if fa.num == fb.num else a)
    return ("d", vstack.pop(), steps)


def _finish(tuple outcome):
    if outcome[0] == "d":
        return Defined(_from_native(<NVal> outcome[1]), outcome[2])
    return FuelExhausted(outcome[1], outcome[2])


def eval_term(t, env=None, cfg=DEFAULT_FUEL):
    """Call-by-value, leftmost-innermost evaluation of a term."""
    return _finish(_run([(OP_EVAL, t, env)], [], cfg.max_steps, cfg.max_value_size))


def apply_value(f, a, cfg=DEFAULT_FUEL):
    """The partial application operation of the algebra, on elements."""
    return _finish(
        _run([(OP_APPLY, None, None)], [_to_native(f), _to_native(a)],
             cfg.max_steps, cfg.max_value_size)
    )


def apply_values(f, args, cfg=DEFAULT_FUEL):
    """Left-associated application of several arguments; fuel is budgeted
    per application, steps reported in total."""
    if not args:
        return Defined(f, 0)
    cdef long long total = 0
    cdef tuple outcome
    cdef NVal cur = _to_native(f)
    for a in args:
        outcome = _run([(OP_APPLY, None, None)], [cur, _to_native(a)],
                       cfg.max_steps, cfg.max_value_size)
        if outcome[0] == "f":
            return FuelExhausted(outcome[1], outcome[2])
        cur = <NVal> outcome[1]
        total += <long long> outcome[2]
    return Defined(_from_native(cur), total)


def kleene_eq(t1, t2, cfg=DEFAULT_FUEL):
    """Both sides defined with identical values / definitely different / out of fuel."""
    cdef tuple o1 = _run([(OP_EVAL, t1, None)], [], cfg.max_steps, cfg.max_value_size)
    cdef tuple o2 = _run([(OP_EVAL, t2, None)], [], cfg.max_steps, cfg.max_value_size)
    if o1[0] == "f" or o2[0] == "f":
        return Tri.UNKNOWN
    return Tri.TRUE if _nval_eq(<NVal> o1[1], <NVal> o2[1]) else Tri.FALSE
