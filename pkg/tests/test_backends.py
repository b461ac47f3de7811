"""Pure-Python and compiled machines implement identical semantics."""

import random

import pytest

from extreal import kernel
from extreal import machine as pure
from extreal.suites import random_closed_term
from extreal.terms import (
    App,
    Defined,
    FuelConfig,
    FuelExhausted,
    MachineError,
    Tri,
    num,
    num_value,
    opaque_value,
)

compiled = kernel.compiled_backend()

needs_compiled = pytest.mark.skipif(
    compiled is None, reason="compiled machine not built"
)


def _outcome(f, t, cfg):
    try:
        return f(t, None, cfg)
    except MachineError as exc:
        return type(exc).__name__


@needs_compiled
def test_backends_agree_on_random_terms():
    rng = random.Random(123)
    cfg = FuelConfig(max_steps=4000)
    for _ in range(2500):
        t = random_closed_term(rng, 9)
        a = _outcome(pure.eval_term, t, cfg)
        b = _outcome(compiled.eval_term, t, cfg)
        if isinstance(a, str) or isinstance(b, str):
            assert a == b, (t, a, b)
        elif isinstance(a, FuelExhausted) or isinstance(b, FuelExhausted):
            assert type(a) == type(b) and a.steps == b.steps, (t, a, b)
        else:
            assert a.value == b.value and a.steps == b.steps, (t, a, b)


@needs_compiled
def test_backends_agree_on_library_realizers():
    from extreal.realizers import realizer_ids, realizer_term

    for ident in realizer_ids():
        t = realizer_term(ident)
        a = pure.eval_term(t)
        b = compiled.eval_term(t)
        assert isinstance(a, Defined) and isinstance(b, Defined)
        assert a.value == b.value and a.steps == b.steps, ident


@needs_compiled
def test_backends_agree_on_apply_and_kleene():
    rng = random.Random(7)
    from extreal.suites import random_printable_value

    for _ in range(200):
        _, f = random_printable_value(rng)
        _, a = random_printable_value(rng)
        try:
            o1 = pure.apply_value(f, a)
        except MachineError as exc:
            with pytest.raises(type(exc)):
                compiled.apply_value(f, a)
            continue
        o2 = compiled.apply_value(f, a)
        assert type(o1) == type(o2)
        if isinstance(o1, Defined):
            assert o1.value == o2.value and o1.steps == o2.steps
    for _ in range(100):
        t1 = random_closed_term(rng, 6)
        t2 = random_closed_term(rng, 6)
        try:
            want = pure.kleene_eq(t1, t2)
        except MachineError as exc:
            with pytest.raises(type(exc)):
                compiled.kleene_eq(t1, t2)
            continue
        assert want is compiled.kleene_eq(t1, t2)


@needs_compiled
def test_compiled_handles_opaque_and_env():
    from extreal.terms import Opaque, Var

    v = opaque_value("q")
    out = compiled.eval_term(Var("x"), {"x": v})
    assert out.value == v
    boxed = compiled.eval_term(Opaque("boxed", num_value(3)))
    assert boxed.value == num_value(3)
    inert = compiled.apply_value(v, num_value(1))
    assert isinstance(inert.value.head, Opaque)


def test_backend_selection_reports():
    assert kernel.BACKEND in ("pure", "compiled")
    assert kernel.pure_backend() is pure
