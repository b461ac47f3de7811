"""Reduction machine: delta rules, partiality, fuel, determinism."""

import pytest
from hypothesis import given, settings, strategies as st

from extreal.compiler import compile_term, lam
from extreal.kernel import apply_value, apply_values, eval_term, kleene_eq
from extreal.terms import (
    App,
    D,
    Defined,
    FuelConfig,
    FuelExhausted,
    IllTypedApplication,
    K,
    KBAR,
    Num,
    Opaque,
    P,
    P0,
    P1,
    PRED,
    S,
    StuckApplication,
    SUCC,
    Tri,
    UnboundVariable,
    Value,
    ValueSizeExceeded,
    Var,
    app,
    num,
    num_value,
    opaque_value,
)

o = opaque_value


def val(t):
    out = eval_term(t)
    assert isinstance(out, Defined), out
    return out.value


def test_constants_are_canonical():
    assert val(K) == Value(K)
    assert val(num(3)) == num_value(3)


def test_k_law_on_opaques():
    a, b = o("a"), o("b")
    out = apply_values(Value(K), [a, b])
    assert isinstance(out, Defined) and out.value == a


def test_kbar_law():
    a, b = o("a"), o("b")
    out = apply_values(Value(KBAR), [a, b])
    assert out.value == b


def test_succ_pred():
    assert kleene_eq(App(SUCC, num(2)), num(3)) is Tri.TRUE
    assert kleene_eq(App(PRED, num(3)), num(2)) is Tri.TRUE
    with pytest.raises(StuckApplication):
        eval_term(App(PRED, num(0)))
    with pytest.raises(StuckApplication):
        eval_term(App(SUCC, K))


def test_d_selects():
    a, b = o("a"), o("b")
    assert apply_values(Value(D), [num_value(3), num_value(3), a, b]).value == a
    assert apply_values(Value(D), [num_value(3), num_value(4), a, b]).value == b
    with pytest.raises(StuckApplication):
        apply_values(Value(D), [o("x"), num_value(0), a, b])


def test_numeral_application_is_ill_typed():
    with pytest.raises(IllTypedApplication):
        eval_term(App(num(3), num(1)))


def test_unbound_variable():
    with pytest.raises(UnboundVariable):
        eval_term(Var("x"))
    assert eval_term(Var("x"), {"x": num_value(1)}).value == num_value(1)


def test_opaque_heads_accumulate():
    out = apply_values(o("f"), [num_value(1), num_value(2)])
    assert isinstance(out, Defined)
    assert isinstance(out.value.head, Opaque) and len(out.value.args) == 2


def test_opaque_attached_value_unwraps():
    v = num_value(9)
    assert val(Opaque("boxed", v)) == v


def test_pairing_projection_laws():
    import random

    rng = random.Random(1)
    from extreal.suites import random_printable_value

    for _ in range(100):
        ta, a = random_printable_value(rng)
        tb, b = random_printable_value(rng)
        assert kleene_eq(App(P0, app(P, ta, tb)), ta) is Tri.TRUE
        assert kleene_eq(App(P1, app(P, ta, tb)), tb) is Tri.TRUE


def test_divergence_exhausts_fuel():
    delta = compile_term(lam("x", App(Var("x"), Var("x"))))
    loop = App(delta, delta)
    assert kleene_eq(loop, loop, FuelConfig(max_steps=2_000)) is Tri.UNKNOWN
    out = eval_term(loop, None, FuelConfig(max_steps=2_000))
    assert isinstance(out, FuelExhausted)
    assert "fuel exhausted" in out.note


def test_determinism_and_fuel_monotonicity():
    import random

    rng = random.Random(2)
    from extreal.suites import random_closed_term
    from extreal.terms import MachineError

    for _ in range(300):
        t = random_closed_term(rng, 8)
        try:
            o1 = eval_term(t, None, FuelConfig(max_steps=500))
        except MachineError:
            continue
        if isinstance(o1, Defined):
            o2 = eval_term(t, None, FuelConfig(max_steps=50_000))
            assert isinstance(o2, Defined)
            assert o1.value == o2.value and o1.steps == o2.steps


def test_value_size_cap_raises():
    # Repeated self-application of an accumulating opaque head doubles size.
    head = o("h")
    grower = compile_term(lam("x", app(Var("x"), Var("x"))))
    gv = val(grower)
    v = head
    with pytest.raises(ValueSizeExceeded):
        for _ in range(64):
            out = apply_value(gv, v, FuelConfig(max_steps=10_000, max_value_size=5_000))
            assert isinstance(out, Defined)
            v = out.value


def test_steps_reported():
    out = eval_term(app(K, num(1), num(2)))
    assert isinstance(out, Defined) and out.steps > 0


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 64), st.integers(0, 64))
def test_d_law_all_small_numerals(n, m):
    a, b = o("a"), o("b")
    want = a if n == m else b
    got = apply_values(Value(D), [num_value(n), num_value(m), a, b])
    assert got.value == want


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 30), st.integers(0, 30))
def test_numeral_injectivity(n, m):
    assert kleene_eq(num(n), num(m)) is Tri.of(n == m)


def test_fuel_config_validation():
    with pytest.raises(ValueError):
        FuelConfig(max_steps=0)
    with pytest.raises(ValueError):
        FuelConfig(max_value_size=0)
