"""Cyclotomic completion elements: reduction, involution, evaluation."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uwrt.errors import DepthExceeded, NotInQ
from uwrt.laurent import ONE, ZERO, ModPoly, ZZ, pochhammer, q_pow
from uwrt.qhat import (DEFAULT_DEPTH, HabiroElem, derivative, equals_at_depth,
                       eval_root, phi_order, reduce, taylor)

qpolys = st.lists(st.integers(min_value=-5, max_value=5), max_size=4).map(
    lambda cs: sum((q_pow(k - 1, c) for k, c in enumerate(cs)), ZERO))


def elems(depth=6):
    return st.lists(qpolys, min_size=0, max_size=depth).map(
        lambda cs: HabiroElem(depth, cs))


def test_constructors():
    assert HabiroElem.zero().is_polynomial_zero()
    assert not HabiroElem.one().is_polynomial_zero()
    assert HabiroElem.one().depth == DEFAULT_DEPTH
    assert HabiroElem(4, {2: ONE}).terms[2] == ONE
    with pytest.raises(ValueError):
        HabiroElem(0)
    with pytest.raises(NotInQ):
        HabiroElem.from_polynomial(q_pow(1) + ONE.shift(1))


def test_reduce_goldens():
    q = HabiroElem.from_polynomial(q_pow(1))
    assert reduce(q, 1) == ONE                       # q = 1 mod (1 - q)
    poch1 = HabiroElem(6, {1: ONE})                  # the element (q)_1
    assert reduce(poch1, 1) == ZERO
    assert reduce(poch1, 2) == pochhammer(1)
    with pytest.raises(DepthExceeded):
        reduce(q, DEFAULT_DEPTH + 1)


def test_mul_absorbs_pochhammer():
    # (q)_1 * (q)_2 lands in slot 2 and beyond, never below
    a = HabiroElem(8, {1: ONE})
    b = HabiroElem(8, {2: ONE})
    prod = a * b
    assert prod.terms[0].is_zero() and prod.terms[1].is_zero()
    assert equals_at_depth(
        prod, HabiroElem.from_polynomial(pochhammer(1) * pochhammer(2), 8), 8)


def test_conj_golden():
    # conj((q)_n) = (-1)^n q^(-n(n+1)/2) (q)_n
    for n in range(5):
        x = HabiroElem(8, {n: ONE})
        c = x.conj().terms[n]
        expected = q_pow(-n * (n + 1) // 2, -1 if n % 2 else 1)
        assert c == expected


def test_eval_root():
    for n in range(1, 6):
        x = HabiroElem(8, {n: ONE})
        for r in range(1, n + 1):
            val = eval_root(x, r)
            assert val == 0
    q = HabiroElem.from_polynomial(q_pow(1))
    assert eval_root(q, 1) == 1
    v3 = eval_root(q, 3)
    assert v3 == ModPoly.variable(ZZ, [1, 1, 1])
    with pytest.raises(DepthExceeded):
        eval_root(HabiroElem(3), 4)


def test_taylor_golden():
    x = HabiroElem(6, {2: ONE})       # (q)_2 = 2h^2 + O(h^3) at q = 1
    c0, c1, c2 = taylor(x, 1, 3)
    assert c0 == 0 and c1 == 0 and c2 == 2
    with pytest.raises(DepthExceeded):
        taylor(x, 3, 3)


def test_derivative():
    x = HabiroElem.from_polynomial(q_pow(3), 8)
    d = derivative(x)
    assert reduce(d, 4) == reduce(
        HabiroElem.from_polynomial(q_pow(2, 3), 4), 4)
    with pytest.raises(DepthExceeded):
        derivative(HabiroElem(1))


def test_phi_order():
    x = HabiroElem(8, {3: ONE})       # (q)_3
    assert phi_order(x, 1, 2) == 2    # capped by kmax
    assert phi_order(x, 2, 3) == 1
    assert phi_order(x, 3, 2) == 1
    assert phi_order(HabiroElem.one(8), 1, 3) == 0


def test_at_depth_and_json():
    x = HabiroElem(6, {0: q_pow(2), 3: ONE})
    assert x.at_depth(4).depth == 4
    with pytest.raises(DepthExceeded):
        x.at_depth(7)
    y = HabiroElem.from_json(x.to_json())
    assert y.depth == x.depth and y.terms == x.terms


@settings(deadline=None, max_examples=40)
@given(elems(), elems())
def test_reduce_respects_ring_ops(x, y):
    for d in (1, 3, 6):
        s = reduce(x, d) + reduce(y, d)
        assert reduce(x + y, d) == reduce(
            HabiroElem.from_polynomial(s, 6), d)


@settings(deadline=None, max_examples=40)
@given(elems())
def test_reduce_is_canonical(x):
    # re-expanding the canonical representative reproduces the class
    for d in (2, 5):
        assert equals_at_depth(
            x, HabiroElem.from_polynomial(reduce(x, d), 6), d)


@settings(deadline=None, max_examples=30)
@given(elems(), elems())
def test_conj_is_ring_involution(x, y):
    assert equals_at_depth(x.conj().conj(), x, 6)
    assert equals_at_depth((x * y).conj(), x.conj() * y.conj(), 6)
    assert equals_at_depth((x + y).conj(), x.conj() + y.conj(), 6)


@settings(deadline=None, max_examples=30)
@given(elems(), elems(), st.integers(min_value=1, max_value=5))
def test_eval_root_is_ring_map(x, y, r):
    assert eval_root(x + y, r) == eval_root(x, r) + eval_root(y, r)
    assert eval_root(x * y, r) == eval_root(x, r) * eval_root(y, r)


@settings(deadline=None, max_examples=30)
@given(elems(), st.integers(min_value=2, max_value=6))
def test_taylor_head_matches_eval_root(x, r):
    head = taylor(x, r, 1)[0]
    assert head == eval_root(x, r)
