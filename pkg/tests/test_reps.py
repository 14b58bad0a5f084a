"""Quantum sl2 structure data and the braiding blocks."""

import pytest

from uwrt.errors import ShapeMismatch
from uwrt.laurent import ONE, falling_q, qnum, u_pow, v_pow
from uwrt.reps import braiding, irrep, qtrace, twist_eigen, unknot_value


def _compose(b2, b1):
    """Matrix of b2 after b1 as a dict (input pair) -> {output pair: c}."""
    out = {}
    for (i, j), terms in b1.entries.items():
        acc = {}
        for (j2, i2, c) in terms:
            for (i3, j3, c2) in b2.entries[(j2, i2)]:
                key = (i3, j3)
                acc[key] = acc.get(key, ONE * 0) + c * c2
        out[(i, j)] = {k: v for k, v in acc.items() if not v.is_zero()}
    return out


def test_irrep_matrices():
    rho = irrep(2)
    assert rho.K[(0, 0)] == v_pow(2)
    assert rho.Kinv[(2, 2)] == v_pow(2)
    assert rho.e_pow(1)[(0, 1)] == falling_q(2, 1)
    assert rho.e_pow(0) == {(i, i): ONE for i in range(3)}
    with pytest.raises(ValueError):
        irrep(-1)


def test_braiding_weight_conservation():
    for m in range(3):
        for n in range(3):
            for sign in (1, -1):
                b = braiding(m, n, sign)
                for (i, j), terms in b.entries.items():
                    assert terms
                    for (j2, i2, c) in terms:
                        assert 0 <= i2 <= m and 0 <= j2 <= n
                        assert i2 + j2 == i + j


def test_braiding_inverse():
    for m in range(4):
        for n in range(4):
            comp = _compose(braiding(n, m, -1), braiding(m, n, 1))
            for (i, j), acc in comp.items():
                assert acc == {(i, j): ONE}


def test_qtrace():
    for n in range(5):
        ident = {(i, i): ONE for i in range(n + 1)}
        assert qtrace(n, ident) == unknot_value(n)
    assert qtrace(1, {(0, 0): u_pow(2)}) == u_pow(0) * v_pow(-1) * u_pow(2)
    with pytest.raises(ShapeMismatch):
        qtrace(1, {(2, 0): ONE})


def test_twist_eigen():
    assert twist_eigen(1, 1) == u_pow(3)
    assert twist_eigen(2, -1) == u_pow(-8)
    for n in range(4):
        assert twist_eigen(n, 2) * twist_eigen(n, -2) == ONE


def test_unknot_value():
    assert unknot_value(0) == ONE
    assert unknot_value(1) == qnum(2)
    assert unknot_value(3) == qnum(4)
