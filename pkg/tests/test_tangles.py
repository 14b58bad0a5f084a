"""Sliced diagrams: parsing, validation, linking data, the contraction
engine and its Kronecker packing."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uwrt.errors import (ColorCountMismatch, DiagramSyntaxError,
                         InterfaceMismatch, OpenDiagram, UnknownName,
                         UnsupportedCrossing)
from uwrt.laurent import LaurentFrac, LaurentU, ONE, q_pow, qnum, u_pow
from uwrt.repring import BasisCombo
from uwrt.reps import twist_eigen
from uwrt.tangles import (builtin, closure_of_braid, colored_jones,
                          framing_adjust, jones_multilinear, linking_data,
                          pack, parse_diagram, print_diagram, unpack, _padd,
                          _pmul)

small_laurents = st.builds(LaurentU,
                           st.integers(min_value=-6, max_value=6),
                           st.lists(st.integers(min_value=-99, max_value=99),
                                    max_size=5))


def test_parse_and_print_round_trip():
    for name in ("unknot", "unknot+1", "hopf", "trefoil", "borromean"):
        d = builtin(name)
        assert parse_diagram(print_diagram(d)) == d


def test_parse_comments_and_blanks():
    d = parse_diagram("# a round unknot\nU(1)\n\nA(1)  # done\n")
    assert d.component_count == 1


def test_syntax_error_position():
    with pytest.raises(DiagramSyntaxError) as err:
        parse_diagram("U(1)\nZ(9)\n")
    assert err.value.line == 2 and err.value.column == 1
    with pytest.raises(DiagramSyntaxError) as err:
        parse_diagram("U(1) U(x)\n")
    assert err.value.line == 1 and err.value.column == 6
    with pytest.raises(DiagramSyntaxError):
        parse_diagram("   \n# only comments\n")


def test_validation_errors():
    with pytest.raises(InterfaceMismatch):
        parse_diagram("U(1)\nA(1) A(1)\n")        # consumes too much
    with pytest.raises(OpenDiagram):
        parse_diagram("U(1)\n")                   # strands left open
    with pytest.raises(InterfaceMismatch):
        parse_diagram("U(1) U(2)\nA(1)\nA(2)\n")  # strands unconsumed
    with pytest.raises(InterfaceMismatch):
        parse_diagram("U(2)\nA(2)\n")             # ids not contiguous
    with pytest.raises(InterfaceMismatch):
        parse_diagram("U(1)\n|1^ |1_\nA(1)\n")    # orientation mismatch


def test_unknot_values():
    d = builtin("unknot")
    for n in range(5):
        assert colored_jones(d, (n,)) == qnum(n + 1)
    flipped = parse_diagram("U'(1)\nA(1)\n")
    for n in range(4):
        assert colored_jones(flipped, (n,)) == qnum(n + 1)


def test_kinked_unknot():
    assert colored_jones(builtin("unknot+1"), (1,)) == \
        twist_eigen(1, 1) * qnum(2)
    assert colored_jones(builtin("unknot-1"), (2,)) == \
        twist_eigen(2, -1) * qnum(3)


def test_hopf_values():
    h = builtin("hopf")
    assert colored_jones(h, (0, 3)) == qnum(4)
    assert colored_jones(h, (1, 1)) == qnum(4)
    assert colored_jones(h, (2, 2)) == sum(
        (q_pow(k) for k in range(-4, 5)), LaurentU.zero())
    assert colored_jones(h, (1, 2)) == colored_jones(h, (2, 1))


def test_trefoil_value():
    t = builtin("trefoil")
    assert t.intrinsic_framing == (-3,)
    assert colored_jones(t, (1,)) == \
        -u_pow(9) + u_pow(1) + u_pow(-3) + u_pow(-7)


def test_linking_data():
    assert linking_data(builtin("trefoil")) == [[-3]]
    assert linking_data(builtin("hopf")) == [[0, -1], [-1, 0]]
    assert linking_data(builtin("borromean")) == [[0] * 3] * 3
    assert linking_data(builtin("unknot+1")) == [[1]]


def test_color_count_mismatch():
    with pytest.raises(ColorCountMismatch):
        colored_jones(builtin("hopf"), (1,))
    with pytest.raises(ColorCountMismatch):
        jones_multilinear(builtin("unknot"), (1, 1))


def test_unsupported_crossing():
    d = parse_diagram("U'(1)\nX+(1,1)\nA(1)\n")
    with pytest.raises(UnsupportedCrossing):
        colored_jones(d, (1,))


def test_unknown_builtin():
    with pytest.raises(UnknownName):
        builtin("figure-eight")


def test_jones_multilinear():
    h = builtin("hopf")
    combo = BasisCombo("V", {0: LaurentFrac(2), 2: LaurentFrac(1)})
    direct = jones_multilinear(h, (combo, 1))
    expected = LaurentFrac(colored_jones(h, (0, 1)) * 2
                           + colored_jones(h, (2, 1)))
    assert direct == expected
    assert jones_multilinear(h, (1, 1)) == \
        LaurentFrac(colored_jones(h, (1, 1)))


def test_framing_adjust():
    table = {(1, 2): ONE, (0, 1): qnum(2)}
    out = framing_adjust(table, (1, -1))
    assert out[(1, 2)] == twist_eigen(1, 1) * twist_eigen(2, -1)
    assert out[(0, 1)] == qnum(2) * twist_eigen(1, -1)


def test_closure_components():
    assert builtin("borromean").component_count == 3
    assert builtin("hopf").component_count == 2
    assert closure_of_braid(3, [(1, 1), (2, 1)]).component_count == 1


def test_distant_unlink_multiplicative():
    text = "U(1)\nA(1)\nU(2)\nA(2)\n"
    d = parse_diagram(text)
    for m in range(3):
        for n in range(3):
            assert colored_jones(d, (m, n)) == qnum(m + 1) * qnum(n + 1)


@settings(deadline=None, max_examples=60)
@given(small_laurents)
def test_pack_round_trip(a):
    assert unpack(pack(a)) == a


@settings(deadline=None, max_examples=60)
@given(small_laurents, small_laurents)
def test_packed_arithmetic(a, b):
    assert unpack(_padd(pack(a), pack(b))) == a + b
    assert unpack(_pmul(pack(a), pack(b))) == a * b
