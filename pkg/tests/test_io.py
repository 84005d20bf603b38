from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from waringhf.groebner import Ideal
from waringhf.io import IdealFileError, dumps_ideal, loads_ideal, read_ideal, write_ideal
from waringhf.polyring import PolyRing, lex
from waringhf.scalars import GF, QQ

R = PolyRing("x,y,z", GF(32003))

TEXT = """\
# twisted cubic
ring x,y,z over fp:32003

x*z - y^2   # trailing comment
y*z - x^2
"""


def test_loads_basic():
    I = loads_ideal(TEXT)
    assert I.ring == R
    x, y, z = R.gens
    assert list(I.gens) == [x * z - y ** 2, y * z - x ** 2]


def test_roundtrip_with_order_and_qq(tmp_path):
    S = PolyRing("a,b,c", QQ, lex)
    a, b, c = S.gens
    I = Ideal([a ** 2 - (b * c).scale(QQ(Fraction(1, 3))), 5 * b - c], S)
    text = dumps_ideal(I)
    assert text.splitlines()[0] == "ring a,b,c over qq order lex"
    J = loads_ideal(text)
    assert J.ring == S and J.gens == I.gens
    path = tmp_path / "i.txt"
    write_ideal(path, I)
    assert read_ideal(path).gens == I.gens


coeff = st.integers(-32002, 32002)
mono = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))


@settings(max_examples=40)
@given(st.lists(st.dictionaries(mono, coeff, max_size=5), min_size=1, max_size=4))
def test_roundtrip_property(polys):
    gens = [R.from_dict(p) for p in polys]
    I = Ideal(gens, R)
    assert loads_ideal(dumps_ideal(I)).gens == I.gens


@pytest.mark.parametrize("text,line,col", [
    ("", 1, 1),
    ("ring x,y over rr\nx\n", 1, 1),
    ("ring x,y over qq\nx + y\n  x ** y\n", 3, None),
    ("ring x,y over qq\nx + w\n", 2, 5),
    ("\n\n   ring x over fp:4\n", 3, 4),
])
def test_errors_carry_position(text, line, col):
    with pytest.raises(IdealFileError) as info:
        loads_ideal(text, "f.txt")
    e = info.value
    assert e.line == line
    if col is not None:
        assert e.column == col
    assert str(e).startswith(f"f.txt:{line}:")


def test_error_column_of_bad_token():
    with pytest.raises(IdealFileError) as info:
        loads_ideal("ring x,y over qq\n  x*y + $\n")
    assert (info.value.line, info.value.column) == (2, 9)
