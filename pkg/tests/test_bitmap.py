import pytest
from hypothesis import given
from hypothesis import strategies as st

from randset.bitmap import Bitmap, WidthMismatchError

widths = st.integers(0, 200)


@st.composite
def pairs(draw):
    w = draw(widths)
    a = draw(st.sets(st.integers(0, max(w - 1, 0)), max_size=w)) if w else set()
    b = draw(st.sets(st.integers(0, max(w - 1, 0)), max_size=w)) if w else set()
    return w, a, b


@given(pairs())
def test_set_algebra_matches_python_sets(p):
    w, a, b = p
    A, B = Bitmap.from_indices(w, a), Bitmap.from_indices(w, b)
    assert set(A & B) == a & b
    assert set(A | B) == a | b
    assert set(A - B) == a - b
    assert set(~A) == set(range(w)) - a
    assert len(A) == len(a)
    assert A.issubset(A | B)
    assert A.issubset(B) == (a <= b)


def test_width_mismatch_raises():
    with pytest.raises(WidthMismatchError):
        Bitmap(3) | Bitmap(4)


def test_out_of_range_rejected():
    with pytest.raises(ValueError):
        Bitmap(3, 0b1000)
    with pytest.raises(ValueError):
        Bitmap.from_indices(3, [3])
    with pytest.raises(ValueError):
        Bitmap(3).with_bit(-1)


def test_contains_and_iter_order():
    b = Bitmap.from_indices(70, [69, 0, 33])
    assert list(b) == [0, 33, 69]
    assert 33 in b and 34 not in b and 70 not in b
