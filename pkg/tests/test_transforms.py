from fractions import Fraction as F

import pytest
from hypothesis import given

from gkptri.algebra import ParameterError
from gkptri.core import GkpParams, triangle
from gkptri.transforms import (
    ELEMENT_NAMES,
    S3Elem,
    cayley_table,
    check_group_laws,
    check_triangle_coherence,
    compose,
    elements,
    inverse,
    stanton_sprott,
    transform,
    transform_params,
    transform_rows,
)

from strategies import rats


def normalized(a, b, g, ap, gp):
    return GkpParams.of(a, b, g, ap, -b, gp)


@pytest.mark.parametrize("extended", [False, True])
def test_group_laws(extended):
    assert all(c.passed for c in check_group_laws(extended))


def test_cayley_table_is_a_latin_square():
    table = cayley_table()
    names = list(ELEMENT_NAMES)
    for a in names:
        assert sorted(table[a, b] for b in names) == sorted(names)
        assert sorted(table[b, a] for b in names) == sorted(names)


def test_three_cycles_have_order_three():
    for name in ("ur", "ru"):
        e = S3Elem(name)
        assert compose(e, e) != S3Elem("id")
        assert compose(compose(e, e), e) == S3Elem("id")
        assert inverse(e) == compose(e, e)


def test_rt_example():
    tri = triangle(GkpParams.of(0, 1, 0, 1, -1, 1), 5)
    out = transform(S3Elem("rt"), tri)
    assert out.params == GkpParams.of(0, 1, 1, 1, -1, 0)
    assert out.rows == tuple(tuple(reversed(r)) for r in tri.rows)


@given(rats(5, 4), rats(5, 4), rats(5, 4), rats(5, 4), rats(5, 4))
def test_involutions_and_coherence(a, b, g, ap, gp):
    tri = triangle(normalized(a, b, g, ap, gp), 7)
    for name in ("rt", "ubt", "rur"):
        e = S3Elem(name)
        assert transform(e, transform(e, tri)) == tri
    for e in elements(extended=True):
        assert all(c.passed for c in check_triangle_coherence(e, tri))


@given(rats(4, 3), rats(4, 3), rats(4, 3), rats(4, 3), rats(4, 3))
def test_action_is_a_homomorphism(a, b, g, ap, gp):
    p = normalized(a, b, g, ap, gp)
    for e1 in elements():
        for e2 in elements():
            two_steps = transform_params(e2, transform_params(e1, p))
            assert two_steps == transform_params(compose(e1, e2), p)


def test_group_action_requires_normalization():
    with pytest.raises(ParameterError):
        transform_params(S3Elem("rt"), GkpParams.of(0, 1, 0, 1, 1, 1))


def test_rows_map_needs_no_parameters():
    tri = triangle(GkpParams.of(0, 1, 1, 1, -1, 0), 4)
    bare = transform_rows(S3Elem("ubt"), tri)
    assert bare.params is None
    assert bare.rows == transform(S3Elem("ubt"), tri).rows


@given(rats(4, 3), rats(4, 3), rats(4, 3), rats(4, 3), rats(4, 3))
def test_stanton_sprott(a, b, g, ap, gp):
    tri = triangle(GkpParams.of(a, b, g, ap, b, gp), 7)
    out = stanton_sprott(tri)
    assert triangle(out.params, 7).rows == out.rows


def test_unknown_element():
    with pytest.raises(ValueError):
        S3Elem("xyz")
    with pytest.raises(ValueError):
        S3Elem("rt", sign=2)


def test_negated_element_signs_rows():
    tri = triangle(normalized(1, 2, F(1, 2), 3, -1), 5)
    neg = transform(S3Elem("id", -1), tri)
    assert neg.rows == tuple(tuple((-1) ** n * x for x in r) for n, r in enumerate(tri.rows))
