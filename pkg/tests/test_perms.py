import pytest
from hypothesis import given, strategies as st

from galcensus.perms import (
    Permutation,
    all_permutations,
    format_cycles,
    from_cycles,
    identity,
    parse_cycles,
)


def random_perm(draw, n):
    img = draw(st.permutations(list(range(n))))
    return Permutation(img)


perm_st = st.integers(min_value=1, max_value=8).flatmap(
    lambda n: st.permutations(list(range(n))).map(Permutation)
)


def test_identity_and_call():
    e = identity(4)
    assert e.is_identity()
    assert [e(i) for i in range(4)] == [0, 1, 2, 3]


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


def test_compose_order():
    # (a*b)(x) = a(b(x))
    a = from_cycles(3, [(0, 1)])
    b = from_cycles(3, [(1, 2)])
    ab = a * b
    assert ab(1) == a(b(1)) == a(2) == 2
    assert ab(2) == a(1) == 0


@given(perm_st)
def test_inverse_roundtrip(p):
    assert (p * p.inverse()).is_identity()
    assert (p.inverse() * p).is_identity()


@given(perm_st)
def test_cycle_notation_roundtrip(p):
    text = format_cycles(p)
    assert parse_cycles(text, p.degree) == p


@given(perm_st)
def test_cycle_type_partitions_degree(p):
    assert sum(p.cycle_type()) == p.degree
    assert p.cycle_type() == tuple(sorted(p.cycle_type(), reverse=True))


@given(perm_st, perm_st)
def test_parity_homomorphism(p, q):
    if p.degree != q.degree:
        return
    assert (p * q).is_even() == (p.is_even() == q.is_even())


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_cycles("(1 9)", 6)
    with pytest.raises(ValueError):
        parse_cycles("(1 2)(2 3)", 4)  # not disjoint
    with pytest.raises(ValueError):
        parse_cycles("1 2 3", 3)


def test_all_permutations_count():
    assert sum(1 for _ in all_permutations(4)) == 24
