import pytest
from hypothesis import given
from hypothesis import strategies as st

from gsfs import (
    GsfsSymbol,
    InvalidSymbol,
    LocalActionSymbol,
    NotInImage,
    equivalent,
    equivalent_local,
    from_local_action,
    local_sing_count,
    normalize_local,
    to_local_action,
    validate_local,
)

from helpers import census, scramble

census_members = st.sampled_from(census())


def L(b=0, eps="o1", g=0, f=0, k1=0, t=0, k2=0, s=0, k3=0, pairs=(), r=(), q=()):
    return LocalActionSymbol(b, eps, g, f, k1, t, k2, s, k3, pairs, r, q)


def rules(symbol):
    return [v.rule for v in validate_local(symbol)]


def test_valid_symbol():
    assert validate_local(L(g=1, f=2, k1=2, pairs=[(3, 1)])) == []
    assert validate_local(L(b=-5, s=3, k3=1, r=[0, 2], q=[4])) == []


def test_k1_exceeds_f():
    assert rules(L(k1=1)) == ["k1<=f"]


def test_k2_k3_bounds():
    assert "k2<=t" in rules(L(t=1, k2=2, b=0))
    assert "k3<=s" in rules(L(s=0, k3=1, q=[0]))


def test_odd_entry():
    assert rules(L(s=1, r=[3])) == ["even"]


def test_tuple_lengths():
    assert rules(L(s=2, k3=1, r=[], q=[2])) == ["r-length"]
    assert rules(L(s=2, k3=1, r=[0], q=[])) == ["q-length"]


def test_b_zero_when_f_plus_t_positive():
    problems = validate_local(L(b=2, f=1))
    assert [str(v) for v in problems] == ["b must be 0 when f+t>0"]
    assert rules(L(b=1, t=1)) == ["b-zero"]


def test_b_domains_without_fixed_blocks():
    assert rules(L(b=1, eps="n1", g=1, pairs=[(2, 1)])) == ["b-zero"]
    assert rules(L(b=2, eps="o2", pairs=[(3, 1)])) == ["b-z2"]
    assert rules(L(b=-9, eps="n2", g=1)) == []


def test_k_is_derived():
    assert L(f=3, k1=1, t=2, k2=2, s=1, k3=1, q=[0]).k == 4


def test_normalize_local_sorts_tuples():
    n = normalize_local(L(s=3, r=[4, 0, 2]))
    assert n.r == (0, 2, 4)
    n = normalize_local(L(s=2, k3=2, q=[6, 2]))
    assert n.q == (2, 6)


def test_normalize_local_carry():
    assert normalize_local(L(pairs=[(3, 5)])) == L(b=1, pairs=[(3, 2)])
    # b forced to 0 when there are fixed-point blocks: the carry is absorbed
    assert normalize_local(L(f=1, pairs=[(3, 5)])) == L(f=1, pairs=[(3, 2)])


def test_normalize_local_idempotent():
    s = L(b=3, eps="o2", s=2, k3=1, pairs=[(5, 8), (3, -1)], r=[2], q=[0])
    once = normalize_local(s)
    assert normalize_local(once) == once
    assert validate_local(once) == []


def test_normalize_local_rejects():
    with pytest.raises(InvalidSymbol):
        normalize_local(L(k1=1))


def test_equivalent_local():
    a = L(s=2, pairs=[(5, 2), (3, 1)], r=[4, 2])
    b = L(s=2, pairs=[(3, 1), (5, 2)], r=[2, 4])
    assert equivalent_local(a, b)
    assert not equivalent_local(L(s=1, r=[2]), L(s=1, k3=1, q=[2]))


def test_to_local_action_examples():
    assert to_local_action(GsfsSymbol(0, "o1", 1, 2, [(3, 1)])) == L(g=1, f=2, k1=2, pairs=[(3, 1)])
    assert to_local_action(GsfsSymbol(3, "o1", 0, 0)) == L(b=3)


def test_to_local_action_rejects_inadmissible():
    with pytest.raises(InvalidSymbol):
        to_local_action(GsfsSymbol(1, "o1", 0, 1))


@pytest.mark.parametrize("symbol, condition", [
    (L(f=1, k1=0), "k1!=f"),
    (L(s=1, r=[2]), "s!=0"),
    (L(t=1), "t!=0"),
    (L(t=1, s=1, r=[0]), "t!=0"),
])
def test_from_local_action_not_in_image(symbol, condition):
    with pytest.raises(NotInImage) as info:
        from_local_action(symbol)
    assert info.value.condition == condition


def test_from_local_action_rejects_inadmissible():
    with pytest.raises(InvalidSymbol):
        from_local_action(L(b=1, f=1, k1=1))


@given(census_members, st.randoms(use_true_random=False))
def test_bridge_round_trip(canon, rng):
    s = scramble(canon, rng)
    image = to_local_action(s)
    assert validate_local(image) == []
    assert from_local_action(image) == s
    assert local_sing_count(image) == 0


@given(census_members, census_members, st.randoms(use_true_random=False))
def test_bridge_respects_equivalence(a, b, rng):
    b = scramble(a, rng) if rng.random() < 0.5 else b
    assert equivalent(a, b) == equivalent_local(to_local_action(a), to_local_action(b))


def test_local_sing_count():
    assert local_sing_count(L(s=3, k3=1, r=[2, 4], q=[2])) == 8
    assert local_sing_count(L()) == 0
