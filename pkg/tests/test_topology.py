import numpy as np
import pytest

from topoarith.errors import CarrierMismatchError, PreconditionError
from topoarith.numerals import DigitString, Sign
from topoarith.orders import OrderKind
from topoarith.topology import (
    EMPTY,
    WHOLE,
    AugmentFinal,
    AugmentInitial,
    Blend,
    Discrete,
    FinalDigits,
    FinalSegment,
    FinalSegments,
    Indiscrete,
    InitialSegment,
    InitialSegments,
    IsolateBelow,
    Join,
    Meet,
    OrderInterval,
    OrderTopology,
    Restrict,
    RightOpenInterval,
    RightOpenTopology,
    SignBlock,
    SignedFinalDigits,
    SignedSuffixClass,
    Singleton,
    SuffixClass,
    ZeroTail,
    basic_nbhd,
    intersect_suffix,
    is_isolated,
    meet,
    member,
    members_upto,
    suffix_class_as_right_open,
)

D = DigitString.parse
U = lambda s: SuffixClass(D(s))  # noqa: E731


def test_member_examples():
    assert member(U("00110"), 6)
    assert not member(U("00110"), 22)
    assert member(ZeroTail(3), 0)
    assert not member(ZeroTail(3, include_zero=False), 0)
    assert member(ZeroTail(3), -24)


def test_member_carrier_mismatch():
    with pytest.raises(CarrierMismatchError):
        member(U("1"), -1)


def test_signed_classes():
    V = SignedSuffixClass(D("1"), Sign.NEGATIVE)
    assert member(V, -3) and not member(V, 3) and not member(V, -2)
    assert member(SignBlock(Sign.POSITIVE), 7) and not member(SignBlock(Sign.POSITIVE), 0)
    with pytest.raises(PreconditionError):
        SignedSuffixClass(D(""), Sign.POSITIVE)


def test_intersect_suffix_examples():
    assert intersect_suffix(D("10"), D("110")) == U("110")
    assert intersect_suffix(D("1"), D("0")) is EMPTY
    assert intersect_suffix(D("0101"), D("0101")) == U("0101")
    assert intersect_suffix(D(""), D("01")) == U("01")


def test_intersect_suffix_pointwise_small():
    xs = np.arange(1 << 10, dtype=np.int64)
    strings = [D(format(v, f"0{k}b")) for k in range(5) for v in range(1 << k)]
    for s in strings:
        for t in strings:
            assert np.array_equal(intersect_suffix(s, t).mask(xs), U(str(s)).mask(xs) & U(str(t)).mask(xs))


@pytest.mark.parametrize(
    "s, lo, hi",
    [("110", 6, 1), ("00110", 6, 22), ("1", 1, None), ("", 0, None), ("0", 0, 1)],
)
def test_suffix_class_as_right_open(s, lo, hi):
    R = suffix_class_as_right_open(D(s))
    assert R == RightOpenInterval(OrderKind.VARIANT, lo, hi)
    xs = np.arange(1 << 12, dtype=np.int64)
    assert np.array_equal(R.mask(xs), U(s).mask(xs))


def test_masks_agree_with_contains():
    xs = np.arange(-300, 300, dtype=np.int64)
    sets = [
        SignedSuffixClass(D("01"), Sign.POSITIVE), ZeroTail(2), ZeroTail(2, False), SignBlock(Sign.NEGATIVE),
        OrderInterval(OrderKind.SIGNED, -3, 5), OrderInterval(OrderKind.SIGNED, None, 2),
        Singleton(-4), WHOLE, EMPTY, Join((Singleton(3), ZeroTail(4))),
    ]
    for S in sets:
        assert S.mask(xs).tolist() == [S.contains(int(x)) for x in xs], S
    nats = np.arange(300, dtype=np.int64)
    for S in [U("011"), OrderInterval(OrderKind.FINAL_DIGITS, 2, 0), RightOpenInterval(OrderKind.VARIANT, 6, 22),
              InitialSegment(9), FinalSegment(9), Meet((U("1"), InitialSegment(40)))]:
        assert S.mask(nats).tolist() == [S.contains(int(x)) for x in nats], S


def test_meet_simplifies():
    assert meet(U("1"), WHOLE) == U("1")
    assert meet(U("1"), EMPTY) is EMPTY
    assert meet(U("110"), InitialSegment(6)) == Singleton(6)
    assert meet(U("1"), U("0"), InitialSegment(10)) is EMPTY
    assert meet() is WHOLE
    assert meet(U("1"), InitialSegment(5)).finite_members() == {1, 3, 5}


def test_members_upto():
    assert members_upto(U("11"), 20).tolist() == [3, 7, 11, 15, 19]
    assert members_upto(ZeroTail(2), 8, signed=True).tolist() == [-8, -4, 0, 4, 8]


def test_basic_nbhd_examples():
    assert basic_nbhd(FinalDigits(), 6, 5) == U("00110")
    assert basic_nbhd(FinalDigits(), 6) == U("110")
    assert basic_nbhd(Restrict(Discrete(), 17), 15) == Singleton(15)
    assert basic_nbhd(Restrict(Discrete(), 17), 30) is WHOLE
    assert basic_nbhd(Indiscrete(), 4) is WHOLE
    assert basic_nbhd(InitialSegments(), 4) == InitialSegment(4)
    assert basic_nbhd(FinalSegments(), 4) == FinalSegment(4)
    assert basic_nbhd(SignedFinalDigits(), 0, 3) == ZeroTail(3)
    assert basic_nbhd(SignedFinalDigits(), -5, 2) == SignedSuffixClass(D("01"), Sign.NEGATIVE)


@pytest.mark.parametrize(
    "tau, x",
    [
        (OrderTopology(OrderKind.FINAL_DIGITS), 6), (OrderTopology(OrderKind.VARIANT), 0),
        (OrderTopology(OrderKind.VARIANT), 1), (OrderTopology(OrderKind.SIGNED), -3),
        (OrderTopology(OrderKind.SIGNED), 0), (RightOpenTopology(OrderKind.VARIANT), 5),
        (Blend(Discrete(), FinalDigits(), 10), 4), (Blend(Discrete(), FinalDigits(), 10), 40),
        (AugmentFinal(FinalDigits()), 9), (AugmentInitial(FinalDigits()), 9),
    ],
)
def test_basic_nbhd_contains_point_and_shrinks(tau, x):
    signed = isinstance(tau, OrderTopology) and tau.kind is OrderKind.SIGNED
    xs = np.arange(-512 if signed else 0, 513, dtype=np.int64)
    prev = None
    for h in range(6):
        N = basic_nbhd(tau, x, h)
        assert member(N, x)
        mask = N.mask(xs)
        if prev is not None:
            assert not (mask & ~prev).any()
        prev = mask


def test_is_isolated_examples():
    assert is_isolated(IsolateBelow(FinalDigits(), 17), 15) is True
    assert is_isolated(IsolateBelow(FinalDigits(), 17), 18) is False
    assert is_isolated(FinalDigits(), 6) is False
    assert all(is_isolated(AugmentInitial(FinalDigits()), n) for n in range(200))
    assert is_isolated(AugmentFinal(FinalDigits()), 5) is None


def test_isolate_below_isolates_exactly_the_segment():
    tau = IsolateBelow(FinalDigits(), 17)
    assert [n for n in range(64) if is_isolated(tau, n)] == list(range(18))


def test_topology_strings():
    assert str(Restrict(Discrete(), 17)) == "restrict(discrete,[0,17])"
    assert str(AugmentInitial(FinalDigits())) == "augmentinitial(finaldigits)"
    assert str(OrderTopology(OrderKind.SIGNED)) == "order(signed)"
