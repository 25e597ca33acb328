import pytest
from hypothesis import given, strategies as st

from topoarith.errors import NotationError
from topoarith.notation import format_open, format_topology, parse_open, parse_topology, split_args
from topoarith.numerals import DigitString, Sign
from topoarith.orders import OrderKind
from topoarith import topology as T

OPENS = [
    "suffix(00110)", "suffix()", "ssuffix(01,+)", "ssuffix(1,-)", "sign(+)", "zerotail(3)",
    "zerotail(3,nozero)", "interval(fd,2,0)", "interval(variant,-inf,1)", "interval(signed,-3,inf)",
    "ropen(variant,6,22)", "ropen(variant,1,inf)", "initial(17)", "final(3)", "point(5)", "whole", "empty",
    "meet(suffix(1),initial(9))", "join(whole,point(3),point(4))",
]
TOPOLOGIES = [
    "discrete", "indiscrete", "finaldigits", "signedfinaldigits", "initialsegments", "finalsegments",
    "order(fd)", "order(variant)", "rightopen(variant)", "restrict(discrete,[0,17])",
    "blend(discrete,finaldigits,[0,5])", "isolatebelow(finaldigits,17)", "union(finaldigits,initialsegments)",
    "augmentinitial(finaldigits)", "augmentfinal(order(fd))", "restrict(isolatebelow(finaldigits,3),[0,9])",
]


@pytest.mark.parametrize("text", OPENS)
def test_open_round_trip(text):
    assert format_open(parse_open(text)) == text


@pytest.mark.parametrize("text", TOPOLOGIES)
def test_topology_round_trip(text):
    assert format_topology(parse_topology(text)) == text


def test_parsed_values():
    assert parse_open("suffix(00110)") == T.SuffixClass(DigitString.parse("00110"))
    assert parse_open("ssuffix(1,-)") == T.SignedSuffixClass(DigitString.parse("1"), Sign.NEGATIVE)
    assert parse_open(" interval( fd , 2 , 0 ) ") == T.OrderInterval(OrderKind.FINAL_DIGITS, 2, 0)
    assert parse_topology("restrict(discrete,[0,17])") == T.Restrict(T.Discrete(), 17)


def test_bare_segment_bound():
    assert parse_topology("restrict(discrete,17)") == T.Restrict(T.Discrete(), 17)


def test_split_args_respects_nesting():
    assert split_args("a,b(c,d),[0,3]") == ["a", "b(c,d)", "[0,3]"]


@pytest.mark.parametrize(
    "text",
    ["suffix(012)", "bogus(1)", "zerotail(3,maybe)", "point()", "interval(fd,1)", "sign(0)", "meet(suffix(1"],
)
def test_bad_opens(text):
    with pytest.raises(NotationError):
        parse_open(text)


@pytest.mark.parametrize("text", ["order", "restrict(discrete,[1,17])", "discrete(1)", "union(discrete)", "nope"])
def test_bad_topologies(text):
    with pytest.raises(NotationError):
        parse_topology(text)


@given(st.integers(0, 1 << 40), st.integers(0, 12))
def test_suffix_round_trip_random(v, k):
    s = DigitString.parse(format(v % (1 << k), f"0{k}b") if k else "")
    U = T.SuffixClass(s)
    assert parse_open(format_open(U)) == U
