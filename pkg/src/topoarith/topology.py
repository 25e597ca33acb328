"""Basic open sets and topology descriptors on the naturals and integers.

Every carrier here is infinite, so nothing is stored extensionally.  A
:class:`BasicOpen` is a small immutable description with decidable
membership; a :class:`TopologySpec` describes a topology by the canonical
family of basic neighbourhoods it offers at each point.

Blended topologies always use finite initial segments ``I = [0, b]``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union as TUnion

import numpy as np

from . import kernels
from .errors import CarrierMismatchError, PreconditionError
from .numerals import DigitString, Sign, suffix
from .orders import OrderKind, compare, from_rankv, rankv

__all__ = [
    "Carrier",
    "BasicOpen",
    "SuffixClass",
    "SignedSuffixClass",
    "SignBlock",
    "ZeroTail",
    "OrderInterval",
    "RightOpenInterval",
    "InitialSegment",
    "FinalSegment",
    "Singleton",
    "WholeSpace",
    "EmptySet",
    "Meet",
    "Join",
    "EMPTY",
    "WHOLE",
    "TopologySpec",
    "Discrete",
    "Indiscrete",
    "FinalDigits",
    "SignedFinalDigits",
    "OrderTopology",
    "RightOpenTopology",
    "InitialSegments",
    "FinalSegments",
    "Restrict",
    "Blend",
    "IsolateBelow",
    "Union",
    "AugmentInitial",
    "AugmentFinal",
    "member",
    "members_upto",
    "intersect_suffix",
    "meet",
    "basic_nbhd",
    "is_isolated",
    "suffix_class_as_right_open",
    "order_lower",
    "order_upper",
]


class Carrier(enum.Enum):
    NATURALS = "N"
    INTEGERS = "Z"


def _kind_carrier(kind: OrderKind) -> Carrier:
    return Carrier.INTEGERS if kind.signed else Carrier.NATURALS


def _fmt_end(v: Optional[int], default: str) -> str:
    return default if v is None else str(v)


# ---------------------------------------------------------------------------
# basic open sets


class BasicOpen:
    """Base class of the symbolic open sets.

    Subclasses implement ``contains`` (scalar), ``mask`` (numpy, vectorised)
    and optionally ``finite_members``.  ``carrier`` is ``None`` for sets that
    make sense on either carrier.
    """

    carrier: Optional[Carrier] = None

    def contains(self, x: int) -> bool:
        raise NotImplementedError

    def mask(self, xs: np.ndarray) -> np.ndarray:
        return np.fromiter((self.contains(int(x)) for x in xs), dtype=bool, count=len(xs))

    def finite_members(self) -> Optional[frozenset[int]]:
        """The member set when it is known to be finite, else ``None``."""
        return None

    def __contains__(self, x: int) -> bool:
        return member(self, x)


@dataclass(frozen=True)
class SuffixClass(BasicOpen):
    """Naturals whose binary form ends with ``s`` (leading zeros of ``s`` allowed)."""

    s: DigitString
    carrier = Carrier.NATURALS

    def contains(self, x: int) -> bool:
        return x % self.s.modulus == self.s.value

    def mask(self, xs: np.ndarray) -> np.ndarray:
        if len(self.s) >= 63:
            return super().mask(xs)
        return (xs & (self.s.modulus - 1)) == int(self.s.value)

    def __str__(self) -> str:
        return f"suffix({self.s})"


@dataclass(frozen=True)
class SignedSuffixClass(BasicOpen):
    s: DigitString
    sign: Sign
    carrier = Carrier.INTEGERS

    def __post_init__(self) -> None:
        if len(self.s) == 0 or self.sign == Sign.ZERO:
            raise PreconditionError("signed suffix classes need a nonempty string and a sign")

    def contains(self, x: int) -> bool:
        return (x > 0) - (x < 0) == int(self.sign) and abs(x) % self.s.modulus == self.s.value

    def mask(self, xs: np.ndarray) -> np.ndarray:
        if len(self.s) >= 63:
            return super().mask(xs)
        return (np.sign(xs) == int(self.sign)) & ((np.abs(xs) & (self.s.modulus - 1)) == int(self.s.value))

    def __str__(self) -> str:
        return f"ssuffix({self.s},{self.sign.symbol})"


@dataclass(frozen=True)
class SignBlock(BasicOpen):
    sign: Sign
    carrier = Carrier.INTEGERS

    def contains(self, x: int) -> bool:
        return (x > 0) - (x < 0) == int(self.sign)

    def mask(self, xs: np.ndarray) -> np.ndarray:
        return np.sign(xs) == int(self.sign)

    def __str__(self) -> str:
        return f"sign({self.sign.symbol})"


@dataclass(frozen=True)
class ZeroTail(BasicOpen):
    """Integers of either sign divisible by ``2**k``.

    ``include_zero`` selects whether 0 itself belongs; it does by default
    since zero's digits are all zeros.
    """

    k: int
    include_zero: bool = True
    carrier = Carrier.INTEGERS

    def contains(self, x: int) -> bool:
        if x == 0:
            return self.include_zero
        return x % (1 << self.k) == 0

    def mask(self, xs: np.ndarray) -> np.ndarray:
        out = (xs & ((1 << self.k) - 1)) == 0 if self.k < 63 else xs == 0
        if not self.include_zero:
            out &= xs != 0
        return out

    def __str__(self) -> str:
        return f"zerotail({self.k})" if self.include_zero else f"zerotail({self.k},nozero)"


@dataclass(frozen=True)
class OrderInterval(BasicOpen):
    """Open interval ``(lo, hi)`` of an order; ``None`` ends are unbounded.

    For the variant order an unbounded lower end includes the minimum 0.
    """

    kind: OrderKind
    lo: Optional[int]
    hi: Optional[int]

    @property
    def carrier(self) -> Carrier:  # type: ignore[override]
        return _kind_carrier(self.kind)

    def contains(self, x: int) -> bool:
        return (self.lo is None or compare(self.kind, self.lo, x) < 0) and (
            self.hi is None or compare(self.kind, x, self.hi) < 0
        )

    def mask(self, xs: np.ndarray) -> np.ndarray:
        ends = [v for v in (self.lo, self.hi) if v is not None]
        if not kernels.fits(*ends):
            return super().mask(xs)
        out = np.ones(len(xs), dtype=bool)
        if self.lo is not None:
            out &= kernels.cmp_many(self.kind.code, xs, self.lo) > 0
        if self.hi is not None:
            out &= kernels.cmp_many(self.kind.code, xs, self.hi) < 0
        return out

    def __str__(self) -> str:
        return f"interval({self.kind.value},{_fmt_end(self.lo, '-inf')},{_fmt_end(self.hi, 'inf')})"


@dataclass(frozen=True)
class RightOpenInterval(BasicOpen):
    """Half-open interval ``[lo, hi)``; ``hi=None`` means unbounded above."""

    kind: OrderKind
    lo: int
    hi: Optional[int]

    @property
    def carrier(self) -> Carrier:  # type: ignore[override]
        return _kind_carrier(self.kind)

    def contains(self, x: int) -> bool:
        return compare(self.kind, self.lo, x) <= 0 and (
            self.hi is None or compare(self.kind, x, self.hi) < 0
        )

    def mask(self, xs: np.ndarray) -> np.ndarray:
        ends = [v for v in (self.lo, self.hi) if v is not None]
        if not kernels.fits(*ends):
            return super().mask(xs)
        out = kernels.cmp_many(self.kind.code, xs, self.lo) >= 0
        if self.hi is not None:
            out &= kernels.cmp_many(self.kind.code, xs, self.hi) < 0
        return out

    def __str__(self) -> str:
        return f"ropen({self.kind.value},{self.lo},{_fmt_end(self.hi, 'inf')})"


@dataclass(frozen=True)
class InitialSegment(BasicOpen):
    """``[0, k]`` in the usual order of the naturals."""

    k: int
    carrier = Carrier.NATURALS

    def contains(self, x: int) -> bool:
        return 0 <= x <= self.k

    def mask(self, xs: np.ndarray) -> np.ndarray:
        return (xs >= 0) & (xs <= self.k)

    def finite_members(self) -> frozenset[int]:
        return frozenset(range(self.k + 1))

    def __str__(self) -> str:
        return f"initial({self.k})"


@dataclass(frozen=True)
class FinalSegment(BasicOpen):
    """``[k, oo)`` in the usual order of the naturals."""

    k: int
    carrier = Carrier.NATURALS

    def contains(self, x: int) -> bool:
        return x >= self.k

    def mask(self, xs: np.ndarray) -> np.ndarray:
        return xs >= self.k

    def __str__(self) -> str:
        return f"final({self.k})"


@dataclass(frozen=True)
class Singleton(BasicOpen):
    x: int

    def contains(self, x: int) -> bool:
        return x == self.x

    def mask(self, xs: np.ndarray) -> np.ndarray:
        return xs == self.x

    def finite_members(self) -> frozenset[int]:
        return frozenset((self.x,))

    def __str__(self) -> str:
        return f"point({self.x})"


@dataclass(frozen=True)
class WholeSpace(BasicOpen):
    def contains(self, x: int) -> bool:
        return True

    def mask(self, xs: np.ndarray) -> np.ndarray:
        return np.ones(len(xs), dtype=bool)

    def __str__(self) -> str:
        return "whole"


@dataclass(frozen=True)
class EmptySet(BasicOpen):
    def contains(self, x: int) -> bool:
        return False

    def mask(self, xs: np.ndarray) -> np.ndarray:
        return np.zeros(len(xs), dtype=bool)

    def finite_members(self) -> frozenset[int]:
        return frozenset()

    def __str__(self) -> str:
        return "empty"


WHOLE = WholeSpace()
EMPTY = EmptySet()


_INT64_MAX = (1 << 63) - 1


def _joint_carrier(parts: Iterable[BasicOpen]) -> Optional[Carrier]:
    found = {p.carrier for p in parts if p.carrier is not None}
    if len(found) > 1:
        raise CarrierMismatchError("cannot combine sets on different carriers")
    return found.pop() if found else None


@dataclass(frozen=True)
class Meet(BasicOpen):
    """Intersection of finitely many basic opens."""

    parts: tuple[BasicOpen, ...]

    @property
    def carrier(self) -> Optional[Carrier]:  # type: ignore[override]
        return _joint_carrier(self.parts)

    def contains(self, x: int) -> bool:
        return all(p.contains(x) for p in self.parts)

    def mask(self, xs: np.ndarray) -> np.ndarray:
        out = np.ones(len(xs), dtype=bool)
        for p in self.parts:
            out &= p.mask(xs)
        return out

    def finite_members(self) -> Optional[frozenset[int]]:
        finite = [fm for fm in (p.finite_members() for p in self.parts) if fm is not None]
        if not finite:
            return None
        fm = min(finite, key=len)
        if len(fm) <= 64 or max(fm) > _INT64_MAX:
            return frozenset(x for x in fm if self.contains(x))
        xs = np.fromiter(fm, dtype=np.int64, count=len(fm))
        return frozenset(xs[self.mask(xs)].tolist())

    def __str__(self) -> str:
        return "meet(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class Join(BasicOpen):
    """Union of finitely many basic opens, e.g. the ``U | A`` of a blend."""

    parts: tuple[BasicOpen, ...]

    @property
    def carrier(self) -> Optional[Carrier]:  # type: ignore[override]
        return _joint_carrier(self.parts)

    def contains(self, x: int) -> bool:
        return any(p.contains(x) for p in self.parts)

    def mask(self, xs: np.ndarray) -> np.ndarray:
        out = np.zeros(len(xs), dtype=bool)
        for p in self.parts:
            out |= p.mask(xs)
        return out

    def finite_members(self) -> Optional[frozenset[int]]:
        found: set[int] = set()
        for p in self.parts:
            fm = p.finite_members()
            if fm is None:
                return None
            found |= fm
        return frozenset(found)

    def __str__(self) -> str:
        return "join(" + ",".join(str(p) for p in self.parts) + ")"


def member(U: BasicOpen, x: int) -> bool:
    """Exact membership; naturals-only sets reject negative points."""
    x = int(x)
    if U.carrier is Carrier.NATURALS and x < 0:
        raise CarrierMismatchError(f"{x} is not in the carrier of {U}")
    return U.contains(x)


def members_upto(U: BasicOpen, bound: int, *, signed: bool = False) -> np.ndarray:
    """Members of ``U`` with absolute value at most ``bound``, ascending."""
    lo = -bound if signed else 0
    xs = np.arange(lo, bound + 1, dtype=np.int64)
    if U.carrier is Carrier.NATURALS and signed:
        xs = xs[xs >= 0]
    return xs[U.mask(xs)]


def intersect_suffix(s: DigitString, t: DigitString) -> BasicOpen:
    """``U_s & U_t``: empty on a conflicting digit, else the longer class."""
    short, long_ = (s, t) if len(s) <= len(t) else (t, s)
    if long_.bits[: len(short)] != short.bits:
        return EMPTY
    return SuffixClass(long_)


def meet(*parts: BasicOpen) -> BasicOpen:
    """Intersection with light simplification."""
    flat: list[BasicOpen] = []
    for p in parts:
        if isinstance(p, WholeSpace):
            continue
        if isinstance(p, EmptySet):
            return EMPTY
        if isinstance(p, Meet):
            flat.extend(p.parts)
        elif p not in flat:
            flat.append(p)
    if not flat:
        return WHOLE
    if len(flat) == 1:
        return flat[0]
    combined = Meet(tuple(flat))
    fm = combined.finite_members()
    if fm is not None:
        if not fm:
            return EMPTY
        if len(fm) == 1:
            return Singleton(next(iter(fm)))
    return combined


# ---------------------------------------------------------------------------
# order-interval neighbourhood bases


def _fd_lower(m: int, t: int) -> int:
    """``m`` followed by ``0`` and ``t + 1`` ones: fd-below ``m``, approaching it."""
    k = m.bit_length()
    return m + sum(1 << (k + j) for j in range(1, t + 2))


def _fd_upper(m: int, t: int) -> int:
    """``m`` followed by ``1``, ``t`` zeros and ``1``: fd-above ``m``, approaching it."""
    k = m.bit_length()
    return m + (1 << k) + (1 << (k + t + 1))


def order_lower(kind: OrderKind, x: int, t: int) -> Optional[int]:
    """The ``t``-th lower end of the canonical interval base at ``x``."""
    if kind is OrderKind.FINAL_DIGITS:
        return _fd_lower(x, t)
    if kind is OrderKind.VARIANT:
        if x == 0:
            return None
        r = rankv(x)
        return from_rankv(r - Fraction(1, 1 << (x.bit_length() + t + 1)))
    if x == 0:
        return -(1 << (t + 1))
    return _fd_lower(x, t) if x > 0 else -_fd_upper(-x, t)


def order_upper(kind: OrderKind, x: int, t: int) -> Optional[int]:
    """The ``t``-th upper end of the canonical interval base at ``x``."""
    if kind is OrderKind.FINAL_DIGITS:
        return _fd_upper(x, t)
    if kind is OrderKind.VARIANT:
        q = rankv(x) + Fraction(1, 1 << (x.bit_length() + t + 1))
        return None if q >= 1 else from_rankv(q)
    if x == 0:
        return 1 << (t + 1)
    return _fd_upper(x, t) if x > 0 else -_fd_lower(-x, t)


def suffix_class_as_right_open(s: DigitString) -> RightOpenInterval:
    """``U_s`` written as a variant-order interval ``[m0, m1)``."""
    low = s.value
    q = rankv(low) + Fraction(1, s.modulus)
    return RightOpenInterval(OrderKind.VARIANT, low, None if q >= 1 else from_rankv(q))


# ---------------------------------------------------------------------------
# topology descriptors


class TopologySpec:
    """Base class of the topology descriptors."""

    carrier: Optional[Carrier] = None


@dataclass(frozen=True)
class Discrete(TopologySpec):
    def __str__(self) -> str:
        return "discrete"


@dataclass(frozen=True)
class Indiscrete(TopologySpec):
    def __str__(self) -> str:
        return "indiscrete"


@dataclass(frozen=True)
class FinalDigits(TopologySpec):
    carrier = Carrier.NATURALS

    def __str__(self) -> str:
        return "finaldigits"


@dataclass(frozen=True)
class SignedFinalDigits(TopologySpec):
    """Suffix classes refined by sign, with ``ZeroTail`` sets around 0."""

    carrier = Carrier.INTEGERS

    def __str__(self) -> str:
        return "signedfinaldigits"


@dataclass(frozen=True)
class OrderTopology(TopologySpec):
    kind: OrderKind

    @property
    def carrier(self) -> Carrier:  # type: ignore[override]
        return _kind_carrier(self.kind)

    def __str__(self) -> str:
        return f"order({self.kind.value})"


@dataclass(frozen=True)
class RightOpenTopology(TopologySpec):
    kind: OrderKind

    @property
    def carrier(self) -> Carrier:  # type: ignore[override]
        return _kind_carrier(self.kind)

    def __str__(self) -> str:
        return f"rightopen({self.kind.value})"


@dataclass(frozen=True)
class InitialSegments(TopologySpec):
    carrier = Carrier.NATURALS

    def __str__(self) -> str:
        return "initialsegments"


@dataclass(frozen=True)
class FinalSegments(TopologySpec):
    carrier = Carrier.NATURALS

    def __str__(self) -> str:
        return "finalsegments"


@dataclass(frozen=True)
class Blend(TopologySpec):
    """Generated by ``U | A``: ``U`` open in ``coarse``, ``A`` open in the
    subspace ``[0, b]`` of ``fine`` (which refines ``coarse``)."""

    fine: TopologySpec
    coarse: TopologySpec
    b: int
    carrier = Carrier.NATURALS

    def as_blend(self) -> "Blend":
        return self

    def __str__(self) -> str:
        return f"blend({self.fine},{self.coarse},[0,{self.b}])"


@dataclass(frozen=True)
class Restrict(TopologySpec):
    """``inner`` on ``[0, b]``, indiscrete above: opens are ``U & [0,b]`` plus the space."""

    inner: TopologySpec
    b: int
    carrier = Carrier.NATURALS

    def as_blend(self) -> Blend:
        return Blend(self.inner, Indiscrete(), self.b)

    def __str__(self) -> str:
        return f"restrict({self.inner},[0,{self.b}])"


@dataclass(frozen=True)
class IsolateBelow(TopologySpec):
    """``inner`` with every point ``<= b`` made isolated."""

    inner: TopologySpec
    b: int
    carrier = Carrier.NATURALS

    def as_blend(self) -> Blend:
        return Blend(Discrete(), self.inner, self.b)

    def __str__(self) -> str:
        return f"isolatebelow({self.inner},{self.b})"


@dataclass(frozen=True)
class Union(TopologySpec):
    """Topology generated by the opens of both ``first`` and ``second``."""

    first: TopologySpec
    second: TopologySpec

    @property
    def carrier(self) -> Optional[Carrier]:  # type: ignore[override]
        return self.first.carrier or self.second.carrier

    def __str__(self) -> str:
        return f"union({self.first},{self.second})"


@dataclass(frozen=True)
class AugmentInitial(TopologySpec):
    inner: TopologySpec
    carrier = Carrier.NATURALS

    def as_union(self) -> Union:
        return Union(self.inner, InitialSegments())

    def __str__(self) -> str:
        return f"augmentinitial({self.inner})"


@dataclass(frozen=True)
class AugmentFinal(TopologySpec):
    inner: TopologySpec
    carrier = Carrier.NATURALS

    def as_union(self) -> Union:
        return Union(self.inner, FinalSegments())

    def __str__(self) -> str:
        return f"augmentfinal({self.inner})"


BlendLike = TUnion[Blend, Restrict, IsolateBelow]


def _check_point(tau: TopologySpec, x: int) -> int:
    x = int(x)
    if tau.carrier is Carrier.NATURALS and x < 0:
        raise CarrierMismatchError(f"{x} is not a point of {tau}")
    return x


def basic_nbhd(tau: TopologySpec, x: int, hint: Optional[int] = None) -> BasicOpen:
    """A canonical basic neighbourhood of ``x`` in ``tau``.

    Where the basis at ``x`` is an infinite descending family, ``hint``
    picks a member: a larger hint gives a smaller set.  For the suffix
    topologies it is the suffix length, for order topologies the depth of
    the interval.  The default is the natural choice at ``x`` (its own
    digit string, or the first interval).
    """
    x = _check_point(tau, x)
    if isinstance(tau, Discrete):
        return Singleton(x)
    if isinstance(tau, Indiscrete):
        return WHOLE
    if isinstance(tau, FinalDigits):
        return SuffixClass(suffix(x, x.bit_length() if hint is None else hint))
    if isinstance(tau, SignedFinalDigits):
        k = max(1, abs(x).bit_length()) if hint is None else hint
        if x == 0:
            return ZeroTail(k)
        sign = Sign.POSITIVE if x > 0 else Sign.NEGATIVE
        return SignBlock(sign) if k == 0 else SignedSuffixClass(suffix(x, k), sign)
    if isinstance(tau, OrderTopology):
        t = hint or 0
        return OrderInterval(tau.kind, order_lower(tau.kind, x, t), order_upper(tau.kind, x, t))
    if isinstance(tau, RightOpenTopology):
        t = hint or 0
        return RightOpenInterval(tau.kind, x, order_upper(tau.kind, x, t))
    if isinstance(tau, InitialSegments):
        return InitialSegment(x)
    if isinstance(tau, FinalSegments):
        return FinalSegment(x)
    if isinstance(tau, (Blend, Restrict, IsolateBelow)):
        blend = tau.as_blend()
        if x <= blend.b:
            return meet(basic_nbhd(blend.fine, x, hint), InitialSegment(blend.b))
        return basic_nbhd(blend.coarse, x, hint)
    if isinstance(tau, (AugmentInitial, AugmentFinal)):
        return basic_nbhd(tau.as_union(), x, hint)
    if isinstance(tau, Union):
        return meet(basic_nbhd(tau.first, x, hint), basic_nbhd(tau.second, x, hint))
    raise TypeError(f"unknown topology descriptor {tau!r}")


def _basis_always_infinite(tau: TopologySpec, x: int) -> bool:
    """True when every basic neighbourhood of ``x`` is provably infinite."""
    if isinstance(tau, (Indiscrete, FinalDigits, SignedFinalDigits, OrderTopology,
                        RightOpenTopology, FinalSegments)):
        return True
    if isinstance(tau, (Discrete, InitialSegments)):
        return False
    if isinstance(tau, (Blend, Restrict, IsolateBelow)):
        blend = tau.as_blend()
        return x > blend.b and _basis_always_infinite(blend.coarse, x)
    return False


def is_isolated(tau: TopologySpec, x: int, search_bound: int = 16) -> Optional[bool]:
    """Whether ``{x}`` is open in ``tau``.

    Searches the canonical basis at ``x`` for hints ``0..search_bound`` (and
    the default).  Returns ``None`` when the search is inconclusive.
    """
    x = _check_point(tau, x)
    hints: list[Optional[int]] = [None, *range(search_bound + 1)]
    for h in hints:
        fm = basic_nbhd(tau, x, h).finite_members()
        if fm is not None and fm == {x}:
            return True
    if _basis_always_infinite(tau, x):
        return False
    return None
