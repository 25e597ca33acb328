"""Naturals and integers with digit-level access.

Digits are indexed from the least significant end: ``digits[0]`` is the
ones digit.  Zero is the empty digit sequence.  Both numeral types subclass
:class:`int`, so Python's arbitrary-precision arithmetic does the heavy
lifting and numerals can be passed anywhere an ``int`` is expected.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import UnderflowError, UndefinedValuationError

__all__ = [
    "Numeral",
    "Sign",
    "SignedNumeral",
    "DigitString",
    "numeral_of",
    "suffix",
    "v2",
    "metric2",
    "add",
    "mul",
    "sub",
    "floordiv",
    "trailing_digits",
]


class Numeral(int):
    """A natural number whose binary digits are addressable."""

    __slots__ = ()

    def __new__(cls, value: int = 0) -> "Numeral":
        value = int(value)
        if value < 0:
            raise ValueError(f"numerals are natural numbers, got {value}")
        return super().__new__(cls, value)

    @classmethod
    def from_digits(cls, digits: Iterable[int]) -> "Numeral":
        """Build a numeral from bits given least significant first.

        Trailing (high-order) zeros are dropped, so the result is canonical.
        """
        value = 0
        for i, d in enumerate(digits):
            if d not in (0, 1):
                raise ValueError(f"binary digit expected, got {d!r}")
            value |= d << i
        return cls(value)

    @property
    def digits(self) -> tuple[int, ...]:
        return tuple((self >> i) & 1 for i in range(self.bit_length()))

    @property
    def length(self) -> int:
        return self.bit_length()

    def digit(self, i: int) -> int:
        """Digit at 1-based position ``i``; positions past the end read as 0."""
        if i < 1:
            raise IndexError("digit positions start at 1")
        return (self >> (i - 1)) & 1

    def __repr__(self) -> str:
        return f"Numeral({int(self)})"

    def __str__(self) -> str:
        return int.__repr__(self)


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    @property
    def symbol(self) -> str:
        return {-1: "-", 0: "0", 1: "+"}[int(self)]

    @classmethod
    def from_symbol(cls, text: str) -> "Sign":
        try:
            return {"-": cls.NEGATIVE, "0": cls.ZERO, "+": cls.POSITIVE}[text]
        except KeyError:
            raise ValueError(f"unknown sign symbol {text!r}") from None


class SignedNumeral(int):
    """An integer seen as a sign plus a :class:`Numeral` magnitude."""

    __slots__ = ()

    def __new__(cls, value: int = 0) -> "SignedNumeral":
        return super().__new__(cls, int(value))

    @classmethod
    def from_parts(cls, sign: Sign, magnitude: int) -> "SignedNumeral":
        magnitude = Numeral(magnitude)
        if (sign == Sign.ZERO) != (magnitude == 0):
            raise ValueError("sign is zero exactly when the magnitude is empty")
        return cls(int(sign) * magnitude)

    @property
    def sign(self) -> Sign:
        return Sign((self > 0) - (self < 0))

    @property
    def magnitude(self) -> Numeral:
        return Numeral(abs(self))

    def __repr__(self) -> str:
        return f"SignedNumeral({int(self)})"

    def __str__(self) -> str:
        return int.__repr__(self)


@dataclass(frozen=True)
class DigitString:
    """A finite bit string, least significant bit first, leading zeros allowed.

    The textual form is written the usual way round, most significant bit
    first: ``DigitString.parse("00110").bits == (0, 1, 1, 0, 0)``.
    """

    bits: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"binary digits expected, got {self.bits!r}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def parse(cls, text: str) -> "DigitString":
        text = text.strip()
        if text in ("", "ε"):
            return cls(())
        if set(text) - {"0", "1"}:
            raise ValueError(f"not a binary string: {text!r}")
        return cls(tuple(int(c) for c in reversed(text)))

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in reversed(self.bits))

    def __repr__(self) -> str:
        return f"DigitString({str(self)!r})"

    @property
    def value(self) -> Numeral:
        """The number obtained by deleting leading zeros."""
        return Numeral.from_digits(self.bits)

    @property
    def modulus(self) -> int:
        return 1 << len(self.bits)

    def extend(self, bit: int) -> "DigitString":
        """Prepend one more significant digit."""
        return DigitString(self.bits + (bit,))


IntLike = Union[int, Numeral, SignedNumeral]


def numeral_of(value: int) -> Numeral:
    return Numeral(value)


def suffix(n: int, k: int) -> DigitString:
    """The last ``k`` binary digits of ``n``, zero padded to length ``k``."""
    if k < 0:
        raise ValueError("suffix length must be non-negative")
    n = abs(int(n))
    return DigitString(tuple((n >> i) & 1 for i in range(k)))


def v2(n: int) -> int:
    """Exponent of the largest power of two dividing ``n``."""
    n = int(n)
    if n == 0:
        raise UndefinedValuationError("the 2-adic valuation of 0 is undefined")
    return ((n & -n).bit_length()) - 1


def metric2(x: int, y: int) -> Fraction:
    """2-adic distance ``2**-v2(x - y)``, and 0 on the diagonal."""
    if x == y:
        return Fraction(0)
    return Fraction(1, 1 << v2(int(x) - int(y)))


def _wrap(*args: int):
    return SignedNumeral if any(isinstance(a, SignedNumeral) for a in args) else Numeral


def add(x: IntLike, y: IntLike) -> IntLike:
    return _wrap(x, y)(int(x) + int(y))


def mul(x: IntLike, y: IntLike) -> IntLike:
    return _wrap(x, y)(int(x) * int(y))


def sub(x: IntLike, y: IntLike) -> IntLike:
    """Difference; on naturals (no signed argument) ``y`` must not exceed ``x``."""
    cls = _wrap(x, y)
    if cls is Numeral and int(y) > int(x):
        raise UnderflowError(f"{int(x)} - {int(y)} is not a natural number")
    return cls(int(x) - int(y))


def floordiv(x: IntLike, c: int) -> IntLike:
    if c <= 0:
        raise ValueError("division by a positive constant only")
    return _wrap(x)(int(x) // c)


def trailing_digits(x: int, k: int, base: int = 2) -> str:
    """Last ``k`` digits of ``x`` in ``base``, zero padded, most significant first."""
    if base < 2:
        raise ValueError("base must be at least 2")
    if k < 0:
        raise ValueError("digit count must be non-negative")
    x = abs(int(x))
    out: list[str] = []
    for _ in range(k):
        x, d = divmod(x, base)
        out.append("0123456789abcdefghijklmnopqrstuvwxyz"[d] if base <= 36 else f"<{d}>")
    return "".join(reversed(out))

