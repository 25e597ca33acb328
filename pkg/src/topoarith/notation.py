"""Canonical text forms for basic opens and topology descriptors.

``str()`` on any :class:`~topoarith.topology.BasicOpen` or
:class:`~topoarith.topology.TopologySpec` prints the canonical form, and the
parsers here read it back, so ``parse_open(str(U)) == U``.  Examples::

    suffix(00110)   ssuffix(0110,+)   zerotail(3)   interval(fd,2,inf)
    restrict(discrete,[0,17])   blend(discrete,finaldigits,[0,17])
"""

from __future__ import annotations

import re
from typing import Callable, Optional

from .errors import NotationError
from .numerals import DigitString, Sign
from .orders import OrderKind
from . import topology as T

__all__ = ["parse_open", "parse_topology", "format_open", "format_topology", "split_args"]


_CALL = re.compile(r"^\s*([a-z]+)\s*(?:\((.*)\))?\s*$", re.S)


def split_args(text: str) -> list[str]:
    """Split on top-level commas, respecting () and [] nesting."""
    parts: list[str] = []
    depth = 0
    current: list[str] = []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise NotationError(f"unbalanced brackets in {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    if depth:
        raise NotationError(f"unbalanced brackets in {text!r}")
    tail = "".join(current).strip()
    if tail or parts:
        parts.append(tail)
    return parts


def _call(text: str) -> tuple[str, list[str], bool]:
    m = _CALL.match(text)
    if not m:
        raise NotationError(f"cannot parse {text!r}")
    name, inner = m.group(1), m.group(2)
    return name, ([] if inner is None else split_args(inner)), inner is not None


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise NotationError(f"integer expected, got {text!r}") from None


def _end(text: str, infinite: tuple[str, ...]) -> Optional[int]:
    return None if text in infinite else _int(text)


def _digits(text: str) -> DigitString:
    try:
        return DigitString.parse(text)
    except ValueError as exc:
        raise NotationError(str(exc)) from None


def _kind(text: str) -> OrderKind:
    try:
        return OrderKind.parse(text)
    except ValueError as exc:
        raise NotationError(str(exc)) from None


def _sign(text: str) -> Sign:
    try:
        sign = Sign.from_symbol(text)
    except ValueError as exc:
        raise NotationError(str(exc)) from None
    if sign is Sign.ZERO:
        raise NotationError("sign blocks and signed classes take + or -")
    return sign


def _segment(text: str) -> int:
    """Read ``[0,b]`` or a bare ``b``."""
    text = text.strip()
    m = re.fullmatch(r"\[\s*0\s*,\s*(-?\d+)\s*\]", text)
    if m:
        return int(m.group(1))
    return _int(text)


def _arity(name: str, args: list[str], *counts: int) -> None:
    if len(args) not in counts:
        raise NotationError(f"{name} takes {' or '.join(map(str, counts))} arguments, got {len(args)}")


def parse_open(text: str) -> T.BasicOpen:
    name, args, _ = _call(text)
    if name == "suffix":
        _arity(name, args, 0, 1)
        return T.SuffixClass(_digits(args[0] if args else ""))
    if name == "ssuffix":
        _arity(name, args, 2)
        return T.SignedSuffixClass(_digits(args[0]), _sign(args[1]))
    if name == "sign":
        _arity(name, args, 1)
        return T.SignBlock(_sign(args[0]))
    if name == "zerotail":
        _arity(name, args, 1, 2)
        if len(args) == 2 and args[1] != "nozero":
            raise NotationError(f"unknown zerotail flag {args[1]!r}")
        return T.ZeroTail(_int(args[0]), include_zero=len(args) == 1)
    if name == "interval":
        _arity(name, args, 3)
        return T.OrderInterval(_kind(args[0]), _end(args[1], ("-inf",)), _end(args[2], ("inf", "+inf")))
    if name == "ropen":
        _arity(name, args, 3)
        return T.RightOpenInterval(_kind(args[0]), _int(args[1]), _end(args[2], ("inf", "+inf")))
    if name == "initial":
        _arity(name, args, 1)
        return T.InitialSegment(_int(args[0]))
    if name == "final":
        _arity(name, args, 1)
        return T.FinalSegment(_int(args[0]))
    if name == "point":
        _arity(name, args, 1)
        return T.Singleton(_int(args[0]))
    if name == "whole":
        _arity(name, args, 0)
        return T.WHOLE
    if name == "empty":
        _arity(name, args, 0)
        return T.EMPTY
    if name == "meet":
        return T.Meet(tuple(parse_open(a) for a in args))
    if name == "join":
        return T.Join(tuple(parse_open(a) for a in args))
    raise NotationError(f"unknown basic open {name!r}")


_ATOMS: dict[str, Callable[[], T.TopologySpec]] = {
    "discrete": T.Discrete,
    "indiscrete": T.Indiscrete,
    "finaldigits": T.FinalDigits,
    "signedfinaldigits": T.SignedFinalDigits,
    "initialsegments": T.InitialSegments,
    "finalsegments": T.FinalSegments,
}


def parse_topology(text: str) -> T.TopologySpec:
    name, args, called = _call(text)
    if name in _ATOMS:
        if args:
            raise NotationError(f"{name} takes no arguments")
        return _ATOMS[name]()
    if name == "order":
        _arity(name, args, 1)
        return T.OrderTopology(_kind(args[0]))
    if name == "rightopen":
        _arity(name, args, 1)
        return T.RightOpenTopology(_kind(args[0]))
    if name == "restrict":
        _arity(name, args, 2)
        return T.Restrict(parse_topology(args[0]), _segment(args[1]))
    if name == "blend":
        _arity(name, args, 3)
        return T.Blend(parse_topology(args[0]), parse_topology(args[1]), _segment(args[2]))
    if name == "isolatebelow":
        _arity(name, args, 2)
        return T.IsolateBelow(parse_topology(args[0]), _segment(args[1]))
    if name == "union":
        _arity(name, args, 2)
        return T.Union(parse_topology(args[0]), parse_topology(args[1]))
    if name == "augmentinitial":
        _arity(name, args, 1)
        return T.AugmentInitial(parse_topology(args[0]))
    if name == "augmentfinal":
        _arity(name, args, 1)
        return T.AugmentFinal(parse_topology(args[0]))
    raise NotationError(f"unknown topology {name!r}" + ("" if called else " (missing arguments?)"))


def format_open(U: T.BasicOpen) -> str:
    return str(U)


def format_topology(tau: T.TopologySpec) -> str:
    return str(tau)
