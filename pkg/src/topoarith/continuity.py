"""Continuity and discontinuity certificates, their checkers, and probes.

A :class:`ContinuityWitness` claims that an operation maps the product of its
``neighborhoods`` into ``target``.  Two independent checkers exist: a
symbolic one for residue witnesses (agreement mod ``2**k`` is preserved by
ring operations) and a pointwise one that enumerates a truncation.

A :class:`DiscontinuityWitness` carries a *refuter*: given any neighbourhood
of the input point it returns an element of that neighbourhood whose image
misses the target.

Probes never certify anything on their own; they search bounded
neighbourhood bases and either return an empirically sound candidate or the
escapes they found.
"""

from __future__ import annotations

import enum
import random
import re
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable, Optional, Sequence, Union as TUnion

import numpy as np

from .errors import PreconditionError, UnsupportedSpecError
from .numerals import DigitString, sub, suffix
from .orders import OrderKind, least_in_interval
from .topology import (
    WHOLE,
    BasicOpen,
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
    Restrict,
    RightOpenInterval,
    Singleton,
    SuffixClass,
    TopologySpec,
    Union,
    AugmentFinal,
    AugmentInitial,
    basic_nbhd,
    meet,
    members_upto,
)

__all__ = [
    "Justification",
    "Operation",
    "operation",
    "CheckResult",
    "ContinuityWitness",
    "DiscontinuityWitness",
    "NoWitnessUpTo",
    "Escape",
    "modulus_residue",
    "residue_determinism",
    "witness_final_digits",
    "witness_segment",
    "witness_blend",
    "witness_translate",
    "witness_union",
    "witness_for",
    "refute_variant_successor",
    "refute_restrict17",
    "probe_continuity",
    "probe_order_topology",
]

MAX_CHECK_BOUND = 1 << 24


class Justification(enum.Enum):
    RESIDUE_MODULUS = "residue-modulus"
    MONOTONE_SEGMENT = "monotone-segment"
    BLEND_CASE = "blend-case"
    ISOLATED_POINT = "isolated-point"
    ZERO_SECTION = "zero-section"
    UNION_LEMMA = "union-lemma"
    EMPIRICAL = "empirical"


# ---------------------------------------------------------------------------
# operations


@dataclass(frozen=True)
class Operation:
    """A named arithmetic operation with scalar and vectorised forms."""

    name: str
    arity: int
    k: int = 0

    def __str__(self) -> str:
        return f"translate({self.k})" if self.name == "translate" else self.name

    def __call__(self, *args: int) -> int:
        if self.name == "sub":
            return int(sub(*args)) if args[0] >= 0 and args[1] >= 0 else args[0] - args[1]
        return int(self.apply(*(np.asarray([a], dtype=object) for a in args))[0])

    def apply(self, *xs: np.ndarray) -> np.ndarray:
        n = self.name
        if n == "add":
            return xs[0] + xs[1]
        if n == "mul":
            return xs[0] * xs[1]
        if n == "sub":
            return xs[0] - xs[1]
        if n == "translate":
            return xs[0] + self.k
        if n == "successor":
            return xs[0] + 1
        if n == "predecessor":
            return xs[0] - 1
        if n == "halving":
            return xs[0] // 2
        if n == "pairing-q":
            s = xs[0] + xs[1]
            return s * (s + 1) + 2 * xs[1]
        raise AssertionError(n)

    def domain(self, *xs: np.ndarray, signed: bool = False) -> np.ndarray:
        """Mask of argument tuples on which the operation is defined."""
        ok = np.ones(np.broadcast(*xs).shape, dtype=bool)
        if signed:
            return ok
        if self.name == "sub":
            ok &= xs[0] >= xs[1]
        elif self.name == "predecessor":
            ok &= xs[0] >= 1
        elif self.name == "halving":
            ok &= xs[0] % 2 == 0
        return ok

    def defined(self, *args: int, signed: bool = False) -> bool:
        return bool(self.domain(*(np.asarray(a, dtype=object) for a in args), signed=signed))


_ARITY = {
    "add": 2,
    "mul": 2,
    "sub": 2,
    "pairing-q": 2,
    "successor": 1,
    "predecessor": 1,
    "halving": 1,
}


@lru_cache(maxsize=None)
def operation(text: TUnion[str, Operation]) -> Operation:
    if isinstance(text, Operation):
        return text
    text = text.strip()
    m = re.fullmatch(r"translate\((\d+)\)", text)
    if m:
        return Operation("translate", 1, int(m.group(1)))
    if text not in _ARITY:
        raise PreconditionError(f"unknown operation {text!r}")
    return Operation(text, _ARITY[text])


# ---------------------------------------------------------------------------
# witnesses


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    checked: int
    counterexample: Optional[tuple[int, ...]] = None


def _first_failure(
    op: Operation,
    target: BasicOpen,
    sets: Sequence[np.ndarray],
    signed: bool,
) -> tuple[int, Optional[tuple[int, ...]]]:
    """Count defined tuples from the product of ``sets``; return the first miss."""
    if op.arity == 1:
        xs = sets[0]
        dom = op.domain(xs, signed=signed)
        xs = xs[dom]
        bad = ~target.mask(op.apply(xs))
        if bad.any():
            return len(xs), (int(xs[np.argmax(bad)]),)
        return len(xs), None
    xs, ys = sets
    if len(xs) == 0 or len(ys) == 0:
        return 0, None
    checked = 0
    step = max(1, (1 << 22) // len(ys))
    for i in range(0, len(xs), step):
        X = xs[i : i + step, None]
        Y = ys[None, :]
        X, Y = np.broadcast_arrays(X, Y)
        dom = op.domain(X, Y, signed=signed)
        xv, yv = X[dom], Y[dom]
        checked += len(xv)
        bad = ~target.mask(op.apply(xv, yv))
        if bad.any():
            j = int(np.argmax(bad))
            return checked, (int(xv[j]), int(yv[j]))
    return checked, None


@dataclass(frozen=True)
class ContinuityWitness:
    """``operation`` maps the product of ``neighborhoods`` into ``target``."""

    operation: str
    point: tuple[int, ...]
    target: BasicOpen
    neighborhoods: tuple[BasicOpen, ...]
    justification: Justification
    signed: bool = False

    @property
    def op(self) -> Operation:
        return operation(self.operation)

    @property
    def image(self) -> int:
        return self.op(*self.point)

    def check_pointwise(self, bound: int = 1 << 12) -> CheckResult:
        """Exhaustive soundness over all carrier elements of magnitude ``<= bound``."""
        if bound > MAX_CHECK_BOUND:
            raise PreconditionError("pointwise checks are limited to bounds <= 2**24")
        if not all(U.contains(p) for U, p in zip(self.neighborhoods, self.point)):
            return CheckResult(False, 0, self.point)
        sets = [members_upto(U, bound, signed=self.signed) for U in self.neighborhoods]
        checked, bad = _first_failure(self.op, self.target, sets, self.signed)
        return CheckResult(bad is None, checked, bad)

    def check_symbolic(self) -> bool:
        """Congruence argument for residue witnesses.

        Every operation here is an integer polynomial in its arguments, so
        it respects congruence mod ``2**L``.  If each neighbourhood is a
        suffix class of length ``>= L`` around its coordinate and the image
        point lies in the length-``L`` target class, the witness is sound.
        """
        if not isinstance(self.target, (SuffixClass, type(WHOLE))):
            return False
        L = len(self.target.s) if isinstance(self.target, SuffixClass) else 0
        for U, p in zip(self.neighborhoods, self.point):
            if isinstance(U, type(WHOLE)):
                if L:
                    return False
                continue
            if not isinstance(U, SuffixClass) or len(U.s) < L or not U.contains(p):
                return False
        return self.target.contains(self.image)

    def to_dict(self) -> dict:
        return {
            "operation": self.operation,
            "point": list(self.point),
            "target": str(self.target),
            "neighborhoods": [str(U) for U in self.neighborhoods],
            "justification": self.justification.value,
        }


def modulus_residue(op: str, k: int) -> int:
    """Suffix length of the inputs that fixes the last ``k`` digits of the output.

    For ``add``, ``mul`` and ``sub`` this is ``k`` itself.
    """
    if op not in ("add", "mul", "sub"):
        raise PreconditionError(f"no residue modulus for {op!r}")
    if k < 0:
        raise PreconditionError("k must be non-negative")
    return k


def residue_determinism(k: int, lifts: Sequence[int] = (0, 1, 3, (1 << 20) + 5)) -> CheckResult:
    """Check that residues mod ``2**k`` of sum, product and difference depend
    only on the input residues, over every residue pair.

    Each residue ``a`` is lifted to ``a + j * 2**k`` for every ``j`` in
    ``lifts``.  Arithmetic is in ``uint64``, whose wraparound is reduction
    mod ``2**64`` and so is exact mod ``2**k``.
    """
    M = np.uint64(1 << k)
    mask = np.uint64((1 << k) - 1)
    r = np.arange(1 << k, dtype=np.uint64)
    A, B = np.meshgrid(r, r, indexing="ij")
    A, B = A.ravel(), B.ravel()
    base = {"add": (A + B) & mask, "mul": (A * B) & mask, "sub": (A - B) & mask}
    checked = 0
    for i in lifts:
        for j in lifts:
            X = A + np.uint64(i) * M
            Y = B + np.uint64(j) * M
            for name, got in (("add", X + Y), ("mul", X * Y), ("sub", X - Y)):
                bad = (got & mask) != base[name]
                checked += len(bad)
                if bad.any():
                    t = int(np.argmax(bad))
                    return CheckResult(False, checked, (int(X[t]), int(Y[t])))
    return CheckResult(True, checked)


def witness_final_digits(op: str, x: int, y: int, target_len: int) -> ContinuityWitness:
    """Residue witness: inputs agreeing with ``x, y`` in ``target_len`` final
    digits give outputs agreeing with ``op(x, y)`` in as many digits."""
    o = operation(op)
    if o.name not in ("add", "mul", "sub"):
        raise PreconditionError(f"{op!r} is not one of add, mul, sub")
    z = o(int(x), int(y))  # sub raises UnderflowError when y > x
    L = modulus_residue(o.name, target_len)
    return ContinuityWitness(
        o.name,
        (int(x), int(y)),
        SuffixClass(suffix(z, L)),
        (SuffixClass(suffix(x, L)), SuffixClass(suffix(y, L))),
        Justification.RESIDUE_MODULUS,
    )


def witness_translate(k: int, x: int, target_len: int) -> ContinuityWitness:
    """``x -> x + k`` maps ``U_{suffix(x, L)}`` into ``U_{suffix(x + k, L)}``."""
    return ContinuityWitness(
        f"translate({int(k)})",
        (int(x),),
        SuffixClass(suffix(int(x) + int(k), target_len)),
        (SuffixClass(suffix(x, target_len)),),
        Justification.RESIDUE_MODULUS,
    )


def witness_segment(op: str, tau: TopologySpec, x: int, y: int, k: int) -> ContinuityWitness:
    """Monotonicity witness for the initial- or final-segment topology."""
    o = operation(op)
    if o.name not in ("add", "mul"):
        raise PreconditionError(f"segment witnesses cover add and mul, not {op!r}")
    x, y = int(x), int(y)
    z = o(x, y)
    if isinstance(tau, InitialSegments):
        if z > k:
            raise PreconditionError(f"{o.name}({x}, {y}) = {z} exceeds {k}")
        nb: tuple[BasicOpen, ...] = (InitialSegment(x), InitialSegment(y))
        target: BasicOpen = InitialSegment(k)
    elif isinstance(tau, FinalSegments):
        if z < k:
            raise PreconditionError(f"{o.name}({x}, {y}) = {z} is below {k}")
        nb, target = (FinalSegment(x), FinalSegment(y)), FinalSegment(k)
    else:
        raise UnsupportedSpecError(f"{tau} is not a segment topology")
    return ContinuityWitness(o.name, (x, y), target, nb, Justification.MONOTONE_SEGMENT)


def _as_blend(spec: TopologySpec) -> Blend:
    if isinstance(spec, (Blend, Restrict, IsolateBelow)):
        return spec.as_blend()
    raise UnsupportedSpecError(f"{spec} has no blend structure")


def _parts(target: BasicOpen) -> tuple[BasicOpen, ...]:
    return target.parts if isinstance(target, Join) else (target,)


def _within(U: BasicOpen, b: int) -> bool:
    fm = U.finite_members()
    return fm is not None and all(0 <= v <= b for v in fm)


def _suffix_len(target: BasicOpen, z: int) -> Optional[int]:
    """Length ``L`` with ``U_{suffix(z, L)}`` inside ``target``, if evident."""
    if isinstance(target, type(WHOLE)):
        return 0
    if isinstance(target, SuffixClass) and target.contains(z):
        return len(target.s)
    if isinstance(target, Join):
        for p in target.parts:
            if p.contains(z):
                L = _suffix_len(p, z)
                if L is not None:
                    return L
    return None


def _isolating_nbhd(spec: TopologySpec, x: int, search: int) -> Optional[BasicOpen]:
    for h in (None, *range(search + 1)):
        U = basic_nbhd(spec, x, h)
        if U.finite_members() == {x}:
            return Singleton(x)
    return None


def witness_blend(
    op: str,
    spec: TopologySpec,
    x: int,
    y: int,
    target: BasicOpen,
) -> ContinuityWitness:
    """Case analysis for blended topologies.

    * the image lies in the coarse part of ``target``: use a coarse witness;
    * ``mul`` with a zero factor and the other factor above the segment: the
      zero section ``{0} x M`` (or ``M x {0}``) is open;
    * otherwise both inputs lie in ``[0, b]``: use fine neighbourhoods cut
      down to ``[0, b]``, refined until their finite image lands in ``target``.
    """
    o = operation(op)
    if o.name not in ("add", "mul"):
        raise PreconditionError(f"blend witnesses cover add and mul, not {op!r}")
    blend = _as_blend(spec)
    b = blend.b
    x, y = int(x), int(y)
    z = o(x, y)
    if not target.contains(z):
        raise PreconditionError(f"target {target} does not contain {o.name}({x}, {y}) = {z}")

    hit = [p for p in _parts(target) if p.contains(z)]
    coarse_parts = [p for p in hit if not _within(p, b)]
    if coarse_parts:
        inner = witness_for(o.name, blend.coarse, (x, y), coarse_parts[0])
        return replace(inner, target=target, justification=Justification.BLEND_CASE)

    search = b.bit_length() + 2
    if o.name == "mul" and z == 0 and max(x, y) > b:
        zero = 0 if x == 0 else 1
        iso = _isolating_nbhd(spec, 0, search)
        if iso is None:
            raise UnsupportedSpecError(f"0 is not isolated in {spec}")
        nb = (iso, WHOLE) if zero == 0 else (WHOLE, iso)
        return ContinuityWitness(o.name, (x, y), target, nb, Justification.ZERO_SECTION)

    seg = InitialSegment(b)
    for h in (None, *range(search + 1)):
        nb = (meet(basic_nbhd(blend.fine, x, h), seg), meet(basic_nbhd(blend.fine, y, h), seg))
        sets = [np.fromiter(sorted(U.finite_members()), dtype=np.int64) for U in nb]  # type: ignore[arg-type]
        _, bad = _first_failure(o, target, sets, False)
        if bad is None:
            return ContinuityWitness(o.name, (x, y), target, nb, Justification.BLEND_CASE)
    raise UnsupportedSpecError(f"no neighbourhood in {blend.fine} keeps the image inside {target}")


def witness_union(first: ContinuityWitness, second: ContinuityWitness) -> ContinuityWitness:
    """Combine witnesses for two topologies into one for the generated topology."""
    if first.operation != second.operation or first.point != second.point:
        raise PreconditionError("union witnesses must share operation and point")
    nb = tuple(meet(U, V) for U, V in zip(first.neighborhoods, second.neighborhoods))
    return ContinuityWitness(
        first.operation,
        first.point,
        meet(first.target, second.target),
        nb,
        Justification.UNION_LEMMA,
        first.signed,
    )


def witness_for(
    op: str,
    tau: TopologySpec,
    point: tuple[int, ...],
    target: BasicOpen,
) -> ContinuityWitness:
    """Constructive witness for ``op`` at ``point`` into ``target`` in ``tau``."""
    o = operation(op)
    z = o(*point)
    if not target.contains(z):
        raise PreconditionError(f"target {target} does not contain {z}")
    if isinstance(tau, Discrete):
        return ContinuityWitness(
            str(o), tuple(point), target, tuple(Singleton(p) for p in point), Justification.ISOLATED_POINT
        )
    if isinstance(tau, Indiscrete):
        if not isinstance(target, type(WHOLE)) and not any(isinstance(p, type(WHOLE)) for p in _parts(target)):
            raise UnsupportedSpecError("the indiscrete topology only has the whole space as target")
        return ContinuityWitness(
            str(o), tuple(point), target, tuple(WHOLE for _ in point), Justification.BLEND_CASE
        )
    if isinstance(tau, FinalDigits):
        L = _suffix_len(target, z)
        if L is None:
            raise UnsupportedSpecError(f"{target} is not a suffix class around {z}")
        if o.arity == 1:
            if o.name != "translate":
                raise UnsupportedSpecError(f"no residue witness for {o}")
            w = witness_translate(o.k, point[0], L)
        elif o.name == "pairing-q":
            from .embedding import witness_pairing

            w = witness_pairing(point[0], point[1], L)
        else:
            w = witness_final_digits(o.name, point[0], point[1], L)
        return replace(w, target=target)
    if isinstance(tau, (InitialSegments, FinalSegments)):
        if isinstance(target, (InitialSegment, FinalSegment)):
            return witness_segment(o.name, tau, point[0], point[1], target.k)
        raise UnsupportedSpecError(f"{target} is not a segment")
    if isinstance(tau, (Blend, Restrict, IsolateBelow)):
        return witness_blend(o.name, tau, point[0], point[1], target)
    if isinstance(tau, (AugmentInitial, AugmentFinal)):
        return witness_for(o.name, tau.as_union(), point, target)
    if isinstance(tau, Union):
        pieces = target.parts if isinstance(target, Meet) else (target,)
        if len(pieces) == 2:
            for a, b in (pieces, pieces[::-1]):
                try:
                    return witness_union(
                        witness_for(o.name, tau.first, point, a), witness_for(o.name, tau.second, point, b)
                    )
                except (UnsupportedSpecError, PreconditionError):
                    continue
        for side in (tau.first, tau.second):
            try:
                return witness_for(o.name, side, point, target)
            except (UnsupportedSpecError, PreconditionError):
                continue
        raise UnsupportedSpecError(f"cannot split {target} across {tau}")
    raise UnsupportedSpecError(f"no constructive witnesses for {tau}")


# ---------------------------------------------------------------------------
# discontinuity


@dataclass(frozen=True)
class DiscontinuityWitness:
    """``refuter(N)`` is a member of ``N`` whose image misses ``target``."""

    operation: str
    point: tuple[int, ...]
    target: BasicOpen
    topology: TopologySpec
    refuter: Callable[[BasicOpen], int] = field(compare=False)
    sampler: Callable[[random.Random], BasicOpen] = field(compare=False)
    neighborhood: Optional[BasicOpen] = None

    @property
    def escape(self) -> int:
        return self.refuter(self.neighborhood if self.neighborhood is not None else basic_nbhd(self.topology, self.point[0]))

    def validate(self, nbhd: BasicOpen) -> tuple[bool, int]:
        """Run the refuter on ``nbhd`` and check its answer independently."""
        if not nbhd.contains(self.point[0]):
            raise PreconditionError(f"{nbhd} is not a neighbourhood of {self.point[0]}")
        e = self.refuter(nbhd)
        op = operation(self.operation)
        ok = nbhd.contains(e) and op.defined(e) and not self.target.contains(op(e))
        return ok, e

    def sample_neighborhoods(self, count: int, seed: int) -> list[BasicOpen]:
        rng = random.Random(seed)
        return [self.sampler(rng) for _ in range(count)]

    def to_dict(self) -> dict:
        return {
            "operation": self.operation,
            "point": list(self.point),
            "target": str(self.target),
            "topology": str(self.topology),
            "escape": self.escape,
        }


_VARIANT_TARGET = OrderInterval(OrderKind.VARIANT, 0, 1)


def _variant_refuter(N: BasicOpen) -> int:
    if not isinstance(N, OrderInterval) or N.kind is not OrderKind.VARIANT:
        raise PreconditionError("expected a variant-order interval")
    if N.lo is None:
        return 0
    found = least_in_interval(OrderKind.VARIANT, N.lo, 1)
    assert found is not None  # the variant order is dense above its minimum
    return found


def _variant_sampler(rng: random.Random) -> BasicOpen:
    # below 1 in the variant order means even; above means odd and not 1
    lo = None if rng.random() < 0.1 else 2 * rng.randrange(1 << 15)
    hi = None if rng.random() < 0.1 else 2 * rng.randrange(1, 1 << 15) + 1
    return OrderInterval(OrderKind.VARIANT, lo, hi)


def refute_variant_successor(J: OrderInterval) -> DiscontinuityWitness:
    """Successor is discontinuous at 1 for the variant order topology.

    The target ``(0, 1)`` holds 2 and only nonzero even numbers, while any
    interval around 1 contains an even ``e`` whose successor is odd.
    """
    if not isinstance(J, OrderInterval) or J.kind is not OrderKind.VARIANT or not J.contains(1):
        raise PreconditionError(f"{J} is not a variant-order interval around 1")
    from .topology import OrderTopology

    return DiscontinuityWitness(
        "successor",
        (1,),
        _VARIANT_TARGET,
        OrderTopology(OrderKind.VARIANT),
        _variant_refuter,
        _variant_sampler,
        J,
    )


_RESTRICT17 = {
    "halving-at-30": ("halving", 30, 15),
    "predecessor-at-18": ("predecessor", 18, 17),
}


def refute_restrict17(case: str) -> DiscontinuityWitness:
    """Halving at 30 and predecessor at 18 are discontinuous in ``restrict(discrete,[0,17])``.

    The only open set around a point above 17 is the whole space.  The
    refuter returns the least member above the point, of the same parity,
    whose image also lies above 17 (36 and 20 respectively).
    """
    if case not in _RESTRICT17:
        raise PreconditionError(f"unknown case {case!r}; expected one of {sorted(_RESTRICT17)}")
    name, point, image = _RESTRICT17[case]
    b = 17
    op = operation(name)
    tau = Restrict(Discrete(), b)

    def refuter(N: BasicOpen) -> int:
        for e in range(point + 2, point + (1 << 16), 2):
            if N.contains(e) and op.defined(e) and op(e) > b:
                return e
        raise PreconditionError(f"{N} has no escape near {point}")

    def sampler(rng: random.Random) -> BasicOpen:
        # a generating open U | A containing the point must have U = M
        extra = rng.sample(range(b + 1), rng.randrange(b + 2))
        return Join((WHOLE, *(Singleton(a) for a in sorted(extra))))

    return DiscontinuityWitness(name, (point,), Singleton(image), tau, refuter, sampler, basic_nbhd(tau, point))


# ---------------------------------------------------------------------------
# probes


@dataclass(frozen=True)
class Escape:
    hint: int
    inputs: tuple[int, ...]
    image: int

    def to_dict(self) -> dict:
        return {"hint": self.hint, "inputs": list(self.inputs), "image": self.image}


@dataclass(frozen=True)
class NoWitnessUpTo:
    """No basic neighbourhood up to hint ``bound`` survived the sample."""

    bound: int
    escapes: tuple[Escape, ...]

    def to_dict(self) -> dict:
        return {"bound": self.bound, "escapes": [e.to_dict() for e in self.escapes]}


ProbeResult = TUnion[ContinuityWitness, NoWitnessUpTo]


def _probe_candidates(
    U: BasicOpen,
    p: int,
    signed: bool,
    search_bound: int,
    sample_bound: int,
    rng: np.random.Generator,
    cap: int,
) -> np.ndarray:
    sampled = members_upto(U, sample_bound, signed=signed)
    if len(sampled) > cap:
        sampled = np.sort(rng.choice(sampled, size=cap, replace=False))
    extra: list[int] = []
    signs = (1, -1) if signed else (1,)
    for j in range(search_bound + 1):
        for m in (1, 2, 3):
            for s in signs:
                c = p + s * m * (1 << j)
                if (signed or c >= 0) and U.contains(c):
                    extra.append(c)
    if isinstance(U, (OrderInterval, RightOpenInterval)):
        # nearest elements on either side of p, in magnitude order
        for lo, hi in ((U.lo, p), (p, U.hi)):
            if lo is None and U.kind is OrderKind.VARIANT and hi == 0:
                continue
            c = least_in_interval(U.kind, lo, hi, budget=1 << 16)
            if c is not None and U.contains(c):
                extra.append(c)
    out = np.unique(np.concatenate([sampled, np.asarray(extra, dtype=np.int64)]))
    return out.astype(np.int64)


def probe_continuity(
    op: str,
    tau: TopologySpec,
    point: Sequence[int],
    target: BasicOpen,
    *,
    search_bound: int = 8,
    sample_bound: int = 256,
    seed: int = 0,
    max_escapes: int = 3,
) -> ProbeResult:
    """Bounded search for a continuity witness.

    Tries the canonical neighbourhoods of the inputs for hints
    ``0..search_bound``.  A candidate is accepted when no sampled input
    tuple escapes the target; samples are all carrier elements up to
    ``sample_bound`` in each neighbourhood plus ``p + 2**j * m`` for
    ``j <= search_bound`` and ``m <= 3``.
    """
    o = operation(op)
    point = tuple(int(p) for p in point)
    if len(point) != o.arity:
        raise PreconditionError(f"{o} takes {o.arity} arguments")
    signed = tau.carrier is not None and tau.carrier.value == "Z"
    z = o(*point)
    if not target.contains(z):
        raise PreconditionError(f"target {target} does not contain {z}")
    rng = np.random.default_rng(seed)
    cap = 1 << (20 // o.arity)
    escapes: list[Escape] = []
    for h in range(search_bound + 1):
        nb = tuple(basic_nbhd(tau, p, h) for p in point)
        sets = [_probe_candidates(U, p, signed, search_bound, sample_bound, rng, cap) for U, p in zip(nb, point)]
        bad = _escapes(o, target, sets, signed)
        if bad is None:
            w = ContinuityWitness(str(o), point, target, nb,
                                  Justification.EMPIRICAL, signed)
            if w.check_symbolic():
                w = replace(w, justification=Justification.RESIDUE_MODULUS)
            return w
        escapes.append(Escape(h, bad, o(*bad)))
    return NoWitnessUpTo(search_bound, tuple(escapes[-max_escapes:]))


def _escapes(op: Operation, target: BasicOpen, sets: Sequence[np.ndarray], signed: bool) -> Optional[tuple[int, ...]]:
    """The escaping tuple of least total magnitude, or ``None``."""
    if op.arity == 1:
        xs = sets[0][op.domain(sets[0], signed=signed)]
        bad = xs[~target.mask(op.apply(xs))]
        if len(bad) == 0:
            return None
        return (int(bad[np.argmin(np.abs(bad))]),)
    X, Y = np.meshgrid(sets[0], sets[1], indexing="ij")
    X, Y = X.ravel(), Y.ravel()
    dom = op.domain(X, Y, signed=signed)
    X, Y = X[dom], Y[dom]
    bad = ~target.mask(op.apply(X, Y))
    if not bad.any():
        return None
    X, Y = X[bad], Y[bad]
    order = np.lexsort((Y, X, np.abs(X) + np.abs(Y)))
    return int(X[order[0]]), int(Y[order[0]])


@lru_cache(maxsize=4)
def _fd_universe(bound: int) -> tuple[np.ndarray, np.ndarray]:
    """``{0..2**bound}`` in magnitude order and in ``fd`` order (read-only)."""
    from . import kernels

    universe = np.arange((1 << bound) + 1, dtype=np.int64)
    order = kernels.sort_values(OrderKind.FINAL_DIGITS.code, universe)
    universe.flags.writeable = False
    order.flags.writeable = False
    return universe, order


def _unsandwiched(s: DigitString, members: np.ndarray, depth: int) -> np.ndarray:
    """Members not strictly between the numbers written ``1 0^t s`` and
    ``1^(t+1) s`` in the ``fd`` order, for every ``t <= depth``."""
    from . import kernels

    base, L = s.value, len(s)
    caught = np.zeros(len(members), dtype=bool)
    for t in range(depth + 1):
        lower = base + (1 << (L + t))
        upper = base + (((1 << (t + 1)) - 1) << L)
        caught |= (kernels.cmp_many(kernels.FD, members, lower) > 0) & (kernels.cmp_many(kernels.FD, members, upper) < 0)
    return members[~caught]


def probe_order_topology(s: DigitString, bound: int = 16) -> dict:
    """Evidence on whether ``U_s`` behaves like an open set of the ``fd`` order.

    On the truncation ``{0..2**bound}`` this reports convexity of ``U_s`` in
    the ``fd`` order, where the convention member sits inside the class,
    whether every member is caught between the bounds ``1 0..0 s`` and
    ``1 1..1 s``, and, when the convention member is an extremum, small
    order intervals around it that leave the class.
    """
    universe, order = _fd_universe(bound)
    U = SuffixClass(s)
    mask = U.mask(universe)
    residue = bool(np.array_equal(mask, universe % s.modulus == s.value))
    in_order = U.mask(order)
    idx = np.flatnonzero(in_order)
    convex = bool(len(idx) == 0 or idx[-1] - idx[0] + 1 == len(idx))
    members = order[idx]
    m = int(s.value)
    found = np.flatnonzero(members == m)
    pos = int(found[0]) if len(found) else -1
    if pos < 0:
        where = "outside-truncation"  # m > 2**bound
    elif len(members) == 1:
        where = "only"
    elif pos == 0:
        where = "minimum"
    elif pos == len(members) - 1:
        where = "maximum"
    else:
        where = "interior"
    depth = bound
    unsandwiched = [int(x) for x in _unsandwiched(s, members, depth)]
    leaks = []
    if where in ("minimum", "maximum"):
        from .topology import order_lower, order_upper

        for t in range(4):
            lo, hi = order_lower(OrderKind.FINAL_DIGITS, m, t), order_upper(OrderKind.FINAL_DIGITS, m, t)
            side = (m, hi) if where == "maximum" else (lo, m)
            c = least_in_interval(OrderKind.FINAL_DIGITS, *side, budget=1 << 20)
            leaks.append({"interval": [lo, hi], "outside_member": c, "in_class": None if c is None else U.contains(c)})
    return {
        "s": str(s),
        "bound": bound,
        "members": int(mask.sum()),
        "residue_exact": residue,
        "convex": convex,
        "convention_member": m,
        "convention_position": where,
        "sandwich_failures": unsandwiched[:8],
        "sandwich_failure_count": len(unsandwiched),
        "interval_leaks": leaks,
    }
