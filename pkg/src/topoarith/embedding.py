"""An explicit order isomorphism between (N, fd order) and (Q, <).

Built by a deterministic back-and-forth.  Steps are numbered from 1; odd
steps go forth (map the least unmapped natural) and even steps go back
(pull back the first unused rational of a fixed enumeration).  The fixed
enumeration is 0 followed by the Calkin-Wilf sequence with each positive
rational immediately followed by its negation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from sortedcontainers import SortedList

from .continuity import ContinuityWitness, Justification, witness_final_digits, witness_translate
from .errors import BudgetExceededError, PreconditionError
from .numerals import Numeral, suffix
from .orders import OrderKind, fd_sort_key, least_in_interval
from .pairing import pair_cantor, pair_double, unpair_cantor, unpair_double
from .topology import SuffixClass

__all__ = [
    "calkin_wilf",
    "calkin_wilf_index",
    "rational_at",
    "rational_index",
    "enumerate_rationals",
    "simplest_between",
    "BackAndForthState",
    "ba_step",
    "embed",
    "inverse",
    "transported_add",
    "transported_mul",
    "embedding_table",
    "pair_cantor",
    "pair_double",
    "unpair_cantor",
    "unpair_double",
    "witness_pairing",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 10**6


def calkin_wilf(n: int) -> Fraction:
    """Node ``n >= 1`` of the Calkin-Wilf tree in breadth-first order.

    The root is 1; node ``2n`` is ``a/(a+b)`` and node ``2n+1`` is
    ``(a+b)/b`` when node ``n`` is ``a/b``.
    """
    if n < 1:
        raise PreconditionError("Calkin-Wilf nodes are numbered from 1")
    a, b = 1, 1
    for bit in bin(n)[3:]:
        if bit == "0":
            b = a + b
        else:
            a = a + b
    return Fraction(a, b)


def calkin_wilf_index(q: Fraction) -> int:
    """Inverse of :func:`calkin_wilf`, walking up the tree in Euclid-sized jumps."""
    q = Fraction(q)
    if q <= 0:
        raise PreconditionError(f"{q} is not a positive rational")
    a, b = q.numerator, q.denominator
    runs: list[tuple[int, int]] = []
    while (a, b) != (1, 1):
        if a > b:
            k = (a - 1) // b
            runs.append((1, k))
            a -= k * b
        else:
            k = (b - 1) // a
            runs.append((0, k))
            b -= k * a
    n = 1
    for bit, k in reversed(runs):
        n = (n << k) | (((1 << k) - 1) if bit else 0)
    return n


def rational_at(j: int) -> Fraction:
    """Position ``j`` of the enumeration 0, 1, -1, 1/2, -1/2, 2, -2, ..."""
    if j < 0:
        raise PreconditionError("enumeration positions start at 0")
    if j == 0:
        return Fraction(0)
    q = calkin_wilf((j + 1) // 2)
    return q if j % 2 else -q


def rational_index(q: Fraction) -> int:
    q = Fraction(q)
    if q == 0:
        return 0
    i = calkin_wilf_index(abs(q))
    return 2 * i - 1 if q > 0 else 2 * i


def enumerate_rationals(start: int = 0) -> Iterator[Fraction]:
    j = start
    while True:
        yield rational_at(j)
        j += 1


def _simplest_positive(ln: int, ld: int, hn: int, hd: int) -> tuple[int, int]:
    """Simplest rational in ``(ln/ld, hn/hd)`` with ``ln/ld >= 0``; ``hd == 0`` means no upper end.

    Returns ``(numerator, denominator)``.  Plain integers keep this fast.
    """
    fl = ln // ld
    if hd == 0 or (fl + 1) * hd < hn:
        return fl + 1, 1
    # the interval sits inside (fl, fl + 1]; recurse on the reciprocal of the fractional part
    rem = ln - fl * ld
    p, q = _simplest_positive(hd, hn - fl * hd, ld if rem else 1, rem)
    return fl * p + q, p


def simplest_between(lo: Optional[Fraction], hi: Optional[Fraction]) -> Fraction:
    """The rational of least enumeration position in ``(lo, hi)``.

    The Calkin-Wilf levels are the Stern-Brocot levels, and an open interval
    has a unique shallowest Stern-Brocot node, so this is the classical
    "simplest rational" of the interval.  ``None`` ends are unbounded.
    """
    if lo is not None and hi is not None and lo >= hi:
        raise PreconditionError(f"empty interval ({lo}, {hi})")
    if (lo is None or lo < 0) and (hi is None or hi > 0):
        return Fraction(0)
    if lo is not None and lo >= 0:
        a, b = Fraction(lo), hi
        sign = 1
    else:
        a, b = -Fraction(hi), None if lo is None else -Fraction(lo)  # type: ignore[arg-type]
        sign = -1
    p, q = _simplest_positive(
        a.numerator, a.denominator, 0 if b is None else b.numerator, 0 if b is None else b.denominator
    )
    return Fraction(sign * p, q)


@dataclass
class BackAndForthState:
    """A finite order-preserving partial map from (N, fd) to (Q, <).

    The mapped naturals (by fd sort key) and their rationals are kept in two
    sorted lists that line up index for index.  Rationals are stored as
    ``(float(q), q)``: rounding is monotone, so the float settles most
    comparisons and the exact value breaks ties.
    """

    budget: Optional[int] = DEFAULT_BUDGET
    steps: int = 0
    forward: dict[int, Fraction] = field(default_factory=dict)
    backward: dict[Fraction, int] = field(default_factory=dict)
    log: list[tuple[int, str, int, Fraction]] = field(default_factory=list)
    _keys: SortedList = field(default_factory=SortedList, repr=False)
    _rats: SortedList = field(default_factory=SortedList, repr=False)
    _by_key: dict[str, int] = field(default_factory=dict, repr=False)
    _next_natural: int = 0
    _next_rational: int = 0

    @property
    def naturals(self) -> list[int]:
        """Mapped naturals in fd order."""
        return [self._by_key[k] for k in self._keys]

    @property
    def rationals(self) -> list[Fraction]:
        return [q for _, q in self._rats]

    def _insert(self, n: int, q: Fraction, direction: str) -> None:
        key = fd_sort_key(n)
        self._keys.add(key)
        self._by_key[key] = n
        self._rats.add((float(q), q))
        self.forward[n] = q
        self.backward[q] = n
        self.log.append((self.steps, direction, n, q))

    def _forth(self) -> None:
        while self._next_natural in self.forward:
            self._next_natural += 1
        n = self._next_natural
        pos = self._keys.bisect_left(fd_sort_key(n))
        lo = self._rats[pos - 1][1] if pos else None
        hi = self._rats[pos][1] if pos < len(self._rats) else None
        self._insert(n, simplest_between(lo, hi), "forth")

    def _back(self) -> None:
        while rational_at(self._next_rational) in self.backward:
            self._next_rational += 1
        q = rational_at(self._next_rational)
        pos = self._rats.bisect_left((float(q), q))
        lo = self._by_key[self._keys[pos - 1]] if pos else None
        hi = self._by_key[self._keys[pos]] if pos < len(self._keys) else None
        n = least_in_interval(OrderKind.FINAL_DIGITS, lo, hi, budget=self.budget)
        if n is None:
            raise BudgetExceededError(
                f"no natural found between {lo} and {hi} within {self.budget} candidates"
            )
        self._insert(n, q, "back")

    def step(self) -> "BackAndForthState":
        self.steps += 1
        if self.steps % 2:
            self._forth()
        else:
            self._back()
        return self

    def run(self, steps: int) -> "BackAndForthState":
        while self.steps < steps:
            self.step()
        return self

    def embed(self, n: int, *, advance: bool = True) -> Fraction:
        n = int(Numeral(n))
        while n not in self.forward:
            if not advance:
                raise PreconditionError(f"{n} is not mapped after {self.steps} steps")
            self.step()
        return self.forward[n]

    def inverse(self, q: Fraction, *, advance: bool = True) -> Numeral:
        q = Fraction(q)
        while q not in self.backward:
            if not advance:
                raise PreconditionError(f"{q} is not hit after {self.steps} steps")
            self.step()
        return Numeral(self.backward[q])


def ba_step(state: BackAndForthState) -> BackAndForthState:
    return state.step()


def embed(n: int, state: BackAndForthState) -> Fraction:
    return state.embed(n)


def inverse(q: Fraction, state: BackAndForthState) -> Numeral:
    return state.inverse(q)


def transported_add(q1: Fraction, q2: Fraction, state: BackAndForthState) -> Fraction:
    return state.embed(state.inverse(q1) + state.inverse(q2))


def transported_mul(q1: Fraction, q2: Fraction, state: BackAndForthState) -> Fraction:
    return state.embed(state.inverse(q1) * state.inverse(q2))


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def embedding_table(state: BackAndForthState) -> list[dict]:
    """Rows ``{"n", "e", "step", "direction"}`` sorted by ``n``."""
    rows = [
        {"n": n, "e": _fmt(q), "step": t, "direction": d}
        for t, d, n, q in state.log
    ]
    return sorted(rows, key=lambda r: r["n"])


def witness_pairing(n: int, m: int, target_len: int) -> ContinuityWitness:
    """Residue witness for ``pair_double`` at ``(n, m)``.

    ``pair_double(n, m) = s * (s + 1) + 2 * m`` with ``s = n + m``.  The
    witness is assembled stage by stage from add, translate and mul residue
    witnesses; every stage consumes the previous stage's target classes, so
    suffix length ``target_len`` on the inputs carries through to the output.
    """
    n, m, L = int(n), int(m), int(target_len)
    s_w = witness_final_digits("add", n, m, L)
    s = n + m
    s1_w = witness_translate(1, s, L)
    prod_w = witness_final_digits("mul", s, s + 1, L)
    dbl_w = witness_final_digits("mul", m, 2, L)
    out_w = witness_final_digits("add", s * (s + 1), 2 * m, L)
    # the stages chain: each input class is an earlier target (or an input class)
    assert s1_w.neighborhoods[0] == s_w.target
    assert prod_w.neighborhoods == (s_w.target, s1_w.target)
    assert dbl_w.neighborhoods[0] == s_w.neighborhoods[1]
    assert out_w.neighborhoods == (prod_w.target, dbl_w.target)
    z = pair_double(n, m)
    assert out_w.target == SuffixClass(suffix(z, L))
    return ContinuityWitness(
        "pairing-q",
        (n, m),
        out_w.target,
        (SuffixClass(suffix(n, L)), SuffixClass(suffix(m, L))),
        Justification.RESIDUE_MODULUS,
    )
