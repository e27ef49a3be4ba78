"""Feedback functions and the cycle structure of the run-length register.

Three registers appear here.  The pure cycling register (PCR) feeds the
oldest bit back; the complemented cycling register (CCR) feeds its
complement back; the pure run-length register (PRR) feeds back the parity
of the oldest bit, the second-oldest bit, and the youngest bit.  The PRR
of order n splits the 2^n states into cycles that mirror the PCR and CCR
cycles of order n - 1, which is what the successor rules exploit.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, NamedTuple, Tuple

from .core import MAX_LENGTH, State

MIN_ORDER = 3
MAX_DECOMPOSE_ORDER = 24


class OrderOutOfRangeError(ValueError):
    """Order outside the supported range for the requested operation."""


class CycleKind(Enum):
    PCR = "pcr"
    CCR = "ccr"


def _check_order(n: int, hi: int = MAX_LENGTH) -> None:
    if not MIN_ORDER <= n <= hi:
        raise OrderOutOfRangeError(f"order must be in [{MIN_ORDER}, {hi}], got {n}")


def prr_next_bit_value(v: int, n: int) -> int:
    return ((v >> (n - 1)) ^ (v >> (n - 2)) ^ v) & 1


def prr_next_bit(s: State) -> int:
    """Parity of the oldest, second-oldest, and youngest bits."""
    _check_order(s.n)
    return prr_next_bit_value(s.value, s.n)


def pcr_next_bit(s: State) -> int:
    """The oldest bit: the register cycles its contents."""
    return (s.value >> (s.n - 1)) & 1


def ccr_next_bit(s: State) -> int:
    """Complement of the oldest bit."""
    return ((s.value >> (s.n - 1)) & 1) ^ 1


def prr_step_value(v: int, n: int, mask: int) -> int:
    b = ((v >> (n - 1)) ^ (v >> (n - 2)) ^ v) & 1
    return ((v << 1) & mask) | b


def classify_state(s: State) -> CycleKind:
    """Kind of the PRR cycle containing s.

    The first n - 1 bits of the states on one cycle trace an order-(n-1)
    PCR or CCR cycle; which one is visible in any single member: PCR
    exactly when the oldest and youngest bits agree.  Constant on cycles.
    """
    _check_order(s.n)
    agree = ((s.value >> (s.n - 1)) ^ s.value) & 1 == 0
    return CycleKind.PCR if agree else CycleKind.CCR


@dataclass(frozen=True)
class Cycle:
    """One cycle of the PRR state graph.

    Member states are regenerated on demand from the representative
    rather than stored, so a full decomposition keeps O(2^n) bytes of
    bookkeeping instead of O(n 2^n) of state objects.
    """

    representative: State
    kind: CycleKind
    period: int

    def states(self) -> Iterator[State]:
        """The distinct states, starting at the representative."""
        n = self.representative.n
        mask = (1 << n) - 1
        v = self.representative.value
        for _ in range(self.period):
            yield State(v, n)
            v = prr_step_value(v, n, mask)

    def state_values(self) -> Iterator[int]:
        n = self.representative.n
        mask = (1 << n) - 1
        v = self.representative.value
        for _ in range(self.period):
            yield v
            v = prr_step_value(v, n, mask)


@dataclass(frozen=True)
class CycleStructure:
    """Full cycle decomposition of the order-n PRR."""

    order: int
    pcr_cycles: Tuple[Cycle, ...]
    ccr_cycles: Tuple[Cycle, ...]

    @property
    def cycles(self) -> Tuple[Cycle, ...]:
        return self.pcr_cycles + self.ccr_cycles

    def to_text(self) -> str:
        """One line per cycle: kind, period, representative."""
        return "\n".join(
            f"{c.kind.value} {c.period} ({c.representative})" for c in self.cycles
        )


def decompose(n: int) -> CycleStructure:
    """Partition all 2^n states into PRR cycles.

    Values are scanned in increasing order, so the first unvisited value
    on each cycle is its least member and serves as the representative.
    Within each kind, cycles come out sorted by representative.
    """
    _check_order(n, MAX_DECOMPOSE_ORDER)
    size = 1 << n
    mask = size - 1
    visited = bytearray(size)
    pcr: List[Cycle] = []
    ccr: List[Cycle] = []
    for v0 in range(size):
        if visited[v0]:
            continue
        period = 0
        v = v0
        while not visited[v]:
            visited[v] = 1
            period += 1
            v = prr_step_value(v, n, mask)
        pcr_type = ((v0 >> (n - 1)) ^ v0) & 1 == 0
        cyc = Cycle(State(v0, n), CycleKind.PCR if pcr_type else CycleKind.CCR, period)
        (pcr if pcr_type else ccr).append(cyc)
    return CycleStructure(n, tuple(pcr), tuple(ccr))


class CycleCounts(NamedTuple):
    pcr: int
    ccr: int
    total: int


def _totient(d: int) -> int:
    result = d
    x = d
    p = 2
    while p * p <= x:
        if x % p == 0:
            while x % p == 0:
                x //= p
            result -= result // p
        p += 1
    if x > 1:
        result -= result // x
    return result


def count_cycles(n: int) -> CycleCounts:
    """Closed-form cycle counts for the order-n PRR.

    With m = n - 1: the PCR-type count is (1/m) sum over d | m of
    phi(d) 2^(m/d), and the CCR-type count is (1/2m) the same sum
    restricted to odd d.  Exact integer arithmetic throughout.
    """
    _check_order(n)
    m = n - 1
    divisors = [d for d in range(1, m + 1) if m % d == 0]
    z = sum(_totient(d) * (1 << (m // d)) for d in divisors) // m
    zstar = sum(_totient(d) * (1 << (m // d)) for d in divisors if d % 2 == 1) // (2 * m)
    return CycleCounts(z, zstar, z + zstar)
