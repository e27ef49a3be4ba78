"""Successor rules that join the run-length register's cycles into one.

Each rule follows the feedback of the pure run-length register except on
a critical set of states, where it complements the feedback bit.  When
the critical set holds exactly one conjugate pair of states per joinable
pair of cycles, and those joins connect all cycles, the walk visits every
n-bit window exactly once: a de Bruijn sequence of order n.

Five rules are provided.  All of them accept, on each complementing-type
cycle, the state whose tail is the co-necklace.  They differ on the
cycling-type cycles:

* ``sala`` accepts tails that are necklaces outright;
* ``psi1`` and ``psi2`` accept the tail that reaches its cycle's necklace
  after a prescribed number of advance-past-the-first-1 rotations;
* ``upsilon1`` and ``upsilon2`` do the same with advance-to-the-next-0
  rotations of the zero-prefixed tail.

The prescription is a set of breakpoints (``kset``) for psi1/upsilon1 and
a single exponent (``k``) for psi2/upsilon2, giving 2^(n-3) respectively
lcm(1..n-2) distinct sequences per family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator, Optional, Sequence, Tuple

from .canonical import is_conecklace_value, is_necklace_value
from .core import MAX_LENGTH, State, lambda_rotate_value, theta_rotate_value
from .registers import MIN_ORDER, prr_next_bit_value

CriticalPredicate = Callable[[int], bool]
TailSelector = Callable[[int], bool]


class RuleKind(Enum):
    SALA = "sala"
    PSI1 = "psi1"
    PSI2 = "psi2"
    UPSILON1 = "upsilon1"
    UPSILON2 = "upsilon2"


class SpecSyntaxError(ValueError):
    """Rule spec string does not match the grammar."""


class InvalidSpecError(ValueError):
    """Well-formed spec with parameters outside the rule's valid range."""


def exponent_period(n: int) -> int:
    """lcm(1..n-2): the number of distinct single-exponent rules.

    Exponents k and k + exponent_period(n) select identical critical
    sets, because every advance operator cycles with some period
    dividing n - 2 on the tails it is applied to.
    """
    return math.lcm(*range(1, n - 1))


@dataclass(frozen=True)
class RuleSpec:
    """A fully parameterized successor rule.

    kset applies to psi1/upsilon1 and must be strictly increasing with
    first element 1, last element n, and second-largest element < n - 1.
    k applies to psi2 (range [1, lcm(1..n-2)]) and upsilon2 (range
    [0, lcm(1..n-2) - 1]).
    """

    kind: RuleKind
    n: int
    kset: Optional[Tuple[int, ...]] = None
    k: Optional[int] = None

    def __post_init__(self) -> None:
        if not MIN_ORDER <= self.n <= MAX_LENGTH:
            raise InvalidSpecError(
                f"n must be in [{MIN_ORDER}, {MAX_LENGTH}], got {self.n}"
            )
        if self.kind in (RuleKind.PSI1, RuleKind.UPSILON1):
            self._check_kset()
        elif self.kind in (RuleKind.PSI2, RuleKind.UPSILON2):
            self._check_k()
        else:
            if self.kset is not None or self.k is not None:
                raise InvalidSpecError("sala takes no parameters besides n")

    def _check_kset(self) -> None:
        if self.k is not None or self.kset is None:
            raise InvalidSpecError(f"{self.kind.value} takes kset, not k")
        object.__setattr__(self, "kset", tuple(self.kset))
        ks = self.kset
        if list(ks) != sorted(set(ks)):
            raise InvalidSpecError(f"kset must be strictly increasing, got {ks}")
        if not 2 <= len(ks) <= self.n - 1:
            raise InvalidSpecError(f"kset size must be in [2, n-1], got {len(ks)}")
        if ks[0] != 1 or ks[-1] != self.n:
            raise InvalidSpecError(f"kset must start at 1 and end at n={self.n}")
        if ks[-2] >= self.n - 1:
            raise InvalidSpecError("second-largest kset element must be < n-1")

    def _check_k(self) -> None:
        if self.kset is not None or self.k is None:
            raise InvalidSpecError(f"{self.kind.value} takes k, not kset")
        period = exponent_period(self.n)
        lo = 1 if self.kind is RuleKind.PSI2 else 0
        hi = period if self.kind is RuleKind.PSI2 else period - 1
        if not lo <= self.k <= hi:
            raise InvalidSpecError(
                f"k must be in [{lo}, {hi}] for n={self.n}, got {self.k}"
            )

    @classmethod
    def parse(cls, text: str) -> "RuleSpec":
        """Parse ``kind:n=N``, ``kind:n=N:kset=a,b,...`` or ``kind:n=N:k=K``."""
        parts = text.strip().split(":")
        try:
            kind = RuleKind(parts[0].lower())
        except ValueError:
            raise SpecSyntaxError(f"unknown rule kind {parts[0]!r}") from None
        fields = {}
        for part in parts[1:]:
            key, sep, val = part.partition("=")
            if not sep or not key:
                raise SpecSyntaxError(f"malformed field {part!r}, expected key=value")
            if key in fields:
                raise SpecSyntaxError(f"duplicate field {key!r}")
            fields[key] = val
        n = _parse_int(fields.pop("n", None), "n")
        kset = k = None
        if kind in (RuleKind.PSI1, RuleKind.UPSILON1):
            raw = fields.pop("kset", None)
            if raw is None:
                raise SpecSyntaxError(f"{kind.value} requires a kset field")
            kset = tuple(_parse_int(item, "kset") for item in raw.split(","))
        elif kind in (RuleKind.PSI2, RuleKind.UPSILON2):
            k = _parse_int(fields.pop("k", None), "k")
        if fields:
            raise SpecSyntaxError(f"unexpected field {sorted(fields)[0]!r}")
        return cls(kind, n, kset=kset, k=k)

    def spec_string(self) -> str:
        """Inverse of parse."""
        if self.kset is not None:
            return f"{self.kind.value}:n={self.n}:kset={','.join(map(str, self.kset))}"
        if self.k is not None:
            return f"{self.kind.value}:n={self.n}:k={self.k}"
        return f"{self.kind.value}:n={self.n}"


def _parse_int(raw: Optional[str], field: str) -> int:
    if raw is None:
        raise SpecSyntaxError(f"missing field {field!r}")
    try:
        return int(raw, 10)
    except ValueError:
        raise SpecSyntaxError(f"field {field!r} needs an integer, got {raw!r}") from None


def _bracket(kset: Sequence[int], w: int) -> int:
    # Largest element <= w.  kset starts at 1 and w >= 1 in every caller,
    # so there is always one.
    best = kset[0]
    for k in kset:
        if k > w:
            break
        best = k
    return best


def psi_critical_predicate(n: int, selector: TailSelector) -> CriticalPredicate:
    """Critical predicate accepting states by their tail u = bits 1..n-1.

    Tails starting with 0 are accepted iff they are co-necklaces.  Tails
    starting with 1 go to ``selector``, which must accept exactly one
    tail per rotation class for the resulting rule to be valid; the
    selector sees the tail as an (n-1)-bit value.
    """
    m = n - 1
    tail_mask = (1 << m) - 1
    tail_top = 1 << (m - 1)

    def critical(v: int) -> bool:
        u = v & tail_mask
        if u & tail_top:
            return selector(u)
        return is_conecklace_value(u, m)

    return critical


def upsilon_critical_predicate(n: int, selector: TailSelector) -> CriticalPredicate:
    """Critical predicate accepting states by their last bit.

    States ending in 1 are accepted iff the complement of bits 1..n-2,
    followed by 0, is a co-necklace.  States ending in 0 go to
    ``selector``, which sees the (n-1)-bit value 0,c1..c_{n-2} and must
    accept exactly one member per rotation class of such values.
    """
    m = n - 1
    mid_mask = (1 << (n - 2)) - 1

    def critical(v: int) -> bool:
        mid = (v >> 1) & mid_mask  # bits 1..n-2
        if v & 1:
            return is_conecklace_value((mid ^ mid_mask) << 1, m)
        return selector(mid)

    return critical


def _psi1_selector(n: int, kset: Tuple[int, ...]) -> TailSelector:
    m = n - 1

    def selector(u: int) -> bool:
        e = _bracket(kset, u.bit_count())
        return is_necklace_value(lambda_rotate_value(u, m, e), m)

    return selector


def _psi2_selector(n: int, k: int) -> TailSelector:
    m = n - 1

    def selector(u: int) -> bool:
        w = u.bit_count()
        # k indexes the weight-w tails of a cycle cyclically (k and k + w
        # agree): the accepted tail is the one whose advance orbit first
        # hits the cycle's necklace at a step congruent to k - 1 mod w,
        # with the k = 1 case mapping to a full lap of w advances.
        e = (k - 2) % w + 1
        return is_necklace_value(lambda_rotate_value(u, m, e), m)

    return selector


def _upsilon1_selector(n: int, kset: Tuple[int, ...]) -> TailSelector:
    m = n - 1

    def selector(u: int) -> bool:
        z = m - u.bit_count()  # zeros of u, >= 1 since u starts with 0
        e = _bracket(kset, z) - 1
        return is_necklace_value(theta_rotate_value(u, m, e), m)

    return selector


def _upsilon2_selector(n: int, k: int) -> TailSelector:
    m = n - 1

    def selector(u: int) -> bool:
        z = m - u.bit_count()
        # u starts with 0, so its advance orbit is purely periodic with
        # period z and k is read modulo z, one step behind the exponent.
        e = (k - 1) % z
        return is_necklace_value(theta_rotate_value(u, m, e), m)

    return selector


def critical_predicate(spec: RuleSpec) -> CriticalPredicate:
    """Membership test for spec's critical set, over packed n-bit values.

    Built once per spec; the returned closure is what the generator and
    the validators call per state.
    """
    n = spec.n
    if spec.kind is RuleKind.SALA:
        m = n - 1
        tail_mask = (1 << m) - 1

        def critical(v: int) -> bool:
            u = v & tail_mask
            return is_necklace_value(u, m) or is_conecklace_value(u, m)

        return critical
    if spec.kind is RuleKind.PSI1:
        return psi_critical_predicate(n, _psi1_selector(n, spec.kset))
    if spec.kind is RuleKind.PSI2:
        return psi_critical_predicate(n, _psi2_selector(n, spec.k))
    if spec.kind is RuleKind.UPSILON1:
        return upsilon_critical_predicate(n, _upsilon1_selector(n, spec.kset))
    return upsilon_critical_predicate(n, _upsilon2_selector(n, spec.k))


def _check_state(spec: RuleSpec, s: State) -> None:
    if s.n != spec.n:
        raise InvalidSpecError(f"state length {s.n} does not match spec n={spec.n}")


def in_critical_set(spec: RuleSpec, s: State) -> bool:
    """True iff the rule complements the register feedback at s."""
    _check_state(spec, s)
    return critical_predicate(spec)(s.value)


def in_critical_set_sala(n: int, s: State) -> bool:
    return in_critical_set(RuleSpec(RuleKind.SALA, n), s)


def in_critical_set_psi1(n: int, kset: Sequence[int], s: State) -> bool:
    return in_critical_set(RuleSpec(RuleKind.PSI1, n, kset=tuple(kset)), s)


def in_critical_set_psi2(n: int, k: int, s: State) -> bool:
    return in_critical_set(RuleSpec(RuleKind.PSI2, n, k=k), s)


def in_critical_set_upsilon1(n: int, kset: Sequence[int], s: State) -> bool:
    return in_critical_set(RuleSpec(RuleKind.UPSILON1, n, kset=tuple(kset)), s)


def in_critical_set_upsilon2(n: int, k: int, s: State) -> bool:
    return in_critical_set(RuleSpec(RuleKind.UPSILON2, n, k=k), s)


def next_bit(spec: RuleSpec, s: State) -> int:
    """The bit the rule shifts in after s."""
    _check_state(spec, s)
    return prr_next_bit_value(s.value, s.n) ^ critical_predicate(spec)(s.value)


def next_state(spec: RuleSpec, s: State) -> State:
    _check_state(spec, s)
    b = prr_next_bit_value(s.value, s.n) ^ critical_predicate(spec)(s.value)
    return State(((s.value << 1) & ((1 << s.n) - 1)) | b, s.n)


def generate(
    spec: RuleSpec,
    start: Optional[State] = None,
    count: Optional[int] = None,
) -> Iterator[int]:
    """Stream the rule's sequence: bit j is the oldest bit of the window
    at position j, so the first n bits spell out the start state.

    start defaults to all zeros, count to the full period 2^n.
    """
    n = spec.n
    if start is None:
        v = 0
    else:
        _check_state(spec, start)
        v = start.value
    if count is None:
        count = 1 << n
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    critical = critical_predicate(spec)
    mask = (1 << n) - 1
    top = n - 1
    second = n - 2
    for _ in range(count):
        yield (v >> top) & 1
        b = ((v >> top) ^ (v >> second) ^ v) & 1
        if critical(v):
            b ^= 1
        v = ((v << 1) & mask) | b


@dataclass(frozen=True)
class SequenceRecord:
    """One full period of a rule's output."""

    bits: str
    spec: RuleSpec
    start: State


def generate_sequence(spec: RuleSpec, start: Optional[State] = None) -> SequenceRecord:
    """One full period (2^n bits) starting from start, default all zeros."""
    if start is None:
        start = State(0, spec.n)
    bits = "".join("01"[b] for b in generate(spec, start, 1 << spec.n))
    return SequenceRecord(bits, spec, start)
