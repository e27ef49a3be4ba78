"""Register states and the two rotation operators the successor rules use.

A State packs its bits into a plain int, oldest bit first: bit index 0 is
the leftmost character of the string form and the first bit shifted out of
the register.  Everything downstream works on these packed values, so the
module also exposes the value-level kernels (functions taking ``(value,
length)`` pairs) that the hot paths call directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

MAX_LENGTH = 64


class ZeroStateError(ValueError):
    """An operator that needs a 1 somewhere was given the all-zero state."""


@dataclass(frozen=True)
class State:
    """Immutable contents of an n-bit shift register."""

    value: int
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_LENGTH:
            raise ValueError(f"state length must be in [1, {MAX_LENGTH}], got {self.n}")
        if not 0 <= self.value < (1 << self.n):
            raise ValueError(f"value {self.value} does not fit in {self.n} bits")

    @classmethod
    def from_string(cls, s: str) -> "State":
        if not s or s.strip("01"):
            raise ValueError(f"expected a nonempty string over 0/1, got {s!r}")
        return cls(int(s, 2), len(s))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "State":
        value = 0
        n = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bits must be 0 or 1, got {b!r}")
            value = (value << 1) | b
            n += 1
        return cls(value, n)

    def bit(self, i: int) -> int:
        """Bit at index i, counting from the oldest (leftmost) end."""
        if not 0 <= i < self.n:
            raise IndexError(f"bit index {i} out of range for length {self.n}")
        return (self.value >> (self.n - 1 - i)) & 1

    def bits(self) -> Tuple[int, ...]:
        return tuple((self.value >> (self.n - 1 - i)) & 1 for i in range(self.n))

    def __str__(self) -> str:
        return format(self.value, f"0{self.n}b")

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits())


def rotate_left_value(v: int, m: int, r: int) -> int:
    """Cyclically rotate an m-bit value left by r places."""
    r %= m
    if r == 0:
        return v
    mask = (1 << m) - 1
    return ((v << r) | (v >> (m - r))) & mask


def complement(s: State) -> State:
    return State(s.value ^ ((1 << s.n) - 1), s.n)


def conjugate(s: State) -> State:
    """Flip the oldest bit.  Involution; the pair shares its last n-1 bits."""
    return State(s.value ^ (1 << (s.n - 1)), s.n)


def companion(s: State) -> State:
    """Flip the youngest bit."""
    return State(s.value ^ 1, s.n)


def left_shift(s: State) -> State:
    """One cyclic left rotation."""
    return State(rotate_left_value(s.value, s.n, 1), s.n)


def weight(s: State) -> int:
    """Number of ones."""
    return s.value.bit_count()


@dataclass(frozen=True)
class RunLengthEncoding:
    """Maximal runs of equal bits, in order of appearance."""

    runs: Tuple[int, ...]
    total: int

    def __post_init__(self) -> None:
        if any(r < 1 for r in self.runs) or sum(self.runs) != self.total:
            raise ValueError("runs must be positive and sum to the total length")

    @property
    def run_count(self) -> int:
        return len(self.runs)


def run_length_encode(s: State) -> RunLengthEncoding:
    runs = []
    prev = s.bit(0)
    count = 0
    for b in s.bits():
        if b == prev:
            count += 1
        else:
            runs.append(count)
            prev = b
            count = 1
    runs.append(count)
    return RunLengthEncoding(tuple(runs), s.n)


def _clear_top_bits(x: int, count: int) -> int:
    for _ in range(count):
        x ^= 1 << (x.bit_length() - 1)
    return x


def lambda_rotate_value(u: int, m: int, r: int) -> int:
    """Value kernel for lambda_rotate; u must be nonzero, r >= 0.

    One application rotates u left to just past its first 1.  Iterating
    therefore walks the ones of u cyclically: for r >= 1 the result is u
    rotated left to just past its j-th 1, where j = ((r - 1) mod w) + 1
    and w is the weight.  That makes arbitrary exponents O(m) instead of
    O(r), which matters because the rules take exponents up to lcm(1..m).
    """
    if r == 0:
        return u
    w = u.bit_count()
    j = (r - 1) % w + 1
    x = _clear_top_bits(u, j - 1)
    p = m - x.bit_length()  # index of the j-th 1, counting from the left
    return rotate_left_value(u, m, p + 1)


def lambda_rotate(u: State, r: int) -> State:
    """Apply r times the rotation that carries everything up to and
    including the first 1 to the back of the state."""
    if u.value == 0:
        raise ZeroStateError("rotation past the first 1 needs a nonzero state")
    if r < 0:
        raise ValueError(f"rotation count must be >= 0, got {r}")
    return State(lambda_rotate_value(u.value, u.n, r), u.n)


def theta_rotate_value(u: int, m: int, r: int) -> int:
    """Value kernel for theta_rotate; r >= 0.

    Fixed points are the all-ones state and the state 0 followed by all
    ones.  Otherwise one application rotates u left to its first 0 at
    index >= 1.  Every non-fixed result starts with a 0, so from r = 1 on
    the operator walks the zeros of u cyclically and exponents reduce
    modulo the number of zeros, as in lambda_rotate_value.
    """
    if r == 0 or u == (1 << m) - 1 or u == (1 << (m - 1)) - 1:
        return u
    z = m - u.bit_count()
    # The first step skips index 0, so it lands on zero number 1 or 2
    # depending on whether u already starts with a 0.
    start = 2 if (u >> (m - 1)) & 1 == 0 else 1
    j = (start + r - 2) % z + 1
    x = _clear_top_bits(~u & ((1 << m) - 1), j - 1)
    q = m - x.bit_length()  # index of the j-th 0
    return rotate_left_value(u, m, q)


def theta_rotate(u: State, r: int) -> State:
    """Apply r times the rotation that carries everything strictly before
    the first 0 past position 0 to the back of the state.  Total: states
    with no such 0 are returned unchanged."""
    if r < 0:
        raise ValueError(f"rotation count must be >= 0, got {r}")
    return State(theta_rotate_value(u.value, u.n, r), u.n)
