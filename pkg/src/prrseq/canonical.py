"""Cycle-representative predicates.

A necklace is a string that is lexicographically no larger than any of its
cyclic rotations; necklaces are the canonical members of rotation classes.
The co-necklace predicate plays the same role for complement-then-rotate
classes: it marks the state of a complementing-register cycle from which
the cycle reads smallest.
"""

from __future__ import annotations

from .core import State


def is_necklace_value(v: int, m: int) -> bool:
    """True iff the m-bit value v is <= all of its rotations.

    Single scan keeping the length p of the shortest prefix that the
    string extends periodically.  Seeing a symbol smaller than the one p
    places back rules out every candidate; seeing a larger one restarts
    the period at the current position.  v is a necklace iff the scan
    survives and p divides m.
    """
    p = 1
    top = m - 1
    for i in range(1, m):
        a = (v >> (top - i)) & 1
        b = (v >> (top - i + p)) & 1
        if b > a:
            return False
        if b < a:
            p = i + 1
    return m % p == 0


def is_conecklace_value(v: int, m: int) -> bool:
    # v heads its complement-rotation class iff the 2m-bit word (v followed
    # by its complement) heads its plain rotation class: both conditions
    # compare v against the same 2m cyclic windows.
    return is_necklace_value((v << m) | (v ^ ((1 << m) - 1)), 2 * m)


def is_necklace(u: State) -> bool:
    """True iff u is the lexicographically least rotation of itself."""
    return is_necklace_value(u.value, u.n)


def is_conecklace(u: State) -> bool:
    """True iff u is the least n-window of the cyclic string formed by u
    followed by its complement."""
    return is_conecklace_value(u.value, u.n)
