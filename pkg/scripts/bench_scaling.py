#!/usr/bin/env python3
"""Per-bit generation cost across orders, for the two rule families whose
selectors do real work per step.  The useful signal is the growth trend:
the per-bit cost should scale roughly linearly with n."""

import argparse
import time
from collections import deque

from prrseq import RuleKind, RuleSpec, State, generate, lcm_range


def ns_per_bit(spec, bits, repeat):
    best = None
    for _ in range(repeat):
        stream = generate(spec, State(0, spec.n), bits)
        t0 = time.perf_counter_ns()
        deque(stream, maxlen=0)
        elapsed = time.perf_counter_ns() - t0
        best = elapsed if best is None else min(best, elapsed)
    return best / bits


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bits", type=int, default=1 << 15)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--orders", type=int, nargs="+", default=[8, 16, 32, 64])
    args = parser.parse_args()

    print(f"{'n':>4s} {'sala ns/bit':>12s} {'psi2 ns/bit':>12s}")
    base = {}
    for n in args.orders:
        sala = ns_per_bit(RuleSpec(RuleKind.SALA, n), args.bits, args.repeat)
        psi2 = ns_per_bit(
            RuleSpec(RuleKind.PSI2, n, k=lcm_range(n - 2)), args.bits, args.repeat
        )
        base.setdefault("sala", sala)
        base.setdefault("psi2", psi2)
        print(f"{n:>4d} {sala:>12.1f} {psi2:>12.1f}")
    print(
        f"growth vs n={args.orders[0]}: "
        f"sala x{sala / base['sala']:.1f}, psi2 x{psi2 / base['psi2']:.1f}"
    )


if __name__ == "__main__":
    main()
