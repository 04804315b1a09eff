"""Compare the clause readings of the Dickson involution condition with brute force."""

import argparse
from math import gcd

from ffinterleave.cycletheory import dickson_involution_condition, dickson_uniform_clause_condition
from ffinterleave.families import DicksonParams, dickson_interleaver
from ffinterleave.gf import build_field, prime_powers
from ffinterleave.perm import is_self_inverse

READINGS = {
    "verbatim": lambda F, n, a: dickson_involution_condition(F, n, a, reading="verbatim"),
    "uniform": dickson_uniform_clause_condition,
    "corrected": dickson_involution_condition,
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q-max", type=int, default=64)
    ap.add_argument("--examples", type=int, default=3, help="mismatches to print per reading and sign")
    args = ap.parse_args()

    points = {1: 0, -1: 0}
    wrong = {(r, a): [] for r in READINGS for a in (1, -1)}
    for p, m in prime_powers(2, args.q_max):
        F = build_field(p, m)
        s = F.q * F.q - 1
        for a in (1, -1):
            for n in range(1, s + 1):
                if gcd(n, s) != 1:
                    continue
                points[a] += 1
                truth = is_self_inverse(dickson_interleaver(F, DicksonParams(n, a)))
                for name, cond in READINGS.items():
                    if cond(F, n, a) != truth:
                        wrong[name, a].append((F.q, n, truth))

    for (name, a), bad in wrong.items():
        print(f"{name:>9} a={a:+d}: {len(bad)}/{points[a]} mismatches", end="")
        shown = ", ".join(f"q={q} n={n} truth={t}" for q, n, t in bad[: args.examples])
        print(f"  e.g. {shown}" if shown else "")


if __name__ == "__main__":
    main()
