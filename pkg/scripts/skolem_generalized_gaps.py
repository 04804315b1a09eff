"""List (j, n) where the generalized existence congruence holds but search finds no sequence."""

import argparse

from ffinterleave.skolem import exists_by_search, generalized_skolem_exists


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--jn-max", type=int, default=72)
    ap.add_argument("--j-max", type=int, default=8)
    ap.add_argument("--node-limit", type=int, default=2_000_000)
    args = ap.parse_args()

    for j in range(3, args.j_max + 1):
        impossible, undecided, built, necessary_bad = [], [], [], []
        for n in range(1, args.jn_max // j + 1):
            pred = generalized_skolem_exists(j, n)
            found = exists_by_search("generalized", n, j=j, node_limit=args.node_limit)
            if found is None:
                undecided.append(n)
            elif pred and not found:
                impossible.append(n)
            elif found and not pred:
                necessary_bad.append(n)
            elif found:
                built.append(n)
        print(f"j={j}: exists {built}; congruence holds but none exist {impossible}; "
              f"undecided {undecided}; exist against the congruence {necessary_bad}")


if __name__ == "__main__":
    main()
