"""Print the three worked-example tables and the data behind them."""

from ffinterleave.families import DicksonParams, dickson_interleaver, monomial_interleaver
from ffinterleave.gf import build_field
from ffinterleave.perm import cycle_structure, two_row
from ffinterleave.skolem import SkolemSequence, modify, skolem_interleaver, to_text, validate

HOOKED_6 = (2, 5, 2, 6, 1, 1, 5, 3, 4, 6, 3, 0, 4)


def show(title, perm, base):
    cs = cycle_structure(perm)
    print(f"== {title}")
    print(two_row(perm, base), end="")
    print(f"census {cs}, fixed {list(cs.fixed_points)}\n")


def main():
    F13 = build_field(13)
    show("x^11 over F13", monomial_interleaver(F13, 11), 0)

    F11 = build_field(11)
    show("D19(x,1) over F11", dickson_interleaver(F11, DicksonParams(19, 1)), 0)

    seq = SkolemSequence("hooked", 6, HOOKED_6, 12)
    print(to_text(seq), end="")
    print("valid:", validate(seq)[1])
    mod = modify(seq)
    print("modified:", " ".join(map(str, mod.entries)))
    show("hooked Skolem interleaver, order 6", skolem_interleaver(mod), 1)


if __name__ == "__main__":
    main()
