"""Rochlin variations of a presentation at every quadratic form, next to 8 * beta(q)."""

import argparse

from hcyl.invariants import beta_polynomial, read_presentation, rochlin_terms
from hcyl.quadforms import arf_value, enumerate_forms


def main():
    p = argparse.ArgumentParser()
    p.add_argument("file")
    m = read_presentation(p.parse_args().file)
    f = beta_polynomial(m.expr)
    print(f"beta = {f}")
    print(f"{'q':<{2 * m.genus + 1}} arf  sum_delta  8*beta(q)")
    for q in enumerate_forms(m.genus):
        total = sum(d for _, _, d in rochlin_terms(m, q)) % 16
        print(f"{str(q):<{2 * m.genus + 1}} {arf_value(q):>3}  {total:>9}  {8 * f(q) % 16:>9}")


if __name__ == "__main__":
    main()
