"""Command line interface.  Every report is a sequence of ``key: value`` lines."""

from __future__ import annotations

import argparse
import sys

from .invariants import (
    CASES,
    PresentationError,
    beta,
    beta_polynomial,
    eta1,
    normal_form,
    read_presentation,
    rochlin_terms,
    structure,
    y2_equivalent,
)
from .quadforms import QForm
from .selftest import SelftestConfig, run_selftest
from .symplectic import GenusMismatch

EXIT_OK = 0
EXIT_DIFFERENT = 1
EXIT_INPUT = 2


class InputError(Exception):
    pass


def _emit(lines):
    for line in lines:
        print(line)


def _load(path):
    try:
        return read_presentation(path)
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None
    except PresentationError as e:
        raise InputError(f"{path}: {e}") from None


def _form(m, bits: str) -> QForm:
    try:
        return QForm.parse(m.genus, bits)
    except ValueError as e:
        raise InputError(f"form {bits!r}: {e}") from None


def _suffix(m) -> str:
    return " mod S" if m.case == "closed" else ""


def _header(m) -> list[str]:
    return [f"genus: {m.genus}", f"case: {m.case}", f"terms: {len(m.expr)}"]


def cmd_structure(args) -> int:
    rep = structure(args.genus, args.case)
    _emit(rep.lines())
    return EXIT_OK if rep.agree else EXIT_DIFFERENT


def cmd_normalize(args) -> int:
    m = _load(args.file)
    nf = normal_form(m)
    v = nf.representative if m.case == "closed" else nf
    lines = _header(m)
    lines.append(f"wedge: {v.u}{_suffix(m)}")
    lines.append(f"boolean: {v.f}{_suffix(m)}")
    if m.case == "closed":
        lines.append(f"class: {' '.join(map(str, nf.key)) or '-'}")
        lines.append("representative: yes")
    _emit(lines)
    return EXIT_OK


def cmd_eta(args) -> int:
    m = _load(args.file)
    lines = _header(m)
    lines.append(f"eta1: {eta1(m)}{_suffix(m)}")
    if m.case == "closed":
        lines.append("representative: yes")
    _emit(lines)
    return EXIT_OK


def cmd_beta(args) -> int:
    m = _load(args.file)
    f = beta(m)
    lines = _header(m)
    lines.append(f"beta: {f}{_suffix(m)}")
    if m.case == "closed":
        lines.append("representative: yes")
    lines.append(f"degree: {f.degree}")
    if args.form is not None:
        q = _form(m, args.form)
        lines.append(f"form: {q}")
        lines.append(f"value: {f(q)}")
    _emit(lines)
    return EXIT_OK


def cmd_rochlin(args) -> int:
    m = _load(args.file)
    q = _form(m, args.form)
    lines = _header(m)
    lines.append(f"form: {q}")
    total = 0
    for i, (c, labels, d) in enumerate(rochlin_terms(m, q), start=1):
        lines.append(f"term[{i}]: {c:+d} Y {' '.join(map(str, labels))} delta {d}")
        total = (total + d) % 16
    lines.append(f"total: {total}")
    f = beta_polynomial(m.expr)
    lines.append(f"beta_check: {'pass' if (8 * f(q)) % 16 == total else 'FAIL'}")
    _emit(lines)
    return EXIT_OK


def cmd_equivalent(args) -> int:
    m1, m2 = _load(args.file1), _load(args.file2)
    try:
        same, rep = y2_equivalent(m1, m2)
    except (GenusMismatch, ValueError) as e:
        raise InputError(str(e)) from None
    _emit(rep.lines())
    return EXIT_OK if same else EXIT_DIFFERENT


def cmd_selftest(args) -> int:
    rep = run_selftest(SelftestConfig(genus=args.genus, seed=args.seed, samples=args.samples))
    _emit(rep.lines())
    return EXIT_OK if rep.passed else EXIT_DIFFERENT


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hcyl", description="Degree-one invariants of homology cylinders.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("structure", help="invariant factors of the graph group")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--case", choices=CASES, default="boundary")
    s.set_defaults(func=cmd_structure)

    s = sub.add_parser("normalize", help="normal form of a presentation")
    s.add_argument("file")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("eta", help="first Johnson invariant")
    s.add_argument("file")
    s.set_defaults(func=cmd_eta)

    s = sub.add_parser("beta", help="Birman-Craggs invariant")
    s.add_argument("file")
    s.add_argument("--form", help="evaluate at a quadratic form, given as 2g bits")
    s.set_defaults(func=cmd_beta)

    s = sub.add_parser("rochlin", help="per-term Rochlin variations")
    s.add_argument("file")
    s.add_argument("--form", required=True)
    s.set_defaults(func=cmd_rochlin)

    s = sub.add_parser("equivalent", help="decide Y2-equivalence")
    s.add_argument("file1")
    s.add_argument("file2")
    s.set_defaults(func=cmd_equivalent)

    s = sub.add_parser("selftest", help="run the property sweep")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int, default=50)
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    if getattr(args, "genus", 0) is not None and getattr(args, "genus", 0) < 0:
        print("error: genus must be non-negative", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
