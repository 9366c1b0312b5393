"""Command line interface: tables, sequence prefixes, verification suites."""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import dsr, minpoly, modd, numthy
from .chebyshev import identity_suite
from .polycore import MINUS, render

FORMATS = ("text", "csv", "json", "dot")


class UnknownSequence(KeyError):
    pass


@dataclass
class Output:
    records: list
    text: list[str]
    csv_header: list[str] = field(default_factory=list)
    csv_rows: list[list] = field(default_factory=list)
    dot: list[str] | None = None
    exit_code: int = 0


def _ulist(values) -> str:
    """``[1, −2, 3]`` with the typographic minus sign."""
    return "[" + ", ".join(str(v).replace("-", MINUS) for v in values) + "]"


def _ulist2(rows) -> str:
    return "[" + ", ".join(_ulist(r) for r in rows) + "]"


def parse_range(text: str) -> range:
    m = re.fullmatch(r"\s*(\d+)\s*\.\.\s*(\d+)\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"range must look like A..B, got {text!r}")
    a, b = int(m.group(1)), int(m.group(2))
    if a < 1 or b < a:
        raise argparse.ArgumentTypeError(f"range needs 1 <= A <= B, got {text!r}")
    return range(a, b + 1)


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _ns(args, default: range | None = None, minimum: int = 1) -> range:
    if args.n is not None:
        ns = range(args.n, args.n + 1)
    elif args.range is not None:
        ns = args.range
    elif default is not None:
        ns = default
    else:
        raise SystemExit(_usage_error(args, "give --n N or --range A..B"))
    if ns.start < minimum:
        raise SystemExit(_usage_error(args, f"this command needs n >= {minimum}"))
    return ns


def _usage_error(args, message: str) -> int:
    args.parser.print_usage(sys.stderr)
    print(f"{args.parser.prog}: error: {message}", file=sys.stderr)
    return 2


# table commands


def cmd_minpoly(ns: Sequence[int], coeffs: bool = False) -> Output:
    out = Output([], [], ["n", "coefficients"])
    for n in ns:
        p = minpoly.minimal_poly(n)
        cs = list(p.coeffs)
        out.records.append({"n": n, "coefficients": cs})
        out.text.append(f"{n}\t{_ulist(cs) if coeffs else render(p)}")
        out.csv_rows.append([n, " ".join(map(str, cs))])
    return out


def cmd_zeros(ns: Sequence[int]) -> Output:
    out = Output([], [], ["n", "index", "coordinates"])
    for n in ns:
        table = minpoly.zeros_power_basis(n)
        rows = table.stripped()
        out.records.append({"n": n, "indices": [m for m, _ in table.rows], "rows": rows})
        out.text.append(f"{n}\t{_ulist2(rows)}")
        for (m, _), r in zip(table.rows, rows):
            out.csv_rows.append([n, m, " ".join(map(str, r))])
    return out


def _plain(values) -> list:
    return [int(v) if getattr(v, "denominator", 1) == 1 else str(v) for v in values]


def cmd_dsr(ns: Sequence[int]) -> Output:
    out = Output([], [], ["n", "entry", "kind", "coefficients"])
    for n in ns:
        t = dsr.reduced_algebra_table(n)
        rec = {
            "n": n,
            "delta": t.delta,
            "basis": [dsr.label(j, n) for j in t.basis],
            "products": [{"m": m, "k": k, "coefficients": _plain(c)} for m, k, c in t.products],
            "dependencies": [{"index": j, "coefficients": _plain(c)} for j, c in t.dependencies],
            "basis_values": [{"index": j, "coefficients": list(c)} for j, c in t.basis_values],
        }
        out.records.append(rec)
        out.text.extend(t.text_lines())
        for m, k, c in t.products:
            out.csv_rows.append([n, dsr.product_label(m, k, n), "product", " ".join(map(str, c))])
        for j, c in t.dependencies:
            out.csv_rows.append([n, dsr.label(j, n), "dependency", " ".join(map(str, c))])
    return out


def cycles_dot(cs: modd.CycleStructure) -> str:
    """One undirected graph; every cycle is a polygon through the identity."""
    lines = [f"graph modd_{cs.n} {{", '  "1" [shape=doublecircle];']
    for x in sorted(cs.square_roots):
        lines.append(f'  "{x}" [style=bold];')
    for cycle in cs.cycles:
        if len(cycle) == 1:
            continue
        path = ["1", *map(str, cycle)]
        lines.append("  " + " -- ".join(f'"{v}"' for v in path) + ";")
    lines.append("}")
    return "\n".join(lines)


def cmd_cycles(ns: Sequence[int]) -> Output:
    out = Output([], [], ["n", "cycle", "elements"], dot=[])
    for n in ns:
        cs = modd.cycle_structure(modd.ModdContext(n))
        out.records.append({
            "n": n,
            "cycles": [list(c) for c in cs.cycles],
            "square_roots": sorted(cs.square_roots),
            "signature": [list(s) for s in cs.signature],
        })
        out.text.append(f"{n}\t{cs.text()}")
        for i, c in enumerate(cs.cycles, start=1):
            out.csv_rows.append([n, i, " ".join(map(str, c))])
        out.dot.append(cycles_dot(cs))
    return out


def cmd_galois(ns: Sequence[int], which: str) -> Output:
    out = Output([], [], ["n", "order", "signature", "cycles", "group"])
    for row in modd.non_cyclic_rows(ns, which):
        out.records.append({"n": row.n, "order": row.order, "signature": row.signature,
                            "cycles": row.cycle_count, "group": row.group})
        out.text.append("\t".join(map(str, row.as_tuple())))
        out.csv_rows.append(list(row.as_tuple()))
    return out


# sequences


def _over_primes_one_mod_four(attr: str) -> Callable[[int, int | None], list[int]]:
    def make(count: int, _n: int | None) -> list[int]:
        sols = [modd.solve_nice_congruence(p) for p in modd.primes_one_mod_four(count)]
        return [getattr(s, attr) for s in sols]
    return make


def _flatten(rows, count: int) -> list[int]:
    out = []
    for r in rows:
        out.extend(r)
        if len(out) >= count:
            break
    return out[:count]


def _orders(count: int, _n) -> list[int]:
    n, out = 1, []
    while len(out) < count:
        out.extend(modd.modd_order_row(n))
        n += 1
    return out[:count]


def _flist(count: int, n: int | None) -> list[int]:
    if n is not None:
        return list(modd.fundamental_sets(n).f_list)[:count]
    out, limit = [], 15
    while len(out) < count:
        limit *= 2
        out = _flatten((modd.fundamental_sets(m).f_list for m in modd.odd_squarefree_composites(limit)), count)
    return out


def _ostar(count: int, n: int | None) -> list[int]:
    n = 7 if n is None else n
    return [modd.reduced_odd_sequence(n, k) for k in range(1, count + 1)]


SEQUENCES: dict[str, tuple[str, Callable[[int, int | None], list[int]]]] = {
    "delta": ("degree of C(n, x), n >= 1", lambda c, _: [numthy.delta(n) for n in range(1, c + 1)]),
    "dplus": ("positive zeros of C(n, x)", lambda c, _: [minpoly.zero_sign_counts(n)[0] for n in range(1, c + 1)]),
    "dminus": ("negative zeros of C(n, x)", lambda c, _: [minpoly.zero_sign_counts(n)[1] for n in range(1, c + 1)]),
    "discr": ("discriminant of C(n, x)", lambda c, _: [minpoly.discriminant_of(n) for n in range(1, c + 1)]),
    "qdisc": ("n^delta(n) / Discr C(n, x)", lambda c, _: [int(minpoly.q_value(n)) for n in range(1, c + 1)]),
    "primroot": ("smallest Modd n primitive root, 0 if none",
                 lambda c, _: [modd.primitive_root(modd.ModdContext(n)) or 0 for n in range(1, c + 1)]),
    "K": ("smallest root of 2X^2+2X+1 mod p, p = 1 mod 4", _over_primes_one_mod_four("K")),
    "K2": ("companion root p - 1 - K", _over_primes_one_mod_four("K2")),
    "shat": ("nontrivial square root of 1 Modd p, p = 1 mod 4", _over_primes_one_mod_four("s_hat")),
    "ostar": ("positive odd numbers coprime to odd --n (default 7)", _ostar),
    "orders": ("Modd n orders of M(n), rows n = 1, 2, ... flattened", _orders),
    "flist": ("F(n) for --n, else rows for odd squarefree composites flattened", _flist),
}


def cmd_seq(name: str, count: int, n: int | None = None) -> Output:
    if name not in SEQUENCES:
        raise UnknownSequence(name)
    terms = SEQUENCES[name][1](count, n)
    return Output([{"name": name, "terms": terms}], [_ulist(terms)], ["k", name],
                  [[k, t] for k, t in enumerate(terms, start=1)])


# verification suites


@dataclass
class Check:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    def add(self, ok: bool, detail) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(detail)

    @property
    def passed(self) -> bool:
        return not self.failures


def _from_report(name: str, report) -> Check:
    return Check(name, report.checked, list(report.failures))


def suite_chebyshev(n_max: int) -> list[Check]:
    report = identity_suite(min(n_max, 40))
    return [Check(name, report.checked[name], report.failures.get(name, [])) for name in report.checked]


def suite_minpoly(n_max: int) -> list[Check]:
    checks = {k: Check(k) for k in ("route_agreement", "zero_rows_vanish", "zero_sign_counts",
                                    "that_product", "q_product", "that_congruence",
                                    "s_factorization")}
    for n in range(1, n_max + 1):
        if n >= 3:
            checks["route_agreement"].add(not minpoly.route_agreement([n]), n)
        checks["zero_rows_vanish"].add(minpoly.zero_rows_vanish(n), n)
        checks["zero_sign_counts"].add(minpoly.zero_sign_counts(n) == minpoly.zero_sign_counts_oracle(n), n)
        checks["that_product"].add(minpoly.that_product_check(n), n)
        checks["q_product"].add(minpoly.q_product_check(n), n)
        if n >= 2:
            checks["s_factorization"].add(minpoly.s_factorization_check(n), n)
        if n <= 40:
            for k in range(0, 10 * n + 1):
                checks["that_congruence"].add(minpoly.that_congruence_check(n, k), (n, k))
    out = list(checks.values())
    if n_max >= 2:
        out += [_from_report(f"absolute_term_{k}", r) for k, r in minpoly.absolute_term_suite(n_max).items()]
    return out


def suite_dsr(n_max: int) -> list[Check]:
    dpf, rank, deps, rec = Check("dpf"), Check("dsr_rank"), Check("dependency_count"), Check("difference_recurrence")
    for n in range(4, n_max + 1):
        d = numthy.delta(n)
        r = dsr.dsr_rank(n)
        rank.add(r == d, n)
        deps.add(n // 2 - r == n // 2 - d, n)
        for m in range(2, n // 2 + 1):
            for k in range(m, n // 2 + 1):
                dpf.add(dsr.dpf_verify(n, m, k), (n, m, k))
                rec.add(dsr.difference_recurrence_holds(n, m, k), (n, m, k))
    return [dpf, rank, deps, rec]


def suite_modd(n_max: int) -> list[Check]:
    names = ("multiplicative", "closure", "fermat_analog", "order_divides_delta", "lemmas",
             "reduced_odd_sequence", "wilson_analog", "sqrt_even_cyclic", "squarefree_delta_cyclic",
             "primitive_root_count", "galois_action")
    checks = {k: Check(k) for k in names}
    for n in range(1, n_max + 1):
        ctx = modd.ModdContext(n)
        if n <= 30:
            span = range(-3 * n, 3 * n + 1)
            checks["multiplicative"].add(
                all(ctx.reduce(k * l) == ctx.reduce(ctx.reduce(k) * ctx.reduce(l)) for k in span for l in span), n)
            reports = modd.modd_lemma_suite(ctx, span)
            checks["lemmas"].add(all(r.passed for r in reports.values()), n)
        Mset = set(ctx.M)
        checks["closure"].add(all(ctx.canonical(a * b) in Mset for a in ctx.M for b in ctx.M), n)
        orders = [1 if n == 1 else modd.element_order(ctx, a) for a in ctx.M]
        checks["fermat_analog"].add(all(ctx.is_one(ctx.power(a, ctx.delta)) for a in ctx.M), n)
        checks["order_divides_delta"].add(all(ctx.delta % h == 0 for h in orders), n)
        kind = modd.abelian_type(ctx)
        if numthy.mobius(ctx.delta) != 0:
            checks["squarefree_delta_cyclic"].add(kind.is_cyclic, n)
        if kind.is_cyclic and n > 1:
            checks["primitive_root_count"].add(
                modd.primitive_root_count(ctx) == numthy.euler_phi(ctx.delta), n)
        if n % 2 == 0 and n >= 4 and kind.is_cyclic:
            checks["sqrt_even_cyclic"].add(modd.nontrivial_sqrt_one(ctx) == n - 1, n)
        if n % 2 and n >= 3 and n <= 105:
            seq = [modd.reduced_odd_sequence(n, k) for k in range(1, 6 * ctx.delta + 1)]
            checks["reduced_odd_sequence"].add(seq == modd.reduced_odd_enumeration(n, len(seq)), n)
        if numthy.is_prime(n) and n > 2:
            checks["wilson_analog"].add(modd.wilson_analog_check(n), n)
        if n <= 30:
            checks["galois_action"].add(
                all(modd.galois_automorphism_check(n, j, k) for j in range(ctx.delta) for k in (1, 2, 3)), n)
    return list(checks.values())


def suite_appendix(n_max: int) -> list[Check]:
    a, b = Check("coprime_sum"), Check("cosine_product")
    for n in range(2, n_max + 1):
        a.add(numthy.coprime_sum_identity_check(n), n)
        b.add(numthy.cosine_product_check(n), n)
    return [a, b]


SUITES: dict[str, tuple[int, Callable[[int], list[Check]]]] = {
    "chebyshev": (24, suite_chebyshev),
    "minpoly": (60, suite_minpoly),
    "dsr": (40, suite_dsr),
    "modd": (100, suite_modd),
    "appendix": (1000, suite_appendix),
}


def cmd_verify(suite: str, n_max: int | None = None) -> Output:
    if suite == "conjecture":
        n_max = n_max or 100
        results = [minpoly.discriminant_conjecture_check(n) for n in range(1, n_max + 1)]
        agree = sum(r.agrees for r in results)
        records = [{"n": r.n, "q": str(r.q_value),
                    "conjecture": None if r.conjecture_value is None else str(r.conjecture_value),
                    "agrees": r.agrees} for r in results]
        text = [f"agrees: {agree}/{len(results)}"]
        text += [f"disagrees at n = {r.n}: q = {r.q_value}, conjecture = {r.conjecture_value}"
                 for r in results if not r.agrees]
        return Output(records, text, ["n", "q", "conjecture", "agrees"],
                      [[r["n"], r["q"], r["conjecture"], r["agrees"]] for r in records])
    if suite not in SUITES:
        raise KeyError(suite)
    default, run = SUITES[suite]
    checks = run(n_max or default)
    records = [{"check": c.name, "checked": c.checked, "passed": c.passed,
                "failures": [repr(f) for f in c.failures[:10]]} for c in checks]
    text = []
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        line = f"{status} {suite}.{c.name} ({c.checked} checked)"
        if not c.passed:
            line += f": {len(c.failures)} failures, first {c.failures[:3]!r}"
        text.append(line)
    code = 0 if all(c.passed for c in checks) else 1
    return Output(records, text, ["check", "checked", "passed"],
                  [[r["check"], r["checked"], r["passed"]] for r in records], exit_code=code)


# argument handling


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    where = common.add_mutually_exclusive_group()
    where.add_argument("--n", type=_positive, help="single index n")
    where.add_argument("--range", type=parse_range, help="inclusive range A..B")
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--out", help="write output to PATH instead of stdout")
    common.add_argument("--seed", help=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="chebfield",
                                     description="Exact tables for 2cos(pi/n), its field and Galois group.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("minpoly", parents=[common], help="minimal polynomials C(n, x)")
    p.add_argument("--coeffs", action="store_true", help="rising-power coefficient rows")
    sub.add_parser("zeros", parents=[common], help="zeros of C(n, x) in the power basis")
    sub.add_parser("dsr", parents=[common], help="reduced diagonal/side-ratio algebra, n >= 3")
    sub.add_parser("cycles", parents=[common], help="maximal cycles of the Modd n group")
    p = sub.add_parser("galois", parents=[common], help="non-cyclic groups (default range 1..100)")
    p.add_argument("which", choices=("modd", "modn"))
    p = sub.add_parser("seq", parents=[common], help="sequence prefixes")
    p.add_argument("name", help="one of: " + ", ".join(SEQUENCES))
    p.add_argument("count", nargs="?", type=_positive, default=20)
    p = sub.add_parser("verify", parents=[common], help="verification suites")
    p.add_argument("suite", choices=(*SUITES, "conjecture"))
    p.add_argument("n_max", nargs="?", type=_positive)
    return parser


def _emit(out: Output, fmt: str) -> str:
    if fmt == "text":
        return "\n".join(out.text) + "\n"
    if fmt == "json":
        return json.dumps(out.records, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(out.csv_header)
        writer.writerows(out.csv_rows)
        return buf.getvalue()
    return "\n\n".join(out.dot) + "\n"


def run(argv: Sequence[str] | None = None) -> tuple[int, str, str | None]:
    parser = build_parser()
    args = parser.parse_args(argv)
    sub_parser = parser._subparsers._group_actions[0].choices[args.command]
    args.parser = sub_parser
    if args.seed is not None:
        return _usage_error(args, "--seed is not accepted: every computation is deterministic"), "", None
    if args.format == "dot" and args.command != "cycles":
        return _usage_error(args, "--format dot is only available for the cycles command"), "", None

    if args.command == "minpoly":
        out = cmd_minpoly(_ns(args), args.coeffs)
    elif args.command == "zeros":
        out = cmd_zeros(_ns(args))
    elif args.command == "dsr":
        out = cmd_dsr(_ns(args, minimum=3))
    elif args.command == "cycles":
        out = cmd_cycles(_ns(args))
    elif args.command == "galois":
        out = cmd_galois(_ns(args, default=range(1, 101)), args.which)
    elif args.command == "seq":
        if args.name not in SEQUENCES:
            return _usage_error(args, f"unknown sequence {args.name!r}; choose from {', '.join(SEQUENCES)}"), "", None
        try:
            out = cmd_seq(args.name, args.count, args.n)
        except modd.OddOnly as exc:
            return _usage_error(args, str(exc)), "", None
    else:
        out = cmd_verify(args.suite, args.n_max)
    return out.exit_code, _emit(out, args.format), args.out


def main(argv: Sequence[str] | None = None) -> int:
    try:
        code, text, path = run(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
