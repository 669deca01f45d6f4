"""Command-line entry point: ``cleanring classify | survey | verify``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor

from .abelian import AbelianGroup, cyclic, normalize, parse_group
from .base_rings import CYCLOTOMIC, KINDS, QUADRATIC, RATIONAL, BaseRing, discriminant
from .classifier.first_principles import PreconditionError, classify_first_principles
from .classifier.ledger import UNEXPECTED, DiscrepancyLedger, cross_validate
from .classifier.props import RATIO_OTHER, prop26_cases, prop26_direct, prop32_direct, prop32_item
from .classifier.report import ClassificationReport
from .classifier.theorems import classify_theorem
from .ffpoly import verify_cyclotomic_factorization
from .ntheory import divisors, is_prime, primes_in

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DISAGREE = 3

CSV_COLUMNS = ["base_kind", "base_param", "p", "group", "verdict", "matched_case", "agree"]
AGREE_CELL = {"agree": "yes", "ledgered": "ledgered", "unexpected": "no"}


class UsageError(Exception):
    pass


def parse_int_set(text: str) -> list[int]:
    """``"5"``, ``"1..10"``, ``"-3..3"`` or comma lists of those; sorted, deduplicated."""
    out: set[int] = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ".." in part:
                lo, hi = map(int, part.split("..", 1))
                if hi < lo:
                    raise UsageError(f"empty range {part!r}")
                out.update(range(lo, hi + 1))
            else:
                out.add(int(part))
        except ValueError:
            raise UsageError(f"bad integer range {part!r}") from None
    return sorted(out)


def _base_from_args(args) -> BaseRing:
    if args.p is None:
        raise UsageError("--p is required")
    if args.base == CYCLOTOMIC and args.m is None:
        raise UsageError("--base cyclotomic needs --m")
    if args.base == QUADRATIC and args.d is None:
        raise UsageError("--base quadratic needs --d")
    return BaseRing(args.base, args.p, m=args.m if args.base == CYCLOTOMIC else None,
                    d=args.d if args.base == QUADRATIC else None)


def _load_ledger(args) -> DiscrepancyLedger:
    try:
        return DiscrepancyLedger.load(args.ledger)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read ledger: {exc}") from None


# -- text rendering ------------------------------------------------------------

def render_report(rep: ClassificationReport) -> str:
    lines = [
        f"base:     {rep.base}",
        f"group:    {rep.group}  (invariant factors {list(rep.group.invariant_factors) or '[]'}, exp {rep.group.exponent})",
        f"method:   {rep.method}",
        f"verdict:  {rep.verdict.label}",
    ]
    if rep.matched_case:
        lines.append(f"case:     {rep.matched_case}")
    lines.append("     d  deg_phi  ord_norm  t_d  mu  nu  lambda")
    for w in rep.witnesses:
        lines.append(f"{w.d:>6}  {w.deg_phi:>7}  {w.ord_norm:>8}  {w.max_ideals:>3}  {w.mu:>2}  {w.nu:>2}  {w.lam:>6}")
    lines.extend(f"note:     {n}" for n in rep.notes)
    return "\n".join(lines)


# -- classify ------------------------------------------------------------------

def cmd_classify(args, out) -> int:
    R = _base_from_args(args)
    G = parse_group(args.group)
    if args.method == "theorem":
        rep = classify_theorem(R, G)
        out.write((rep.to_json() if args.format == "json" else render_report(rep)) + "\n")
        return EXIT_OK
    if args.method == "first-principles":
        rep = classify_first_principles(R, G)
        out.write((rep.to_json() if args.format == "json" else render_report(rep)) + "\n")
        return EXIT_OK
    ledger = _load_ledger(args)
    agreement = cross_validate(R, G, ledger)
    if args.format == "json":
        payload = {
            "theorem": agreement.theorem.to_dict(),
            "first_principles": agreement.first_principles.to_dict(),
            "agreement": agreement.to_dict(),
        }
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        out.write(render_report(agreement.theorem) + "\n\n")
        out.write(render_report(agreement.first_principles) + "\n\n")
        if agreement.agree:
            out.write(f"agreement: agree ({agreement.theorem.verdict.label})\n")
        else:
            tag = f"ledgered as {agreement.ledger_id}" if agreement.expected else "unexpected"
            out.write(
                f"agreement: disagree ({tag}); theorem {agreement.theorem.verdict.label}, "
                f"first principles {agreement.first_principles.verdict.label}\n"
            )
    if args.strict and agreement.status == UNEXPECTED:
        return EXIT_DISAGREE
    return EXIT_OK


# -- survey --------------------------------------------------------------------

def _survey_bases(args) -> list[BaseRing]:
    p_values = parse_int_set(args.p)
    primes = [p for p in p_values if is_prime(p) and (p != 2 or args.base == RATIONAL)]
    bases = []
    if args.base == RATIONAL:
        bases = [BaseRing.rational(p) for p in primes]
    elif args.base == CYCLOTOMIC:
        if args.m is None:
            raise UsageError("--base cyclotomic needs --m")
        for m in parse_int_set(args.m):
            if m < 1:
                raise UsageError(f"m must be positive, got {m}")
            bases.extend(BaseRing.cyclotomic(m, p) for p in primes if m % p)
    else:
        if args.d is None:
            raise UsageError("--base quadratic needs --d")
        for d in parse_int_set(args.d):
            try:
                discriminant(d)
            except ValueError:
                continue
            bases.extend(BaseRing.quadratic(d, p) for p in primes)
    return bases


def _survey_groups(args) -> list[AbelianGroup]:
    groups = []
    if args.groups:
        groups.extend(parse_group(g) for g in args.groups.split(";") if g.strip())
    if args.n:
        for n in parse_int_set(args.n):
            if n < 1:
                raise UsageError(f"n must be positive, got {n}")
            groups.append(cyclic(n))
            if args.square and n > 1:
                groups.append(normalize([n, n]))
    unique = {G.invariant_factors: G for G in groups}
    return [unique[k] for k in sorted(unique)]


def _row_key(R: BaseRing, G: AbelianGroup):
    return (R.kind, R.param if R.param is not None else 0, R.p, G.invariant_factors)


def admissible_triples(args) -> list[tuple[BaseRing, AbelianGroup]]:
    bases = _survey_bases(args)
    groups = _survey_groups(args)
    triples = [(R, G) for R in bases for G in groups if G.exponent % R.p]
    return sorted(triples, key=lambda t: _row_key(*t))


def _survey_row(task) -> dict:
    R, G, ledger = task
    a = cross_validate(R, G, ledger)
    return {
        "base_kind": R.kind,
        "base_param": "" if R.param is None else str(R.param),
        "p": str(R.p),
        "group": ",".join(map(str, G.invariant_factors)) or "1",
        "verdict": a.first_principles.verdict.label,
        "matched_case": a.theorem.matched_case or "",
        "agree": AGREE_CELL[a.status],
        "theorem_verdict": a.theorem.verdict.label,
        "ledger_id": a.ledger_id or "",
    }


def run_tasks(func, tasks, jobs: int):
    """Map in input order; with jobs > 1 fan out to a process pool."""
    if jobs <= 1 or len(tasks) < 2:
        return [func(t) for t in tasks]
    chunk = max(1, len(tasks) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, tasks, chunksize=chunk))


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def csv_to_rows(text: str) -> list[dict]:
    return list(csv.DictReader(io.StringIO(text)))


def rows_to_table(rows: list[dict]) -> str:
    cols = CSV_COLUMNS
    widths = {c: max(len(c), *(len(r[c]) for r in rows)) for c in cols}
    lines = ["  ".join(c.ljust(widths[c]) for c in cols)]
    lines.append("  ".join("-" * widths[c] for c in cols))
    lines.extend("  ".join(r[c].ljust(widths[c]) for c in cols) for r in rows)
    return "\n".join(lines) + "\n"


def cmd_survey(args, out) -> int:
    triples = admissible_triples(args)
    if not triples:
        raise UsageError("empty survey range: no admissible (base, p, group) triples")
    ledger = _load_ledger(args)
    rows = run_tasks(_survey_row, [(R, G, ledger) for R, G in triples], args.jobs)
    if args.format == "csv":
        out.write(rows_to_csv(rows))
    elif args.format == "json":
        out.write(json.dumps(rows, indent=2, sort_keys=True) + "\n")
    else:
        out.write(rows_to_table(rows))
    return EXIT_OK


# -- verify --------------------------------------------------------------------

def _oracle_task(dp):
    d, p = dp
    return verify_cyclotomic_factorization(d, p).to_dict()


def _verify_oracle(args, out) -> int:
    tasks = [(d, p) for d in range(1, args.d_max + 1) for p in primes_in(3, args.p_max) if d % p]
    records = run_tasks(_oracle_task, tasks, args.jobs)
    failures = [r for r in records if not r["pass"]]
    out.write(f"oracle: {len(records) - len(failures)} passed, {len(failures)} failed\n")
    for r in failures:
        out.write(f"  FAIL d={r['d']} p={r['p']} expected ({r['expected_degree']}, {r['expected_count']}) "
                  f"observed {r['observed']}\n")
    return EXIT_FAIL if failures else EXIT_OK


def _prop26_task(np_):
    n, p = np_
    direct = prop26_direct(n, p)
    bad = []
    for k in (1, 2, 4):
        holds, label = prop26_cases(n, p, k)
        if holds != (direct == k):
            bad.append((n, p, k, holds, label, direct))
    return bad


def _prop32_task(task):
    n, p, corrected = task
    bad = []
    for item in range(1, 6):
        holds, label = prop32_item(n, p, item, corrected=corrected)
        if holds != prop32_direct(n, p, item):
            bad.append((n, p, item, holds, label))
    return bad


def _np_pairs(args):
    return [(n, p) for p in primes_in(3, args.p_max) for n in range(1, args.n_max + 1) if n % p]


def _verify_prop26(args, out) -> int:
    pairs = _np_pairs(args)
    failures = [f for chunk in run_tasks(_prop26_task, pairs, args.jobs) for f in chunk]
    out.write(f"prop26: {3 * len(pairs) - len(failures)} passed, {len(failures)} failed\n")
    for n, p, k, holds, label, direct in failures:
        ratio = direct if direct != RATIO_OTHER else "other"
        out.write(f"  FAIL n={n} p={p} k={k}: case list {holds} ({label}), direct ratio {ratio}\n")
    return EXIT_FAIL if failures else EXIT_OK


def _verify_prop32(args, out) -> int:
    tasks = [(n, p, args.corrected) for n, p in _np_pairs(args)]
    failures = [f for chunk in run_tasks(_prop32_task, tasks, args.jobs) for f in chunk]
    tag = " (corrected item 4)" if args.corrected else ""
    out.write(f"prop32{tag}: {5 * len(tasks) - len(failures)} passed, {len(failures)} failed\n")
    for n, p, item, holds, label in failures:
        out.write(f"  FAIL n={n} p={p} item={item}: case list {holds} ({label}), direct {not holds}\n")
    return EXIT_FAIL if failures else EXIT_OK


def theorem_sweep_inputs(kind: str, args) -> list[tuple[BaseRing, AbelianGroup]]:
    out = []
    primes = primes_in(3, args.p_max)
    if kind == RATIONAL:
        for p in primes:
            for n in range(1, args.exp_max + 1):
                if n % p:
                    groups = {normalize([d, n]).invariant_factors: normalize([d, n]) for d in divisors(n)}
                    out.extend((BaseRing.rational(p), groups[k]) for k in sorted(groups))
    elif kind == CYCLOTOMIC:
        for m in range(1, args.m_max + 1):
            for p in primes:
                if m % p == 0:
                    continue
                for n in range(1, args.exp_max + 1):
                    if n % p:
                        R = BaseRing.cyclotomic(m, p)
                        out.append((R, cyclic(n)))
                        if n > 1:
                            out.append((R, normalize([n, n])))
    else:
        for d in range(-args.d_max, args.d_max + 1):
            try:
                discriminant(d)
            except ValueError:
                continue
            for p in primes:
                for e in range(2, args.exp_max + 1):
                    if e % p:
                        R = BaseRing.quadratic(d, p)
                        out.extend([(R, cyclic(e)), (R, normalize([e, e]))])
    return out


def _theorem_task(task):
    R, G, ledger = task
    a = cross_validate(R, G, ledger)
    return a.status, a.ledger_id, a.to_dict()


def _verify_theorems(args, out) -> int:
    ledger = _load_ledger(args)
    kinds = KINDS if args.base == "all" else (args.base,)
    rc = EXIT_OK
    for kind in kinds:
        tasks = [(R, G, ledger) for R, G in theorem_sweep_inputs(kind, args)]
        results = run_tasks(_theorem_task, tasks, args.jobs)
        status = Counter(s for s, _, _ in results)
        out.write(
            f"theorems[{kind}]: {len(results)} inputs, {status['agree']} agree, "
            f"{status['ledgered']} ledgered, {status['unexpected']} unexpected\n"
        )
        by_id = defaultdict(list)
        for s, lid, rec in results:
            if s == "ledgered":
                by_id[lid].append(rec)
        for lid in sorted(by_id):
            first = by_id[lid][0]
            out.write(f"  ledgered {lid}: {len(by_id[lid])} (e.g. {_describe(first)})\n")
            if args.verbose:
                out.writelines(f"    {_describe(r)}\n" for r in by_id[lid][1:])
        for s, _, rec in results:
            if s == UNEXPECTED:
                out.write(f"  UNEXPECTED {_describe(rec)}\n")
        if status["unexpected"]:
            rc = EXIT_FAIL
    return rc


def _describe(rec: dict) -> str:
    base = rec["base"]
    param = {"cyclotomic": f" m={base.get('m')}", "quadratic": f" d={base.get('d')}"}.get(base["kind"], "")
    group = "+".join(f"C{f}" for f in rec["group"]) or "C1"
    return (f"{base['kind']}{param} p={base['p']} {group}: theorem {rec['theorem_verdict']} "
            f"[{rec['matched_case']}] vs first principles {rec['first_principles_verdict']}")


def cmd_verify(args, out) -> int:
    return {
        "oracle": _verify_oracle,
        "prop26": _verify_prop26,
        "prop32": _verify_prop32,
        "theorems": _verify_theorems,
    }[args.which](args, out)


# -- argument parsing ----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cleanring", description="Cleanness of group rings O_p[G].")
    parser.add_argument("--ledger", help="discrepancy ledger JSON (default: $CLEANRING_LEDGER or bundled)")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify one group ring")
    c.add_argument("--base", choices=KINDS, default=RATIONAL)
    c.add_argument("--m", type=int)
    c.add_argument("--d", type=int)
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--group", required=True, help='cyclic orders, e.g. "4,6" for C4+C6')
    c.add_argument("--method", choices=["theorem", "first-principles", "both"], default="theorem")
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.add_argument("--strict", action="store_true", help="exit 3 on an unledgered disagreement")
    c.add_argument("--ledger", default=argparse.SUPPRESS)

    s = sub.add_parser("survey", help="classify every admissible triple in a range")
    s.add_argument("--base", choices=KINDS, default=RATIONAL)
    s.add_argument("--m", help="m values, e.g. 1..16")
    s.add_argument("--d", help="d values, e.g. -30..30 (invalid d are skipped)")
    s.add_argument("--p", required=True, help="p values, e.g. 3..50 (non-primes skipped)")
    s.add_argument("--n", help="exponents n for groups C_n, e.g. 1..10")
    s.add_argument("--square", action="store_true", help="also include C_n+C_n")
    s.add_argument("--groups", help='explicit groups separated by ";", e.g. "4;2,6"')
    s.add_argument("--format", choices=["table", "json", "csv"], default="table")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--ledger", default=argparse.SUPPRESS)

    v = sub.add_parser("verify", help="run a verification sweep")
    v.add_argument("which", choices=["oracle", "prop26", "prop32", "theorems"])
    v.add_argument("--d-max", type=int, default=None, help="oracle: max d; theorems: max |d|")
    v.add_argument("--p-max", type=int, default=None)
    v.add_argument("--n-max", type=int, default=300)
    v.add_argument("--m-max", type=int, default=16)
    v.add_argument("--exp-max", type=int, default=None)
    v.add_argument("--base", choices=[*KINDS, "all"], default="all")
    v.add_argument("--corrected", action="store_true", help="prop32: use the amended item 4 list")
    v.add_argument("--verbose", action="store_true")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--ledger", default=argparse.SUPPRESS)
    return parser


_VERIFY_DEFAULTS = {
    "oracle": {"d_max": 60, "p_max": 50},
    "prop26": {"p_max": 100},
    "prop32": {"p_max": 100},
    "theorems": {"d_max": 30, "p_max": 60, "exp_max": 60},
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "ledger", None) is None:
        args.ledger = None
    if args.command == "verify":
        for key, value in _VERIFY_DEFAULTS[args.which].items():
            if getattr(args, key) is None:
                setattr(args, key, value)
    handler = {"classify": cmd_classify, "survey": cmd_survey, "verify": cmd_verify}[args.command]
    try:
        return handler(args, out)
    except (UsageError, PreconditionError, ValueError) as exc:
        print(f"cleanring: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
