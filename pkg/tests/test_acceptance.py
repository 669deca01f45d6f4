"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` to see the summary lines.
"""

import io
import json
import time

import pytest

from cleanring.abelian import cyclic, normalize
from cleanring.base_rings import BaseRing
from cleanring.classifier import (
    UNEXPECTED,
    CleannessClass,
    DiscrepancyLedger,
    classify_first_principles,
    classify_theorem,
    cross_validate,
    prop26_cases,
    prop26_direct,
    prop32_direct,
    prop32_item,
)
from cleanring.cli import EXIT_OK, EXIT_USAGE, admissible_triples, build_parser, csv_to_rows, main, rows_to_csv
from cleanring.ffpoly import verify_cyclotomic_factorization
from cleanring.ntheory import divisors, is_squarefree, mult_order, primes_in

C = CleannessClass


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
        return ok
    return emit


def np_pairs(n_max, p_max):
    for p in primes_in(3, p_max):
        for n in range(1, n_max + 1):
            if n % p:
                yield n, p


def test_criterion_01_oracle_sweep(report):
    t0 = time.perf_counter()
    failures = [
        (d, p) for p in primes_in(3, 50) for d in range(1, 61)
        if d % p and not verify_cyclotomic_factorization(d, p).passed
    ]
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60
    report(1, ok, f"oracle sweep d<=60, p<=50: {len(failures)} failures, {elapsed:.1f}s")
    assert ok, failures[:10]


def test_criterion_02_two_six_equivalence(report):
    t0 = time.perf_counter()
    bad = []
    for n, p in np_pairs(300, 100):
        k_true = prop26_direct(n, p)
        for k in (1, 2, 4):
            if prop26_cases(n, p, k)[0] != (k_true == k):
                bad.append((n, p, k))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 30
    report(2, ok, f"order-ratio case lists n<=300, p<=100: {len(bad)} mismatches, {elapsed:.1f}s")
    assert ok, bad[:10]


def item_mismatches(corrected=False):
    bad = []
    for n, p in np_pairs(300, 100):
        for item in range(1, 6):
            holds, label = prop32_item(n, p, item, corrected=corrected)
            if holds != prop32_direct(n, p, item):
                bad.append((n, p, item, label))
    return bad


@pytest.mark.xfail(strict=True, reason="item 4 list as stated over-accepts at 51 points; see decisions ledger")
def test_criterion_03_three_two_equivalence(report):
    bad = item_mismatches()
    by_label = {}
    for *_, label in bad:
        by_label[label] = by_label.get(label, 0) + 1
    report(3, not bad, f"divisor-quantified items 1-5 as stated: {len(bad)} mismatches {by_label}; "
           f"amended item 4: {len(item_mismatches(corrected=True))} mismatches")
    assert not bad


def test_criterion_04_rational(report):
    bad = []
    count = 0
    for n, p in np_pairs(200, 100):
        R = BaseRing.rational(p)
        for G in {cyclic(n), *(normalize([d, n]) for d in divisors(n))}:
            count += 1
            if classify_theorem(R, G).verdict != classify_first_principles(R, G).verdict:
                bad.append((p, G))
    report(4, not bad, f"rational lists vs block count over {count} inputs: {len(bad)} mismatches")
    assert not bad, bad[:10]


def sweep(inputs):
    ledger = DiscrepancyLedger.load()
    total, ledgered, unexpected = 0, {}, []
    for R, G in inputs:
        a = cross_validate(R, G, ledger)
        total += 1
        if a.status == UNEXPECTED:
            unexpected.append(a.to_dict())
        elif a.ledger_id:
            ledgered[a.ledger_id] = ledgered.get(a.ledger_id, 0) + 1
    return total, ledgered, unexpected


def test_criterion_05_cyclotomic(report):
    def inputs():
        for m in range(1, 17):
            for n, p in np_pairs(60, 60):
                if m % p:
                    R = BaseRing.cyclotomic(m, p)
                    yield R, cyclic(n)
                    if n > 1:
                        yield R, normalize([n, n])

    total, ledgered, unexpected = sweep(inputs())
    ok = not unexpected
    report(5, ok, f"cyclotomic lists over {total} inputs: ledgered {ledgered}, {len(unexpected)} unledgered")
    assert ok, unexpected[:5]


def test_criterion_06_quadratic(report):
    ds = [d for d in range(-30, 31) if d not in (0, 1) and is_squarefree(d)]

    def inputs():
        for d in ds:
            for e, p in np_pairs(60, 60):
                R = BaseRing.quadratic(d, p)
                yield R, cyclic(e)
                if e > 1:
                    yield R, normalize([e, e])

    total, ledgered, unexpected = sweep(inputs())
    ids = {e.id for e in DiscrepancyLedger.load().entries}
    ok = not unexpected and "main2-d-minus-1" in ledgered and "main2-3c-vacuous" in ids
    report(6, ok, f"quadratic lists over {total} inputs: ledgered {ledgered}, {len(unexpected)} unledgered")
    assert ok, unexpected[:5]


def test_criterion_07_prime_order_groups(report):
    bad = []
    for q in primes_in(2, 50):
        for p in primes_in(3, 100):
            if p == q:
                continue
            o = mult_order(p, q)
            R, G = BaseRing.rational(p), cyclic(q)
            for v in (classify_theorem(R, G).verdict, classify_first_principles(R, G).verdict):
                half = 2 * o == q - 1
                if (v.is_clean != (o == q - 1)
                        or (v == C.WEAKLY_CLEAN_NOT_CLEAN) != half
                        or (v.is_feebly_clean and not v.is_clean) != half):
                    bad.append((q, p, v.label))
    report(7, not bad, f"C_q for q<=50, p<=100: {len(bad)} mismatches")
    assert not bad, bad[:10]


def test_criterion_08_worked_instance(report):
    R = BaseRing.rational(59)
    got = {
        "C25": classify_theorem(R, cyclic(25)).verdict,
        "C5": classify_theorem(R, cyclic(5)).verdict,
        "C5+C5": classify_theorem(R, normalize([5, 5])).verdict,
    }
    want = {
        "C25": C.FEEBLY_CLEAN_NOT_WEAKLY_CLEAN,
        "C5": C.WEAKLY_CLEAN_NOT_CLEAN,
        "C5+C5": C.FEEBLY_CLEAN_NOT_WEAKLY_CLEAN,
    }
    ok = got == want and mult_order(59, 25) == 10
    report(8, ok, "p=59: " + ", ".join(f"{k} {v.label}" for k, v in got.items()))
    assert ok


def test_criterion_09_small_cyclotomic_reduction(report):
    bad = []
    count = 0
    for n, p in np_pairs(200, 100):
        for G in {cyclic(n), *(normalize([d, n]) for d in divisors(n))}:
            count += 1
            v = classify_theorem(BaseRing.rational(p), G).verdict.label
            for m in (1, 2):
                if classify_theorem(BaseRing.cyclotomic(m, p), G).verdict.label != v:
                    bad.append((m, p, G))
    report(9, not bad, f"m=1,2 vs rational over {count} inputs: {len(bad)} mismatches")
    assert not bad, bad[:10]


def run_cli(*argv):
    buf = io.StringIO()
    return main(list(argv), out=buf), buf.getvalue()


def test_criterion_10_cli_contract(report):
    problems = []
    surveys = [
        ["survey", "--p", "3", "--n", "1..10"],
        ["survey", "--base", "quadratic", "--d=-1", "--p", "5", "--groups", "4"],
        ["survey", "--base", "cyclotomic", "--m", "1..6", "--p", "3..11", "--n", "1..12", "--square"],
    ]
    for argv in surveys:
        expected = len(admissible_triples(build_parser().parse_args(argv)))
        rc, csv_text = run_cli(*argv, "--format", "csv")
        rows = csv_to_rows(csv_text)
        if rc != EXIT_OK or len(rows) != expected or rows_to_csv(rows) != csv_text:
            problems.append(("csv", argv))
        rc, json_text = run_cli(*argv, "--format", "json")
        jrows = json.loads(json_text)
        if rc != EXIT_OK or len(jrows) != expected or json.dumps(jrows, indent=2, sort_keys=True) + "\n" != json_text:
            problems.append(("json", argv))
        if [{k: r[k] for k in rows[0]} for r in jrows] != rows:
            problems.append(("csv/json", argv))

    rc, text = run_cli("classify", "--base", "rational", "--p", "3", "--group", "11", "--format", "json")
    rep = json.loads(text)
    if rc != EXIT_OK or rep["verdict"] != "WeaklyCleanNotClean" or rep["matched_case"] != "thm1.3b":
        problems.append("classify p=3 C11")
    rc, text = run_cli("classify", "--base", "quadratic", "--d", "5", "--p", "19", "--group", "5",
                       "--method", "both", "--format", "json")
    agreement = json.loads(text)["agreement"]
    if rc != EXIT_OK or agreement["status"] != "agree" or agreement["theorem_verdict"] != "Clean":
        problems.append("classify d=5 p=19 C5")
    if run_cli("classify", "--base", "rational", "--p", "3", "--group", "6")[0] != EXIT_USAGE:
        problems.append("classify p=3 C6")

    report(10, not problems, f"survey counts, JSON/CSV round trips and classify exit codes: {len(problems)} problems")
    assert not problems, problems
