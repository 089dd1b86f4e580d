"""Acceptance criteria, one test each.

Every check returns (passed, detail); the test records a one-line verdict
that pytest prints in its terminal summary. Run this file directly with
``python tests/test_acceptance.py`` to get the same lines without pytest.
"""

import csv
import io
import itertools
import math
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES, w  # noqa: E402
from noisydup.analysis import approx_rate_formula, asymptotic_rate, rate_table, rates_csv  # noqa: E402
from noisydup.channel import apply_nd, apply_td, classify_root_change  # noqa: E402
from noisydup.ndcode import build_codebook, size_lower_bound  # noqa: E402
from noisydup.oracle import (  # noqa: E402
    verify_cone_disjoint,
    verify_decode_exhaustive,
    verify_guard_exhaustive,
    verify_table_coverage,
)
from noisydup.words import (  # noqa: E402
    cusum,
    deinterleave,
    difference,
    interleave,
    mu,
    phi,
    phi_inv,
    root,
    split,
)


def check_1():
    """Worked examples reproduce bit-exactly, in milliseconds."""
    t0 = time.perf_counter()
    q, k = 3, 3
    x = w("1201210")
    got = {
        "duplication": apply_td(x, 1, k) == w("1201201210"),
        "transform": phi(x, k, q) == (w("120"), w("0012")),
        "transform of duplicate": phi(w("1201201210"), k, q) == (w("120"), w("0000012")),
        "noisy duplicate": phi(apply_nd(x, 1, k, 1, 2, q), k, q) == (w("120"), w("0200112")),
    }
    u = w("221200012")
    got["split"] = [split(u, j, k) for j in (1, 2, 3)] == [w("220"), w("201"), w("102")]
    got["interleave"] = interleave(u, k) == w("220201102")
    m = w("120102002120")
    cases = [
        ("0^30201100200^31020020^610^320", "020110020102002120", 2 * k),
        ("0^310^3200^31020020^610^302021", "120102002102021", k),
        ("0^310^3200^30011010020^610^320", "121101002120", 0),
        ("0^310^3200^30021000020^610^320", "122102120", -k),
    ]
    ok_mu = True
    for z, expect, delta in cases:
        m2 = mu(w(z), k)
        ok_mu &= m2 == w(expect) and classify_root_change(m, m2, k, q).delta == delta
    got["root changes"] = ok_mu
    elapsed = time.perf_counter() - t0
    bad = [name for name, ok in got.items() if not ok]
    passed = not bad and elapsed < 0.5
    return passed, f"{len(got) - len(bad)}/{len(got)} examples exact in {elapsed * 1e3:.1f} ms" + (
        f"; mismatched: {', '.join(bad)}" if bad else ""
    )


def check_2():
    """Asymptotic rates at q=4 and the closed-form approximation at q=4, k=4."""
    expected = {2: 0.9613, 3: 0.9912, 4: 0.9979}
    rates = {k: asymptotic_rate(4, k) for k in expected}
    rates_ok = all(abs(rates[k] - v) <= 5e-5 for k, v in expected.items())
    gap = abs(approx_rate_formula(4, 4) - rates[4])
    approx_ok = gap <= 1e-3
    detail = (
        "rates " + ", ".join(f"{rates[k]:.5f}" for k in expected)
        + (" within 5e-5" if rates_ok else " OUT of 5e-5")
        + f"; approximation gap at q=4,k=4 is {gap:.2e} ("
        + ("within" if approx_ok else "exceeds")
        + " 1e-3)"
    )
    return rates_ok and approx_ok, detail


def check_3():
    """Rate curves: monotone lower bound and redundancy close to (2k+4) log n + (2k+5)."""
    t0 = time.perf_counter()
    k, qs, ns = 3, (3, 4, 5), range(100, 401, 20)
    text = rates_csv(rate_table(k, qs, ns))
    rows = list(csv.DictReader(io.StringIO(text)))
    lower = {(int(r["q"]), int(r["n"])): float(r["lower_rate"]) for r in rows}
    upper = {(int(r["q"]), int(r["n"])): float(r["upper_rate"]) for r in rows}
    inc_n = all(lower[q, a] < lower[q, b] for q in qs for a, b in itertools.pairwise(ns))
    inc_q = all(lower[a, n] < lower[b, n] for n in ns for a, b in itertools.pairwise(qs))
    worst = 0.0
    for (q, n), up in upper.items():
        model = ((2 * k + 4) * math.log(n, q) + (2 * k + 5)) / n
        worst = max(worst, abs(up - lower[q, n] - model) * n)
    gap_ok = worst <= 10
    elapsed = time.perf_counter() - t0
    passed = inc_n and inc_q and gap_ok and elapsed < 10
    return passed, (
        f"{len(rows)} rows; increasing in n: {inc_n}; increasing in q: {inc_q}; "
        f"max |gap - model| * n = {worst:.2f} (limit 10); {elapsed:.2f} s"
    )


def check_4():
    """Guard code: every class, codeword and menu error at n = 9, 10."""
    t0 = time.perf_counter()
    reports = [verify_guard_exhaustive(n) for n in (9, 10)]
    elapsed = time.perf_counter() - t0
    passed = all(r.passed for r in reports) and elapsed < 300
    return passed, "; ".join(
        f"n={9 + i}: {r.instances} decodes, {len(r.failures)} failures, {r.details['classes']} classes"
        for i, r in enumerate(reports)
    ) + f"; {elapsed:.1f} s"


def check_5():
    """Best codebooks: size bound, disjoint cones, exhaustive decoding."""
    t0 = time.perf_counter()
    parts = []
    passed = True
    for q, k, n, t in ((3, 2, 8, 3), (2, 3, 11, 2)):
        book = build_codebook(q, k, n)
        bound = size_lower_bound(q, k, n)
        cones = verify_cone_disjoint(book, t)
        dec = verify_decode_exhaustive(book, t)
        ok = len(book) >= math.ceil(bound) and cones.passed and dec.passed
        passed &= ok
        parts.append(
            f"q={q},k={k},n={n}: |C|={len(book)} >= {float(bound):.2e}, "
            f"cones {'disjoint' if cones.passed else 'OVERLAP'}, {dec.instances} decodes, {len(dec.failures)} failures"
        )
    elapsed = time.perf_counter() - t0
    return passed and elapsed < 1800, "; ".join(parts) + f"; {elapsed:.1f} s"


def check_6():
    """Table coverage at q=3, k=2, roots up to length 8, up to 3 duplications."""
    t0 = time.perf_counter()
    rep = verify_table_coverage(3, 2, 8, 3)
    elapsed = time.perf_counter() - t0
    unreached = rep.details["rows not reached"]
    passed = rep.passed and not unreached and elapsed < 600
    return passed, (
        f"{rep.instances} pairs, {len(rep.failures)} unclassified, "
        f"{len(rep.details['rows witnessed'])} rows witnessed, unreached rows: {unreached or 'none'}; {elapsed:.1f} s"
    )


def check_7():
    """Exhaustive round-trip and invariance properties for q <= 3, n <= 8."""
    t0 = time.perf_counter()
    failures = 0
    cases = 0
    for q in (2, 3):
        for n in range(9):
            for x in itertools.product(range(q), repeat=n):
                for k in (1, 2, 3):
                    cases += 1
                    failures += deinterleave(interleave(x, k), n, k) != x
                    m = mu(x, k)
                    failures += mu(m, k) != m
                    if n < k:
                        continue
                    failures += phi_inv(phi(x, k, q), q) != x
                    r = root(x, k, q)
                    failures += root(r, k, q) != r
                    for i in range(n - k + 1):
                        failures += root(apply_td(x, i, k), k, q) != r
                failures += difference(cusum(x, q), q) != x
    elapsed = time.perf_counter() - t0
    return failures == 0 and elapsed < 60, f"{cases} (word, k) cases, {failures} failures; {elapsed:.1f} s"


CHECKS = [check_1, check_2, check_3, check_4, check_5, check_6, check_7]


def _run(i):
    passed, detail = CHECKS[i - 1]()
    line = f"criterion {i}: {'PASS' if passed else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return passed, detail


def test_criterion_1_worked_examples():
    passed, detail = _run(1)
    assert passed, detail


def test_criterion_2_asymptotic_rate():
    passed, detail = _run(2)
    assert passed, detail


def test_criterion_3_rate_curves():
    passed, detail = _run(3)
    assert passed, detail


def test_criterion_4_guard_exhaustive():
    passed, detail = _run(4)
    assert passed, detail


def test_criterion_5_codebooks_exhaustive():
    passed, detail = _run(5)
    assert passed, detail


def test_criterion_6_table_coverage():
    passed, detail = _run(6)
    assert passed, detail


def test_criterion_7_property_suites():
    passed, detail = _run(7)
    assert passed, detail


if __name__ == "__main__":
    results = [_run(i)[0] for i in range(1, len(CHECKS) + 1)]
    sys.exit(0 if all(results) else 1)
