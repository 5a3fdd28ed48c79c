"""Acceptance criteria 1-11, one test each.

Every test records its outcome in ``conftest.ACCEPTANCE`` so the terminal
summary prints one PASS/FAIL line per criterion, then asserts.
"""

from __future__ import annotations

import time
from collections import Counter
from functools import cache
from itertools import product
from pathlib import Path

import conftest
from boxcount.algebra import QPoly, SLaurent, eval_at_minus_one, expand
from boxcount.cli import main
from boxcount.combinatorics import CLASS_LABELS, KAPPA, KAPPA_TAU, heights_fixed_by
from boxcount.enumeration import (
    class_table,
    count_class,
    count_plane_partitions,
    count_q,
    iter_heights,
    monotonicity_violations,
)
from boxcount.formulas import identity_suite, n_count, n_count_q, n_tau_q, tau_polynomial
from boxcount.repmodel import (
    CHAIN_CHECK_LIMIT,
    character_cross_checks,
    conjugator_check,
    d_q_matrix,
    hodge_star,
    k_action_check,
    klein_report,
    pairing_B,
    pairing_B_expand,
    wedge_basis,
    wedge_power,
)

GOLDEN = Path(__file__).parent / "golden"


def record(n: int, desc: str, ok: bool, detail: str = "") -> None:
    conftest.ACCEPTANCE[n] = (desc, ok, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {desc}" + (f"  [{detail}]" if detail else ""))
    assert ok, detail


def boxes_upto(n: int):
    return list(product(range(n + 1), repeat=3))


def census(box, fixed_by=()):
    counts = Counter()
    for h in iter_heights(box):
        if all(heights_fixed_by(h, g, box) for g in fixed_by):
            counts[sum(map(sum, h))] += 1
    return counts


@cache
def character_results():
    """Character cross-checks on every box with sides <= 5 and at most 10^4 plane partitions."""
    out = {}
    for box in product(range(6), repeat=3):
        if count_plane_partitions(box) <= CHAIN_CHECK_LIMIT:
            out[box] = {c.name: c for c in character_cross_checks(box)}
    return out


def test_criterion_01_formula_vs_bruteforce():
    t0 = time.perf_counter()
    bad = []
    for box in boxes_upto(3) + [(4, 4, 4)]:
        brute = sum(1 for _ in iter_heights(box))
        if n_count(*box) != brute:
            bad.append((box, n_count(*box), brute))
    spots = n_count(1, 1, 1) == 2 and n_count(2, 2, 2) == 20
    dt = time.perf_counter() - t0
    record(1, "N(a,b,c) = exhaustive count, a,b,c <= 3 and (4,4,4)", not bad and spots and dt < 30, f"{dt:.1f}s mismatches={bad}")


def test_criterion_02_q_polynomial():
    t0 = time.perf_counter()
    bad = []
    for box in boxes_upto(3) + [(2, 2, 4)]:
        brute = QPoly.from_counts(census(box))
        if not expand(n_count_q(*box)) == count_q(box, "transfer") == brute:
            bad.append(box)
    dt = time.perf_counter() - t0
    record(2, "expanded N_q = transfer matrix = brute-force census", not bad and dt < 30, f"{dt:.1f}s mismatches={bad}")


def test_criterion_03_self_complementary():
    t0 = time.perf_counter()
    bad = []
    checked = 0
    for box in boxes_upto(4):
        if n_count(*box) > 10**6:
            continue
        checked += 1
        brute = sum(census(box, (KAPPA,)).values())
        expr = n_count_q(*box)
        if not brute == eval_at_minus_one(expr) == expand(expr)(-1):
            bad.append(box)
    spot = count_class((2, 2, 2), "SC", "bruteforce").count == 4
    dt = time.perf_counter() - t0
    record(3, f"kappa-fixed count = N_q at q=-1 ({checked} boxes)", not bad and spot and dt < 60, f"{dt:.1f}s mismatches={bad}")


def test_criterion_04_transpose_complement():
    t0 = time.perf_counter()
    bad = []
    for a, c in product(range(5), repeat=2):
        box = (a, a, c)
        brute = sum(census(box, (KAPPA_TAU,)).values())
        if brute != tau_polynomial(a, c)(-1):
            bad.append(box)
    dt = time.perf_counter() - t0
    record(4, "kappa-tau-fixed count = tau polynomial at q=-1, a,c <= 4", not bad and dt < 60, f"{dt:.1f}s mismatches={bad}")


def test_criterion_05_representation_identities():
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 8):
        for a in range(n + 1):
            b = n - a
            w = wedge_power(d_q_matrix(a, b), a)
            for k, p in enumerate(wedge_basis(a, b)):
                if w[k][k] != SLaurent.monomial(2 * p.size - a * b):
                    bad.append(("D_q", a, b, p))
            if not k_action_check(a, b).passed:
                bad.append(("K", a, b))
    for a in range(1, 4):
        basis = wedge_basis(a, a)
        for p, p2 in product(basis, basis):
            if pairing_B(p, p2) != pairing_B_expand(p, p2):
                bad.append(("pairing", p, p2))
        for p in basis:
            if hodge_star(p) != (1, p.transpose()):
                bad.append(("hodge", p))
    chains = [box for box, checks in character_results().items() if not checks["chain_operators"].passed]
    dt = time.perf_counter() - t0
    record(
        5,
        f"wedge, K, pairing, Hodge and chain-level identities (chains on {len(character_results())} boxes)",
        not bad and not chains and dt < 60,
        f"{dt:.1f}s failures={bad[:3]} chain_failures={chains[:3]}",
    )


def test_criterion_06_conjugator():
    t0 = time.perf_counter()
    reports = [conjugator_check(a) for a in (1, 2, 3)]
    reference = any(c.name == "C_reference_4x4" and c.passed for c in reports[1].checks)
    dt = time.perf_counter() - t0
    fails = [c.name for r in reports for c in r.failures]
    record(6, "C K C^-1 = D_-1, sigma_B(C) = C, general form, a = 1,2,3 and reference 4x4", not fails and reference and dt < 1, f"{dt:.2f}s failures={fails}")


def test_criterion_07_characters():
    results = character_results()
    bad = [
        (box, name)
        for box, checks in results.items()
        for name in ("trace_D_q", "trace_K")
        if not checks[name].passed
    ]
    two = results[(2, 2, 2)]["trace_K"].detail
    record(7, f"trace identities on {len(results)} boxes with <= 10^4 plane partitions", not bad and "N_kappa=4" in two, f"failures={bad[:3]}")


def test_criterion_08_klein():
    kr = klein_report()
    ok = kr.characters == ((6, 2, 2, 2), (6, 2, 2, 2)) and kr.orbit_sizes[0] != kr.orbit_sizes[1] and kr.passed
    record(8, "equal characters (6,2,2,2), different orbit types", ok, f"{kr.characters} {kr.orbit_sizes}")


def test_criterion_09_closed_symmetric_formula():
    notes = []
    a1_bad = [c for c in range(1, 5) if not n_tau_q(1, c).verified]
    if a1_bad:
        notes.append(f"a=1 mismatch at c={a1_bad}")
    suite = identity_suite(0, 0, 0, boxes=[(2, 2, c) for c in range(1, 4)])
    closed = [c for c in suite.checks if c.name == "N_tau_q_closed_form"]
    recorded = suite.passed and closed and all(c.experimental and not c.passed for c in closed)
    if not recorded:
        notes.append("a=2 discrepancy not recorded as experimental")
    filt_bad = []
    for a, c in product(range(5), range(5)):
        direct = QPoly.from_counts(
            Counter(sum(map(sum, h)) for h in iter_heights((a, a, c)) if all(h[i][j] == h[j][i] for i in range(a) for j in range(i)))
        )
        if direct != tau_polynomial(a, c):
            filt_bad.append((a, c))
    if filt_bad:
        notes.append(f"tau polynomial disagrees with filter at {filt_bad}")
    record(9, "closed tau formula matches for a=1, c<=4; a=2 discrepancy recorded; tau polynomial confirmed", not notes, "; ".join(notes))


def test_criterion_10_class_table():
    t0 = time.perf_counter()
    bad = []
    for n in (2, 3):
        reports = class_table((n, n, n))
        if [r.label for r in reports] != list(CLASS_LABELS) or not all(r.compatible for r in reports):
            bad.append((n, "labels"))
        bad.extend((n, v) for v in monotonicity_violations(reports))
    dt = time.perf_counter() - t0
    record(10, "ten classes on 2x2x2 and 3x3x3 satisfy subgroup monotonicity", not bad and dt < 30, f"{dt:.1f}s violations={bad}")


GOLDEN_CASES = [
    (["count", "2", "2", "2", "--class", "SC", "--method", "bruteforce"], "count_sc_2x2x2.json"),
    (["count", "2", "2", "2"], "count_p_2x2x2.json"),
    (["qpoly", "2", "2", "2", "--at", "-1"], "qpoly_2x2x2_at_minus1.json"),
    (["list", "1", "1", "1"], "list_1x1x1.jsonl"),
    (["render", "2", "2", "2"], "render_empty_2x2x2.svg"),
    (["render", "2", "2", "2", "--heights", "2,1;1,0"], "render_staircase_2x2x2.svg"),
]


def test_criterion_11_cli_golden(capsys):
    bad = []
    for argv, name in GOLDEN_CASES:
        code = main(argv)
        out = capsys.readouterr().out
        if code != 0 or out.encode() != (GOLDEN / name).read_bytes():
            bad.append(name)
    record(11, "six CLI invocations byte-identical to golden files", not bad, f"mismatches={bad}")
