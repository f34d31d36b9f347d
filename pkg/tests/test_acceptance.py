"""Acceptance criteria 1-10, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` (the lines are printed even
without ``-s``) or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from itertools import product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import interpolated_trace, naive_is_piece, naive_search  # noqa: E402
from trigroups import repcheck  # noqa: E402
from trigroups.search import SearchParams, run_search, verify_table1  # noqa: E402
from trigroups.smallcancel import (  # noqa: E402
    Decomposition,
    PieceIndex,
    find_decomposition,
    interval_alphas,
    is_piece,
    verify_decomposition,
)
from trigroups.tables import TABLE2, W13_HEX_ALPHAS, W13_NONPIECES, table1_row, table1_rows  # noqa: E402
from trigroups.trace import (  # noqa: E402
    admissible_params,
    bound_constants,
    coeff_report,
    sup_check,
    trace_poly,
    word_matrix,
)
from trigroups.words import (  # noqa: E402
    BlockList,
    BlockType,
    Interval,
    Word,
    canonical_lengths,
    from_blocks,
    invert,
    parse_fragment,
    parse_interval,
    parse_word,
    to_blocks,
)

SEED = 20240611


@pytest.fixture
def report(capsys):
    def emit(n: int | str, ok: bool, detail: str) -> None:
        line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
        with capsys.disabled():
            print("\n" + line, flush=True)
        assert ok, line

    return emit


def table_lengths(c: int, e: int) -> list[tuple[int, ...]]:
    return sorted(
        canonical_lengths(to_blocks(parse_word(r.text)).lengths)
        for r in table1_rows()
        if (r.c, r.e) == (c, e)
    )


def random_word(rng: random.Random, max_len: int) -> Word:
    return Word(tuple(rng.choice((1, 2)) for _ in range(rng.randint(1, max_len))))


def test_criterion_1_table1(report):
    t0 = time.perf_counter()
    checks = verify_table1()
    dt = time.perf_counter() - t0
    bad = [rc.n for rc in checks if not rc.passed]
    report(1, len(checks) == 31 and not bad and dt < 1.0,
           f"31 rows exact, block statistics match, failures={bad}, {dt:.2f}s (< 1s)")


def test_criterion_2_search(report):
    t0 = time.perf_counter()
    wrong = []
    total_hits = 0
    for pr in admissible_params(25):
        r = run_search(SearchParams(pr.c, pr.e))
        total_hits += len(r.hits)
        if sorted(r.hit_lengths) != table_lengths(pr.c, pr.e):
            wrong.append((pr.c, pr.e))
    r30 = run_search(SearchParams(3, 0, force=True))
    dt = time.perf_counter() - t0
    ok = not wrong and not r30.hits and total_hits == 26 and dt < 60
    report(2, ok, f"ell<=25 reproduces the table ({total_hits} hits), (3,0) empty, mismatches={wrong}, "
                  f"{dt:.1f}s single worker (< 60s)")


def test_criterion_2_extended(report):
    t0 = time.perf_counter()
    wrong = []
    pairs = [p for p in admissible_params(33) if p.ell > 25]
    for pr in pairs:
        r = run_search(SearchParams(pr.c, pr.e, workers=8))
        if sorted(r.hit_lengths) != table_lengths(pr.c, pr.e):
            wrong.append((pr.c, pr.e))
    dt = time.perf_counter() - t0
    rows = sorted(r.n for r in table1_rows() if 25 < r.ell <= 33)
    ok = not wrong and dt < 600 and {24, 25, 30, 31} <= set(rows)
    report("2 (extended)", ok, f"25<ell<=33 with 8 workers reproduces rows {rows}, mismatches={wrong}, "
                               f"{dt:.1f}s (< 600s)")


def test_criterion_3_determinism(report):
    diffs = []
    for pr in admissible_params(21):
        base = run_search(SearchParams(pr.c, pr.e, workers=1))
        for w in (2, 8):
            r = run_search(SearchParams(pr.c, pr.e, workers=w))
            if r.hit_lengths != base.hit_lengths or r.counters != base.counters:
                diffs.append((pr.c, pr.e, f"workers={w}"))
        unscreened = run_search(SearchParams(pr.c, pr.e, screen="none"))
        k, u = base.counters, unscreened.counters
        if unscreened.hit_lengths != base.hit_lengths or (k.raw, k.canonical) != (u.raw, u.canonical):
            diffs.append((pr.c, pr.e, "screen=none"))
    report(3, not diffs, f"hits and counters identical for workers 1/2/8; hits and raw/canonical counts "
                         f"identical for screen exact/none; ell<=21; differences={diffs}")


def test_criterion_4_oracles(report):
    bad = []
    count = 0
    cache: dict[Word, list[int]] = {}
    for ell in range(1, 10):
        for alphas in product((1, 2), repeat=ell):
            w = Word(alphas)
            count += 1
            cache[w] = list(trace_poly(w).coeffs)
            if cache[w] != interpolated_trace(w):
                bad.append(alphas)

    def tr(w: Word) -> list[int]:
        if w not in cache:
            cache[w] = list(trace_poly(w).coeffs)
        return cache[w]

    search_bad = []
    for pr in admissible_params(13):
        got = set(run_search(SearchParams(pr.c, pr.e)).hit_lengths)
        if got != naive_search(pr.c, pr.e, tr):
            search_bad.append((pr.c, pr.e))
    report(4, not bad and not search_bad,
           f"{count} words ell<=9 match interpolation, search matches naive enumeration on "
           f"{len(admissible_params(13))} pairs ell<=13; mismatches={bad[:3]}{search_bad}")


def test_criterion_5_invariants(report):
    rng = random.Random(SEED)
    problems = []
    sup = 0.0
    for _ in range(1000):
        w = random_word(rng, 40)
        n = len(w)
        m = word_matrix(w)
        tp = trace_poly(w)
        if not (m[0] + m[3]).q.is_zero():
            problems.append(("s-part", w))
        if tp.degree != n or tp.lead() != 1:
            problems.append(("monic degree", w))
        if any(tp[k] for k in range((n + 1) % 2, n + 1, 2)):
            problems.append(("parity", w))
        if trace_poly(invert(w)) != tp:
            problems.append(("inverse", w))
        b = to_blocks(w)
        if len(b) > 1:
            k = rng.randrange(len(b))
            first = b.first if k % 2 == 0 else BlockType(3 - b.first.value)
            rot = BlockList(b.lengths[k:] + b.lengths[:k], first)
            rev = BlockList(b.lengths[::-1], b.first)
            if trace_poly(from_blocks(rot)) != tp or trace_poly(from_blocks(rev)) != tp:
                problems.append(("blocks", w))
        sup = max(sup, sup_check(w, samples=1000))
    ok = not problems and sup <= 2 + 1e-9
    report(5, ok, f"1000 random words ell<=40: monic, degree, parity, zero s-part, rotation/reversal/inversion "
                  f"invariant; max |tau| on [-sqrt3,sqrt3] = {sup:.12f} (<= 2+1e-9); problems={problems[:3]}")


def test_criterion_6_coefficients(report):
    bad_rows = []
    for row in table1_rows():
        if row.ell < 5:
            continue
        tp = trace_poly(parse_word(row.text))
        c, e = row.c, row.e
        if tp[row.ell - 2] != -2 * c - 3 * e:
            bad_rows.append(row.n)
        if tp[row.ell - 4] != 4 * c * (c - 1) // 2 + 9 * e * (e - 1) // 2 + 6 * c * e + e:
            bad_rows.append(row.n)
    rng = random.Random(SEED + 6)
    bad_words = []
    for _ in range(1000):
        w = random_word(rng, 40)
        if len(w) < 4:
            w = Word(w.alphas + (1, 2, 2))
        r = coeff_report(w)  # also checks B1, B2 against the actual coefficients
        if r.B1**2 != 2 * r.B2 + r.sum_beta_sq + 2 * r.sum_beta_adj:
            bad_words.append(w)
    report(6, not bad_rows and not bad_words,
           f"top coefficients of table rows ell>=5 match, B1^2 = 2B2 + sum beta^2 + 2 sum beta beta+ "
           f"on 1000 random words; bad rows={bad_rows}, bad words={len(bad_words)}")


def test_criterion_7_bounds(report):
    b = bound_constants()
    expect = {
        "|f(1.15)|": (b.f_lambda1, 1.22),
        "|f(0.1)|": (b.f_lambda0, 0.97),
        "|g(0.1)|": (b.g_lambda0, 1.87),
        "|g(1.15)|": (b.g_lambda1, 1.01),
        "|sigma0|": (b.sigma0, 2.17),
        "|sigma1|": (b.sigma1, 2.08),
    }
    ok = all(abs(v - want) <= 0.01 for v, want in expect.values()) and b.all_hold
    text = ", ".join(f"{k}={v:.4f}" for k, (v, _) in expect.items())
    report(7, ok, f"{text}; strict inequalities hold={b.all_hold}")


def test_criterion_8_table2(report):
    t0 = time.perf_counter()
    listed_bad, found_bad = [], []
    for n, texts in TABLE2.items():
        w = parse_word(table1_row(n).text)
        d = Decomposition(tuple(parse_fragment(t) for t in texts))
        if not verify_decomposition(w, d):
            listed_bad.append(n)
        found = find_decomposition(w)
        if found is None or not verify_decomposition(w, found):
            found_bad.append(n)
    dt = time.perf_counter() - t0
    ok = len(TABLE2) == 16 and not listed_bad and not found_bad and dt < 30
    report(8, ok, f"16 listed decompositions verify, search finds one for all 16; "
                  f"failures={listed_bad}/{found_bad}, {dt:.2f}s (< 30s)")


def test_criterion_9_pieces(report):
    w13 = Word(W13_HEX_ALPHAS)
    pieces = [iv for iv in W13_NONPIECES if is_piece(w13, parse_interval(iv))]
    rng = random.Random(SEED + 9)
    mismatches = 0
    checked = 0
    for _ in range(300):
        w = random_word(rng, 10)
        idx = PieceIndex(w)
        n = len(w)
        for start in range(n):
            for length in range(1, n + 1):
                frag = interval_alphas(w, Interval(start, (start + length - 1) % n))
                checked += 1
                mismatches += idx.is_piece(frag) != naive_is_piece(w.alphas, frag)
    ok = not pieces and mismatches == 0
    report(9, ok, f"W13 intervals {', '.join(W13_NONPIECES)} are non-pieces (pieces found: {pieces}); "
                  f"{checked} intervals of 300 random words ell<=10 agree with the letter oracle")


def test_criterion_10_repcheck(report):
    t0 = time.perf_counter()
    results = repcheck.verify_all()
    dt = time.perf_counter() - t0
    failed = [line for r in results for line in r.lines() if line.startswith("FAIL")]
    report(10, not failed and dt < 1.0,
           f"relators, eigenstructure (ranks 2, tr -1, det 1), witness q n ev = t^4+-t; "
           f"failures={failed}, {dt:.2f}s (< 1s)")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
