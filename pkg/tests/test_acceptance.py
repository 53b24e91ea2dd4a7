"""End-to-end acceptance checks for the whole package.

Each test covers one acceptance criterion and prints exactly one
PASS/FAIL line with the measured numbers before asserting, so a report
survives in the captured output either way.
"""

import time

from conftest import AD_HOC_SETS
from redraw.bounds import ConstraintKind, entropy, growth_objective, multinomial_rate_check, optimize_growth
from redraw.comb import (
    build_k_nested_double_chain,
    build_k_nested_regular,
    canonical_code,
    enumerate_comb_triangulations,
    tutte_count,
)
from redraw.drawings import (
    classify_drawings,
    count_drawings,
    count_polygonalizations,
    enumerate_geometric_triangulations,
    forced_edges_always_present,
    recursive_layer_count,
    to_comb,
)
from redraw.pointsets import PointSet, gen_double_chain, gen_nested_triangles

FREE_OPTIMUM = (1 / 9, 2 / 9, 3 / 9, 2 / 9, 1 / 9)


def _report(num: int, ok: bool, detail: str) -> str:
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    return detail


def test_criterion_1_chain_pair_row_of_counts():
    start = time.monotonic()
    t1 = build_k_nested_double_chain(1)
    row = []
    for t, l in [(7, 1), (6, 2), (5, 3), (4, 4), (3, 5), (2, 6), (1, 7)]:
        ps = gen_double_chain(t + 2, l + 2)
        d = count_drawings(t1, ps, backend="direct")[0]
        o = count_drawings(t1, ps, backend="oracle")[0]
        assert d == o, f"backends disagree on ({t},{l}): {d} vs {o}"
        row.append(d)
    elapsed = time.monotonic() - start
    ok = row == [0, 1, 2, 3, 2, 1, 0] and elapsed < 120.0
    detail = _report(1, ok, f"row={row}, elapsed={elapsed:.1f}s (limit 120s)")
    assert ok, detail


def test_criterion_2_enumeration_matches_counting_formula():
    lengths = [len(enumerate_comb_triangulations(n)) for n in range(5)]
    formula = [tutte_count(n) for n in range(1, 5)]
    ok = lengths == [1, 1, 3, 13, 68] and formula == [1, 3, 13, 68] and tutte_count(2) == 3
    detail = _report(2, ok, f"enumerated={lengths}, formula={formula}")
    assert ok, detail


def test_criterion_3_band_structures_admit_many_drawings():
    v6 = count_drawings(build_k_nested_regular(6), gen_nested_triangles(6))[0]
    v9 = count_drawings(build_k_nested_regular(9), gen_nested_triangles(9))[0]
    ok = v6 >= 4 and v9 >= 8
    detail = _report(3, ok, f"drawings on 6 points: {v6} (need >= 4), on 9: {v9} (need >= 8)")
    assert ok, detail


def test_criterion_4_constrained_growth_optimum():
    _, growth = optimize_growth(ConstraintKind.DEGREE_MASS)
    printed = growth_objective((0.136, 0.299, 0.345, 0.151, 0.069))
    ok = abs(growth - 1.31002235) <= 1e-5 and abs(printed - 1.31002) <= 1e-4
    detail = _report(4, ok, f"optimum={growth:.10f} (target 1.31002235 +/- 1e-5), "
                            f"rounded-vector objective={printed:.10f} (target 1.31002 +/- 1e-4)")
    assert ok, detail


def test_criterion_5_unconstrained_growth_optimum():
    alpha, growth = optimize_growth(ConstraintKind.FREE)
    coord_err = max(abs(a - b) for a, b in zip(alpha, FREE_OPTIMUM))
    growth_err = abs(growth - 9 ** 0.125)
    ok = coord_err <= 1e-6 and growth_err <= 1e-9
    detail = _report(5, ok, f"coordinate error {coord_err:.2e} (<= 1e-6), "
                            f"growth error {growth_err:.2e} (<= 1e-9)")
    assert ok, detail


def test_criterion_6_layer_recursion_growth():
    first = recursive_layer_count(1)
    second = recursive_layer_count(2)
    rates = {k: recursive_layer_count(k) ** (1 / (8 * k)) for k in (8, 16, 32, 64)}
    cap = 3 ** 0.25 + 1e-9
    ok = (
        first == 3
        and second == 19
        and all(r > 1.31 for r in rates.values())
        and all(r <= cap for r in rates.values())
    )
    shown = {k: round(r, 5) for k, r in rates.items()}
    detail = _report(6, ok, f"counts k=1,2: {first},{second}; per-step rates {shown} "
                            f"(need > 1.31, <= {cap:.5f})")
    assert ok, detail


def test_criterion_7_polygon_domination_sweep():
    worst_ratio = 0.0
    checked = 0
    # swapping the chains is a mirror image, so only l >= t is checked
    for t in range(2, 7):
        for l in range(t, 13 - t):
            ps = gen_double_chain(t, l)
            if not forced_edges_always_present(ps):
                detail = _report(7, False, f"forced edge missing on ({t},{l})")
                raise AssertionError(detail)
            poly = count_polygonalizations(ps)
            mult = max(classify_drawings(ps).values())
            if mult > poly:
                detail = _report(7, False, f"({t},{l}): multiplicity {mult} > polygons {poly}")
                raise AssertionError(detail)
            worst_ratio = max(worst_ratio, poly ** (1 / (t + l)))
            checked += 1
    ok = worst_ratio < 5.61 and checked == 25
    detail = _report(7, ok, f"{checked} double chains; max per-point polygon rate "
                            f"{worst_ratio:.3f} (< 5.61); multiplicity <= polygons everywhere")
    assert ok, detail


def test_criterion_8_backends_agree_everywhere():
    sets = [gen_double_chain(t, l)
            for t in range(1, 10) for l in range(1, 10) if 3 <= t + l <= 10]
    sets += [gen_nested_triangles(n) for n in range(3, 11)]
    sets += [PointSet(raw) for raw in AD_HOC_SETS]
    pairs = 0
    for ps in sets:
        drawings = list(enumerate_geometric_triangulations(ps))
        picks = sorted({0, len(drawings) // 2, len(drawings) - 1})
        for i in picks:
            t = to_comb(drawings[i])
            d = count_drawings(t, ps, backend="direct")[0]
            o = count_drawings(t, ps, backend="oracle")[0]
            if d != o or d < 1:
                detail = _report(8, False,
                                 f"{len(ps)} points, class {canonical_code(t)[:20]!r}: "
                                 f"direct={d}, oracle={o}")
                raise AssertionError(detail)
            pairs += 1
    ok = pairs > 0
    detail = _report(8, ok, f"direct == oracle on {pairs} structure/point-set pairs "
                            f"across {len(sets)} sets")
    assert ok, detail


def test_criterion_9_integer_counts_reach_the_entropy_rate():
    alpha = FREE_OPTIMUM
    gap = abs(multinomial_rate_check(9000, alpha) - entropy(alpha))
    ok = gap <= 0.02
    detail = _report(9, ok, f"rate gap at 9000 items: {gap:.6f} (<= 0.02)")
    assert ok, detail
