"""Acceptance suite: every exit criterion at its stated tolerance.

Each test prints one PASS/FAIL line (run pytest with -s to see them inline).
Campaign sizes and tolerances are pinned here, not configurable.
"""

import time

import pytest

from trineq import campaigns, cli, concurrence, decompositions

SEED = 20240817


def _report(name, ok, detail):
    line = f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'} ({detail})"
    print(line)
    assert ok, line


def test_criterion_1_lemma_campaign():
    """1e5 random 2x2 complex symmetric matrices, zero gap-bound violations, < 10 s."""
    t0 = time.perf_counter()
    result = campaigns.lemma1_campaign(100_000, SEED)
    elapsed = time.perf_counter() - t0
    _report(
        "1 diagonal-gap bound",
        result.violations == 0 and elapsed < 10.0,
        f"violations {result.violations}/100000, min margin {result.worst['min_gap_margin']:.2e}, "
        f"{elapsed:.1f}s",
    )


def test_criterion_2_wootters_equivalence():
    """1e4 random rank-2 ensembles, tau route vs Wootters route <= 1e-8, < 30 s."""
    t0 = time.perf_counter()
    result = campaigns.wootters_equivalence_campaign(10_000, SEED)
    elapsed = time.perf_counter() - t0
    _report(
        "2 route equivalence",
        result.violations == 0 and elapsed < 30.0,
        f"violations {result.violations}/10000, max dev {result.worst['max_route_deviation']:.2e}, "
        f"{elapsed:.1f}s",
    )


def test_criterion_3_triangle_two_qubit():
    """1e5 random 2x2 rank-2 ensembles, triangle chain at slack 1e-9."""
    result = campaigns.triangle_concurrence_campaign(2, 2, 100_000, SEED)
    _report(
        "3 triangle 2x2",
        result.violations == 0,
        f"violations {result.violations}/100000, margins "
        f"{result.worst['min_lower_margin']:.2e}/{result.worst['min_upper_margin']:.2e}",
    )


@pytest.mark.parametrize("shape", [(3, 3), (2, 3)])
def test_criterion_4_triangle_highdim(shape):
    """1e4 random high-dim rank-2 ensembles, bound chain with 100 remixes each."""
    result = campaigns.triangle_concurrence_campaign(*shape, samples=10_000, seed=SEED, remixes=100)
    _report(
        f"4 triangle {shape[0]}x{shape[1]}",
        result.violations == 0,
        f"violations {result.violations}/10000, margins "
        f"{result.worst['min_lower_margin']:.2e}/{result.worst['min_upper_margin']:.2e}",
    )


@pytest.mark.parametrize("dim", [2, 3])
def test_criterion_5_l1_triangle(dim):
    """1e5 random state pairs per dimension, l1 triangle chain at slack 1e-9."""
    result = campaigns.triangle_l1_campaign(dim, 100_000, SEED)
    _report(
        f"5a l1 triangle dim {dim}",
        result.violations == 0,
        f"violations {result.violations}/100000",
    )


@pytest.mark.parametrize("dim", [2, 3])
def test_criterion_5_roof_sandwich(dim):
    """1e5 random rank-2 mixtures per dimension, roof sandwich chain."""
    result = campaigns.roof_l1_campaign(dim, 100_000, SEED, remixes=16)
    _report(
        f"5b roof sandwich dim {dim}",
        result.violations == 0,
        f"violations {result.violations}/100000, sandwich margin "
        f"{result.worst['min_sandwich_margin']:.2e}",
    )


def test_criterion_6_figure_reproduction():
    """Example sweep: endpoints, member concurrences, point ordering, COA monotonicity."""
    psi1, psi2 = decompositions.figure_states()
    c1 = concurrence.pure_concurrence(psi1)
    c2 = concurrence.pure_concurrence(psi2)
    data = campaigns.figure_sweep(grid_points=101, decomps_per_p=200, seed=SEED)
    endpoints = {s.p: s.c_rho for s in data.summaries if s.p in (0.0, 1.0)}
    coa = [concurrence.coa_estimate(decompositions.figure_ensemble(0.5), n, SEED) for n in (10, 50, 200)]
    ok = (
        abs(c1 - 1.0) <= 1e-9
        and abs(c2 - 0.5) <= 1e-9
        and abs(endpoints[0.0] - 0.5) <= 1e-9
        and abs(endpoints[1.0] - 1.0) <= 1e-9
        and data.violations == 0
        and coa == sorted(coa)
    )
    _report(
        "6 figure reproduction",
        ok,
        f"C(psi1)={c1:.12f}, C(psi2)={c2:.12f}, endpoints ({endpoints[0.0]:.12f}, "
        f"{endpoints[1.0]:.12f}), point violations {data.violations}/{len(data.rows)}, "
        f"COA prefix {['%.6f' % c for c in coa]}",
    )


def test_criterion_7_determinism(tmp_path):
    """Identical (command, seed) runs produce byte-identical artifacts."""
    pairs = []
    for tag in ("a", "b"):
        lemma = tmp_path / f"lemma-{tag}.json"
        fig = tmp_path / f"fig-{tag}.csv"
        roof = tmp_path / f"roof-{tag}.csv"
        cli.main(["verify-lemma1", "--samples", "20000", "--seed", "5", "--output", str(lemma)])
        cli.main(["figure-1", "--grid", "11", "--samples", "50", "--seed", "5", "--output", str(fig)])
        cli.main(
            ["verify-roof-sandwich", "--samples", "20000", "--seed", "5", "--format", "csv",
             "--output", str(roof)]
        )
        pairs.append((lemma.read_bytes(), fig.read_bytes(),
                      (tmp_path / f"fig-{tag}.summary.csv").read_bytes(), roof.read_bytes()))
    ok = pairs[0] == pairs[1]
    _report("7 determinism", ok, f"{len(pairs[0])} artifacts compared byte-for-byte")
