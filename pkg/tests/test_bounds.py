import random

import pytest

from tss import (
    BadParam,
    BoundsReport,
    build_graph,
    constant_threshold,
    cycle,
    exact_min_seed,
    flocchini_upper,
    generalized_petersen,
    lower_bound_lemma,
    torus_bounds,
    torus_cordalis,
    tss_lower_bound_torus,
)
from helpers import random_connected_graph


def test_lemma_on_petersen():
    assert lower_bound_lemma(generalized_petersen(5, 2), 2) == 3


def test_lemma_on_12x14_torus():
    # (336 - 168 + 1) / 3 rounded up, which matches the exact value there
    assert lower_bound_lemma(torus_cordalis(12, 14), 3) == 57


def test_lemma_on_regular_graph_with_k_equal_delta():
    for g in (cycle(7), generalized_petersen(6, 2)):
        k = g.degree(0)
        expected = -((-(len(g.edges) + 1)) // k)
        assert lower_bound_lemma(g, k) == expected


def test_lemma_preconditions():
    with pytest.raises(BadParam):
        lower_bound_lemma(cycle(4), 0)
    with pytest.raises(BadParam):
        lower_bound_lemma(build_graph(4, [(0, 1), (2, 3)]), 2)


def test_lemma_never_negative():
    # star graph with k=1: formula numerator goes negative, clamp at 0
    g = build_graph(5, [(0, i) for i in range(1, 5)])
    assert lower_bound_lemma(g, 1) >= 0


def test_torus_lower_bound_values():
    assert tss_lower_bound_torus(11, 3) == 12
    assert tss_lower_bound_torus(9, 9) == 28
    assert tss_lower_bound_torus(3, 3) == 4
    with pytest.raises(BadParam):
        tss_lower_bound_torus(2, 3)


def test_flocchini_values():
    assert flocchini_upper(9, 9, "cordalis") == 30
    assert flocchini_upper(4, 3, "mesh") == 5
    assert flocchini_upper(3, 3, "cordalis") == 4
    with pytest.raises(BadParam):
        flocchini_upper(3, 2, "mesh")
    with pytest.raises(BadParam):
        flocchini_upper(3, 3, "hexagonal")


def test_lower_never_exceeds_upper():
    for m in range(3, 25):
        for n in range(2, 25):
            assert tss_lower_bound_torus(m, n) <= flocchini_upper(m, n, "cordalis")


def test_bounds_report_orders_bounds():
    report = torus_bounds(4, 3, "cordalis")
    assert report.lower == 5 and report.upper == 8
    assert report.lower_source == report.upper_source == "flocchini_a"
    with pytest.raises(BadParam):
        BoundsReport(lower=5, upper=4, lower_source="lemma3", upper_source="construction")


def test_lemma_below_exact_on_random_graphs():
    rng = random.Random(31)
    for _ in range(40):
        g = random_connected_graph(rng, 10)
        for k in (2, 3):
            theta = constant_threshold(g, k)
            result = exact_min_seed(g, theta)
            assert lower_bound_lemma(g, k) <= result.optimum
