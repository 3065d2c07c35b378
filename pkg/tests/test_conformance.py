"""Generator determinism, the law suite on the real utility, and mutation tests."""

import json

import pytest

from likelihood_gambles import (
    Gamble,
    GambleError,
    GenConfig,
    canonical_of_value,
    depth,
    generate_gamble,
    run_conformance,
)
from likelihood_gambles.conformance import _Ctx, _shrink_candidates, _PROPERTIES, property_names
from likelihood_gambles.gambles import gamble_from_json


def max_branching_of(g: Gamble) -> int:
    if g.is_constant:
        return 0
    return max([len(g.prospects)] + [max_branching_of(p.reward) for p in g.prospects])


def sum_pair(g: Gamble, c: float) -> tuple[float, float]:
    """Deliberately broken evaluator: adds scaled child vectors instead of maxing."""
    if g.is_constant:
        u = canonical_of_value(g.constant, c)
        return u.alpha, u.beta
    alpha = 0.0
    beta = 0.0
    for p in g.prospects:
        a, b = sum_pair(p.reward, c)
        alpha += p.likelihood * a
        beta += p.likelihood * b
    return alpha, beta


class TestGenerator:
    def test_deterministic_for_fixed_seed(self):
        config = GenConfig(seed=123, max_depth=4, max_branching=4)
        assert generate_gamble(config) == generate_gamble(config)

    def test_depth_zero_gives_constant(self):
        g = generate_gamble(GenConfig(seed=5, max_depth=0))
        assert g.is_constant
        assert 0.0 <= g.constant <= 1.0

    def test_structural_bounds(self):
        for seed in range(40):
            config = GenConfig(seed=seed, max_depth=3, max_branching=4)
            g = generate_gamble(config)
            assert depth(g) <= 3
            assert max_branching_of(g) <= 4

    def test_different_seeds_vary(self):
        gambles = {generate_gamble(GenConfig(seed=s, max_depth=3)) for s in range(30)}
        assert len(gambles) > 1

    def test_config_validation(self):
        with pytest.raises(GambleError):
            GenConfig(max_depth=7)
        with pytest.raises(GambleError):
            GenConfig(max_depth=-1)
        with pytest.raises(GambleError):
            GenConfig(max_branching=0)
        with pytest.raises(GambleError):
            GenConfig(samples=-1)
        with pytest.raises(GambleError):
            GenConfig(seed=2**64)


class TestSuiteOnRealUtility:
    def test_all_laws_pass(self):
        report = run_conformance(GenConfig(seed=11, samples=200, max_depth=4), c=0.0)
        assert report.all_passed, report.summary()

    def test_all_laws_pass_under_nonneutral_premiums(self):
        for c in (-1.0, 1.0):
            report = run_conformance(GenConfig(seed=12, samples=120, max_depth=4), c=c)
            assert report.all_passed, report.summary()

    def test_report_is_deterministic(self):
        config = GenConfig(seed=9, samples=60, max_depth=3)
        first = run_conformance(config, c=0.25)
        second = run_conformance(config, c=0.25)
        assert json.dumps(first.to_json()) == json.dumps(second.to_json())

    def test_zero_samples_runs_zero_checks(self):
        report = run_conformance(GenConfig(seed=1, samples=0), c=0.0)
        assert report.all_passed
        assert all(r.samples == 0 and r.failures == 0 for r in report.results)
        assert all(r.counterexample is None for r in report.results)

    def test_property_subset_selection(self):
        report = run_conformance(
            GenConfig(seed=2, samples=10), c=0.0, properties=["bounds", "transitivity"]
        )
        assert [r.name for r in report.results] == ["bounds", "transitivity"]

    def test_unknown_property_rejected(self):
        with pytest.raises(GambleError):
            run_conformance(GenConfig(samples=1), properties=["no_such_law"])

    def test_report_json_schema(self):
        report = run_conformance(GenConfig(seed=3, samples=5), c=0.0)
        payload = report.to_json()
        assert isinstance(payload, list)
        for entry in payload:
            assert set(entry) == {"property", "samples", "failures", "seed", "counterexample"}

    def test_names_cover_the_advertised_laws(self):
        names = property_names()
        for expected in (
            "flatten_preserves_utility",
            "idempotence",
            "partition_substitution",
            "bounds",
            "weak_independence",
            "transitivity",
            "numerical_order",
            "archimedean_witness",
            "price_roundtrip",
            "evidence_scaling",
            "model_permutation",
        ):
            assert expected in names


class TestMutationDetection:
    """A wrong recursion must be caught, not silently accepted."""

    def test_sum_instead_of_max_breaks_flatten_law(self):
        report = run_conformance(
            GenConfig(seed=77, samples=150, max_depth=4),
            c=0.0,
            properties=["flatten_preserves_utility"],
            utility_fn=sum_pair,
        )
        (result,) = report.results
        assert result.failures > 0
        assert result.seed is not None
        assert result.counterexample is not None

    def test_sum_instead_of_max_breaks_idempotence(self):
        report = run_conformance(
            GenConfig(seed=77, samples=150, max_depth=3),
            c=0.0,
            properties=["idempotence"],
            utility_fn=sum_pair,
        )
        (result,) = report.results
        assert result.failures > 0

    def test_handcrafted_failing_instance(self):
        # {1/1, 1/0} flattens to itself but merging duplicates is the only
        # reduction; summing double-counts the nested copy below.
        nested = Gamble.from_prospects([(1.0, Gamble.from_prospects([(1.0, 1.0), (1.0, 0.0)]))])
        flat_pair = sum_pair(Gamble.from_prospects([(1.0, 1.0), (1.0, 0.0)]), 0.0)
        nested_pair = sum_pair(nested, 0.0)
        assert nested_pair == flat_pair  # sums are linear, so nesting alone is safe
        merged = Gamble.from_prospects([(1.0, 1.0), (1.0, 0.0), (0.5, 0.0)])
        assert sum_pair(merged, 0.0) != sum_pair(Gamble.from_prospects([(1.0, 1.0), (1.0, 0.0)]), 0.0)

    def test_counterexample_is_shrunk_to_minimal(self):
        report = run_conformance(
            GenConfig(seed=77, samples=150, max_depth=4),
            c=0.0,
            properties=["flatten_preserves_utility"],
            utility_fn=sum_pair,
        )
        (result,) = report.results
        counterexample = gamble_from_json(result.counterexample)
        prop = next(p for p in _PROPERTIES if p.name == "flatten_preserves_utility")
        ctx = _Ctx(premium=0.0, config=GenConfig(seed=77, samples=150, max_depth=4), pair=sum_pair)
        assert not prop.holds((counterexample,), {}, ctx)
        for candidate in _shrink_candidates(counterexample):
            assert prop.holds((candidate,), {}, ctx)
