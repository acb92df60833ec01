import math

import numpy as np
import pytest
from pydantic import ValidationError

from hestonldp.asymptotics import InvalidConfiguration, LimitKind, OutOfTheoremRange, limit_put_tail
from hestonldp.cgf import cgf_eval
from hestonldp.montecarlo import (
    BlockRunner,
    BudgetExceeded,
    Direction,
    EstimatorDomainError,
    GateRefused,
    LimitMethod,
    McConfig,
    Measure,
    Perturbation,
    PerturbationKind,
    Scheme,
    TailEstimate,
    call_representation_check,
    convergence_study,
    draw_exponentials,
    estimate_scaled_cgf,
    estimate_tail,
    event_interval,
    exponential_cdf_monotone,
    martingale_check,
    match_configuration,
    ordering_check,
    put_representation_check,
    share_consistency_check,
    simulate_terminal
)
from hestonldp.montecarlo.streams import EXPONENTIAL_STREAM, PATH_STREAM, block_generator


PLUS_ONE = Perturbation.parse("+exp:1")
MINUS_ONE = Perturbation.parse("-exp:1")


def test_perturbation_parsing():
    assert PLUS_ONE.kind is PerturbationKind.PLUS_EXP and PLUS_ONE.lam == 1.0
    assert MINUS_ONE.sign == -1
    assert str(Perturbation.parse("-exp:2.5")) == "-exp:2.5"
    assert Perturbation.parse("none").sign == 0
    for text in ("exp:1", "+exp:", "+exp:0", "+exp:-1", "*exp:1"):
        with pytest.raises(ValueError):
            Perturbation.parse(text)


def test_config_validation():
    with pytest.raises(ValidationError):
        McConfig(t=1.0, n_paths=1000, n_steps=5)
    with pytest.raises(ValidationError):
        McConfig(t=1.0, n_paths=999, n_steps=20)
    cfg = McConfig.from_rate(2.5, 20, n_paths=1000)
    assert cfg.n_steps == 50
    assert cfg.dt == pytest.approx(0.05)
    longer = cfg.with_horizon(10.0)
    assert longer.n_steps == 200 and longer.dt == pytest.approx(0.05)


def test_budget(params):
    cfg = McConfig(t=1.0, n_paths=1000, n_steps=20, budget=10_000)
    with pytest.raises(BudgetExceeded):
        simulate_terminal(params, cfg)


def test_streams_are_independent():
    a = block_generator(1, 0, PATH_STREAM).standard_normal(4)
    b = block_generator(1, 0, EXPONENTIAL_STREAM).standard_normal(4)
    c = block_generator(1, 1, PATH_STREAM).standard_normal(4)
    assert not np.array_equal(a, b)
    assert not np.array_equal(a, c)
    np.testing.assert_array_equal(a, block_generator(1, 0, PATH_STREAM).standard_normal(4))


def test_blocks_cover_paths():
    runner = BlockRunner(block_size=3000)
    blocks = runner.blocks(10_000)
    assert [size for _, size in blocks] == [3000, 3000, 3000, 1000]
    assert [index for index, _ in blocks] == [0, 1, 2, 3]


@pytest.mark.parametrize("scheme", list(Scheme))
@pytest.mark.parametrize("measure", list(Measure))
def test_deterministic_across_threads(params, scheme, measure):
    cfg = McConfig.from_rate(2.0, 20, n_paths=12_000, seed=11, scheme=scheme, measure=measure)
    serial = simulate_terminal(params, cfg, BlockRunner(block_size=2500, max_workers=1))
    threaded = simulate_terminal(params, cfg, BlockRunner(block_size=2500, max_workers=4))
    np.testing.assert_array_equal(serial.x, threaded.x)
    np.testing.assert_array_equal(serial.y, threaded.y)
    again = simulate_terminal(params, cfg, BlockRunner(block_size=2500, max_workers=1))
    np.testing.assert_array_equal(serial.x, again.x)


def test_exponentials_have_unit_mean(mc_config, runner):
    draws = draw_exponentials(mc_config, 2, runner)
    assert draws.shape == (2, mc_config.n_paths)
    assert np.all(draws >= 0)
    assert np.mean(draws) == pytest.approx(1.0, abs=0.03)


def test_full_truncation_variance_stays_finite(params, runner):
    cfg = McConfig.from_rate(5.0, 20, n_paths=5000, seed=3)
    sample = simulate_terminal(params, cfg, runner)
    assert np.all(np.isfinite(sample.x))
    assert np.all(np.isfinite(sample.y))


def test_exact_variance_is_non_negative(correlated_params, runner):
    cfg = McConfig.from_rate(5.0, 20, n_paths=5000, seed=3, scheme=Scheme.EXACT_VARIANCE_EULER_LOG)
    sample = simulate_terminal(correlated_params, cfg, runner)
    assert np.all(sample.y >= 0)


@pytest.mark.parametrize("scheme", list(Scheme))
def test_law_of_large_numbers(params, runner, scheme):
    # Reference variance starts at its mean, so E[X_t]/t = -theta/2 and
    # E~[X_t]/t = theta*kappa/(2*(kappa - rho*sigma)) up to discretisation.
    for measure, target in ((Measure.PRICING, -0.05), (Measure.SHARE, 0.05)):
        cfg = McConfig.from_rate(10.0, 20, n_paths=20_000, seed=5, measure=measure, scheme=scheme)
        z = simulate_terminal(params, cfg, runner).log_return / cfg.t
        std_err = np.std(z, ddof=1) / math.sqrt(z.shape[0])
        assert abs(np.mean(z) - target) <= 3 * std_err + 1e-3


def test_tail_estimate_from_counts():
    estimate = TailEstimate.from_counts(50, 10_000, 10.0)
    assert estimate.p_hat == 0.005
    assert estimate.scaled_log == pytest.approx(math.log(0.005) / 10.0)
    lo, hi = estimate.scaled_log_ci
    assert lo < estimate.scaled_log < hi
    none = TailEstimate.from_counts(0, 10_000, 10.0)
    assert none.no_hits
    assert none.scaled_log == -math.inf
    assert none.scaled_log_ci is None


def test_tail_at_mean_is_about_half(params, runner):
    cfg = McConfig.from_rate(20.0, 20, n_paths=20_000, seed=9)
    estimate = estimate_tail(params, cfg, -0.05, runner=runner)
    assert 0.4 < estimate.p_hat < 0.6
    assert -0.05 < estimate.scaled_log <= 0.0


def test_tail_with_no_hits(params, runner):
    cfg = McConfig.from_rate(10.0, 20, n_paths=2000, seed=9)
    estimate = estimate_tail(params, cfg, -3.0, PLUS_ONE, runner=runner)
    assert estimate.no_hits
    assert estimate.p_hat == 0.0


def test_perturbation_shrinks_below_event(params, runner):
    cfg = McConfig.from_rate(5.0, 20, n_paths=20_000, seed=2)
    plain = estimate_tail(params, cfg, -0.1, runner=runner)
    perturbed = estimate_tail(params, cfg, -0.1, PLUS_ONE, runner=runner)
    assert perturbed.n_hits <= plain.n_hits


def test_scaled_cgf_at_zero_and_one(params, runner):
    cfg = McConfig.from_rate(10.0, 20, n_paths=20_000, seed=4)
    assert estimate_scaled_cgf(params, cfg, 0.0, runner=runner).value == 0.0
    at_one = estimate_scaled_cgf(params, cfg, 1.0, runner=runner)
    assert at_one.analytic == pytest.approx(0.0, abs=1e-15)
    assert abs(at_one.value) <= 3 * at_one.std_err


def test_scaled_cgf_window(params, runner):
    cfg = McConfig.from_rate(1.0, 20, n_paths=1000)
    with pytest.raises(EstimatorDomainError):
        estimate_scaled_cgf(params, cfg, 2.5, runner=runner)
    with pytest.raises(EstimatorDomainError):
        estimate_scaled_cgf(params, cfg, 1.2, PLUS_ONE, runner=runner)


def test_scaled_cgf_with_perturbation(params, spec, runner):
    cfg = McConfig.from_rate(10.0, 20, n_paths=5000, seed=4)
    plain = estimate_scaled_cgf(params, cfg, 0.5, runner=runner)
    perturbed = estimate_scaled_cgf(params, cfg, 0.5, PLUS_ONE, runner=runner)
    assert perturbed.value == pytest.approx(plain.value + math.log(2.0) / 10.0)
    assert perturbed.analytic == cgf_eval(spec, 0.5)


def test_scaled_cgf_converges(params, spec, runner):
    target = cgf_eval(spec, 0.5)
    gaps = []
    for t in (10.0, 20.0, 40.0):
        cfg = McConfig.from_rate(t, 20, n_paths=50_000, seed=21)
        estimate = estimate_scaled_cgf(params, cfg, 0.5, runner=runner)
        assert estimate.analytic == target
        gaps.append(abs(estimate.value - target))
    assert gaps[-1] <= 0.02


def test_martingale(params, mc_config, runner):
    report = martingale_check(params, mc_config, runner)
    assert report.passed
    assert report.estimate == pytest.approx(1.0, abs=0.02)


def test_share_consistency(params, runner):
    cfg = McConfig.from_rate(5.0, 20, n_paths=40_000, seed=13)
    for x, direction in ((0.0, Direction.BELOW), (0.1, Direction.ABOVE)):
        report = share_consistency_check(params, cfg, x, direction, runner)
        assert report.passed, report


@pytest.mark.parametrize("seed", range(10))
def test_ordering_on_seeds(params, seed, runner):
    cfg = McConfig.from_rate(1.0, 20, n_paths=10_000, seed=seed)
    report = ordering_check(params, cfg, -0.05, 1.0, 3.0, runner=runner)
    assert report.passed
    assert report.p_lam1.p_hat <= report.p_lam2.p_hat <= report.p_none.p_hat


def test_coupled_ordering_holds_pathwise(params, mc_config, runner):
    report = ordering_check(params, mc_config, 0.0, 1.0, 3.0, coupled=True, runner=runner)
    assert report.pathwise
    assert report.passed


def test_mirrored_ordering_under_share(params, mc_config, runner):
    cfg = mc_config.with_measure(Measure.SHARE)
    report = ordering_check(params, cfg, 0.05, 1.0, 3.0, Direction.ABOVE, coupled=True, runner=runner)
    assert report.pathwise
    assert report.p_lam1.p_hat <= report.p_lam2.p_hat <= report.p_none.p_hat


def test_degenerate_ordering(params, mc_config, runner):
    report = ordering_check(params, mc_config, -0.05, 2.0, 2.0, coupled=True, runner=runner)
    assert report.p_lam1.p_hat == report.p_lam2.p_hat
    assert report.gaps[0].estimate == 0.0


def test_ordering_requires_ordered_rates(params, mc_config):
    with pytest.raises(ValueError):
        ordering_check(params, mc_config, 0.0, 3.0, 1.0)


def test_exponential_cdf_monotone():
    assert exponential_cdf_monotone([3.0, 1.0, 0.5], [-1.0, 0.0, 0.2, 4.0])
    with pytest.raises(ValueError):
        exponential_cdf_monotone([0.0, 1.0], [1.0])


def test_put_representation(params, runner):
    cfg = McConfig.from_rate(1.0, 20, n_paths=100_000, seed=17)
    report = put_representation_check(params, cfg, math.exp(params.x0), runner=runner)
    assert report.passed
    assert report.direct == pytest.approx(report.representation, abs=5e-3)


def test_put_representation_limits(params, runner):
    cfg = McConfig.from_rate(1.0, 20, n_paths=20_000, seed=17)
    tiny = put_representation_check(params, cfg, 1e-6, runner=runner)
    assert tiny.direct == pytest.approx(0.0, abs=1e-6)
    assert tiny.representation == pytest.approx(0.0, abs=1e-6)
    large = put_representation_check(params, cfg, 1e3, runner=runner)
    assert large.passed
    assert large.direct == pytest.approx(1e3 - math.exp(params.x0), rel=1e-3)


def test_call_representation(params, runner):
    cfg = McConfig.from_rate(1.0, 20, n_paths=50_000, seed=23)
    report = call_representation_check(params, cfg, 1.0, runner=runner)
    assert report.passed


def test_match_configuration():
    assert match_configuration(Measure.PRICING, PLUS_ONE, Direction.BELOW) is LimitKind.PUT_TAIL
    assert match_configuration(Measure.SHARE, MINUS_ONE, Direction.ABOVE) is LimitKind.CALL_TAIL
    assert match_configuration(Measure.SHARE, MINUS_ONE, Direction.BELOW) is LimitKind.MID_TAIL
    with pytest.raises(InvalidConfiguration):
        match_configuration(Measure.SHARE, PLUS_ONE, Direction.BELOW)
    with pytest.raises(InvalidConfiguration):
        match_configuration(Measure.PRICING, Perturbation.parse("+exp:2"), Direction.BELOW)


def test_event_interval():
    assert event_interval(-0.5, Direction.BELOW) == event_interval(-0.5, Direction.BELOW).interior()
    assert event_interval(0.5, Direction.ABOVE).contains(0.6)
    assert not event_interval(0.5, Direction.ABOVE).contains(0.5)


def test_study_rejects_bad_setups(params):
    cfg = McConfig.from_rate(5.0, 20, n_paths=1000)
    with pytest.raises(InvalidConfiguration):
        convergence_study(params, cfg.with_measure(Measure.SHARE), -0.15, PLUS_ONE, Direction.BELOW, [5.0])
    with pytest.raises(OutOfTheoremRange):
        convergence_study(params, cfg, 0.2, PLUS_ONE, Direction.BELOW, [5.0])
    with pytest.raises(GateRefused):
        convergence_study(
            params, cfg, -0.15, PLUS_ONE, Direction.BELOW, [5.0], method=LimitMethod.GARTNER_ELLIS
        )
    with pytest.raises(ValueError):
        convergence_study(params, cfg, -0.15, PLUS_ONE, Direction.BELOW, [10.0, 5.0])


def test_study_rows(params, runner):
    cfg = McConfig.from_rate(5.0, 20, n_paths=5000, seed=1)
    table = convergence_study(params, cfg, -0.15, PLUS_ONE, Direction.BELOW, [5.0, 10.0], runner=runner)
    assert table.kind is LimitKind.PUT_TAIL
    assert table.proven
    assert [row.t for row in table.rows] == [5.0, 10.0]
    assert all(row.theoretical_limit == limit_put_tail(params, -0.15) for row in table.rows)


def test_study_with_no_hits(params, runner):
    cfg = McConfig.from_rate(5.0, 20, n_paths=1000, seed=1)
    table = convergence_study(params, cfg, -3.0, PLUS_ONE, Direction.BELOW, [5.0, 10.0], runner=runner)
    assert all(row.gap is None and row.scaled_log == -math.inf for row in table.rows)
    assert table.final_gap is None
    assert not table.gap_decreasing


def test_forced_study_without_matching_limit(params, runner):
    cfg = McConfig.from_rate(5.0, 20, n_paths=2000, seed=1)
    table = convergence_study(
        params, cfg, -0.15, Perturbation(), Direction.BELOW, [5.0], force=True, runner=runner
    )
    assert table.kind is None
    assert not table.proven
    assert table.theoretical_limit == pytest.approx(limit_put_tail(params, -0.15))


def test_gartner_ellis_study_on_smooth_family(params, runner):
    cfg = McConfig.from_rate(5.0, 20, n_paths=2000, seed=1)
    table = convergence_study(
        params,
        cfg,
        -0.15,
        Perturbation.parse("+exp:4"),
        Direction.BELOW,
        [5.0],
        method=LimitMethod.GARTNER_ELLIS,
        runner=runner
    )
    assert table.proven
    assert table.theoretical_limit == pytest.approx(limit_put_tail(params, -0.15))


@pytest.mark.slow
def test_put_tail_convergence(params):
    cfg = McConfig.from_rate(25.0, 20, n_paths=200_000, seed=2024)
    table = convergence_study(
        params, cfg, -0.15, PLUS_ONE, Direction.BELOW, [25.0, 50.0, 100.0], runner=BlockRunner(max_workers=8)
    )
    assert table.gap_decreasing
    assert table.final_gap <= 0.05


@pytest.mark.slow
@pytest.mark.parametrize("x, direction", [(0.15, Direction.ABOVE), (0.0, Direction.BELOW)])
def test_share_tail_convergence(params, x, direction):
    cfg = McConfig.from_rate(25.0, 20, n_paths=200_000, seed=2024, measure=Measure.SHARE)
    table = convergence_study(
        params, cfg, x, MINUS_ONE, direction, [25.0, 50.0, 100.0], runner=BlockRunner(max_workers=8)
    )
    assert table.final_gap <= 0.05


@pytest.mark.slow
def test_law_of_large_numbers_long_horizon(params):
    runner = BlockRunner(max_workers=8)
    for measure, target in ((Measure.PRICING, -0.05), (Measure.SHARE, 0.05)):
        cfg = McConfig.from_rate(50.0, 20, n_paths=100_000, seed=8, measure=measure)
        z = simulate_terminal(params, cfg, runner).log_return / cfg.t
        assert abs(np.mean(z) - target) <= 3 * np.std(z, ddof=1) / math.sqrt(z.shape[0]) + 2e-4
