import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wlansurvey.fit import fit_log_distance, fit_many
from wlansurvey.propagation import LogDistanceModel, predict_rssi
from wlansurvey.survey import ApConfig, Sample, Survey
from wlansurvey.synth import SynthSpec, generate_survey

from oracles import ols_line_fit

AP = ApConfig(name="fit-ap", tx_power_dbm=23.0, frequency_mhz=2432.0)


def survey_on_line(model, distances, tx_power_dbm=23.0, location_id="line"):
    """Samples lying exactly on the model's mean line."""
    samples = [Sample(d, predict_rssi(model, tx_power_dbm, d)) for d in distances]
    ap = ApConfig(name="fit-ap", tx_power_dbm=tx_power_dbm, frequency_mhz=2432.0)
    return Survey(location_id, samples, ap)


class TestFitLogDistance:
    def test_noiseless_line_recovered_exactly(self):
        model = LogDistanceModel(pl_d0_db=40.0, d0_m=1.0, n=2.0)
        result = fit_log_distance(survey_on_line(model, [1.0, 2.0, 4.0, 8.0]), 1.0)
        assert result.model.n == pytest.approx(2.0, abs=1e-9)
        assert result.model.pl_d0_db == pytest.approx(40.0, abs=1e-9)
        assert result.model.sigma_db < 1e-9
        assert result.r_squared == pytest.approx(1.0, abs=1e-9)
        assert result.num_samples == 4
        assert len(result.residuals) == 4

    def test_two_point_fit_is_forced(self):
        # a two-point line with 34.5 dB/decade slope
        survey = Survey("room1", [Sample(1.0, -17.0), Sample(10.0, -51.5)], AP)
        result = fit_log_distance(survey, 1.0)
        assert result.model.n == pytest.approx(3.45, abs=1e-9)
        assert result.model.pl_d0_db == pytest.approx(40.0, abs=1e-9)
        assert result.model.sigma_db == 0.0
        assert result.r_squared == pytest.approx(1.0, abs=1e-12)

    def test_matches_closed_form_oracle_on_noisy_data(self):
        model = LogDistanceModel(pl_d0_db=40.0, d0_m=1.0, n=3.45, sigma_db=13.92)
        spec = SynthSpec(
            model=model,
            tx_power_dbm=23.0,
            num_samples=1000,
            d_min_m=1.0,
            d_max_m=30.0,
            seed=77,
        )
        survey = generate_survey(spec)
        result = fit_log_distance(survey, 1.0)

        x = [math.log10(s.distance_m / 1.0) for s in survey.samples]
        y = [23.0 - s.rssi_dbm for s in survey.samples]
        intercept, slope, sigma, r_squared = ols_line_fit(x, y)
        assert result.model.n == pytest.approx(slope / 10.0, abs=1e-9)
        assert result.model.pl_d0_db == pytest.approx(intercept, abs=1e-9)
        assert result.model.sigma_db == pytest.approx(sigma, abs=1e-9)
        assert result.r_squared == pytest.approx(r_squared, abs=1e-9)

    def test_insufficient_data(self):
        survey = Survey("single", [Sample(3.0, -50.0)], AP)
        with pytest.raises(ValueError, match="insufficient data"):
            fit_log_distance(survey, 1.0)

    def test_degenerate_abscissa(self):
        survey = Survey("flat", [Sample(3.0, -50.0), Sample(3.0, -55.0)], AP)
        with pytest.raises(ValueError, match="degenerate abscissa"):
            fit_log_distance(survey, 1.0)

    def test_duplicate_distances_are_fine(self):
        survey = Survey(
            "dups",
            [Sample(1.0, -17.0), Sample(1.0, -18.0), Sample(10.0, -51.0), Sample(10.0, -52.0)],
            AP,
        )
        result = fit_log_distance(survey, 1.0)
        assert result.num_samples == 4

    def test_rejects_bad_reference_distance(self):
        survey = Survey("ok", [Sample(1.0, -17.0), Sample(10.0, -51.5)], AP)
        with pytest.raises(ValueError):
            fit_log_distance(survey, 0.0)
        with pytest.raises(ValueError):
            fit_log_distance(survey, -1.0)


class TestFitMany:
    def test_empty_list_is_an_error(self):
        with pytest.raises(ValueError, match="no surveys"):
            fit_many([], 1.0)

    def test_singleton_consistency(self):
        model = LogDistanceModel(pl_d0_db=40.0, d0_m=1.0, n=2.0)
        survey = survey_on_line(model, [1.0, 3.0, 9.0])
        [entry] = fit_many([survey], 1.0)
        direct = fit_log_distance(survey, 1.0)
        assert entry.ok
        assert entry.location_id == "line"
        assert entry.result.model == direct.model
        assert entry.result.r_squared == direct.r_squared

    def test_failing_location_does_not_abort_others(self):
        model = LogDistanceModel(pl_d0_db=40.0, d0_m=1.0, n=2.0)
        good = survey_on_line(model, [1.0, 2.0, 4.0], location_id="good")
        bad = Survey("bad", [Sample(5.0, -60.0)], AP)
        entries = fit_many([bad, good], 1.0)
        assert [e.location_id for e in entries] == ["bad", "good"]
        assert not entries[0].ok
        assert "insufficient data" in entries[0].error
        assert entries[1].ok

    def test_recovers_six_location_fixture(self):
        # one synthetic survey per canonical environment (n, sigma_db)
        rows = [
            ("room1", 3.45, 13.92),
            ("room2", 3.36, 11.10),
            ("corridor1", 1.88, 9.45),
            ("corridor2", 1.09, 5.25),
            ("outdoor1", 0.48, 4.32),
            ("outdoor2", 0.30, 4.32),
        ]
        surveys = [
            generate_survey(
                SynthSpec(
                    model=LogDistanceModel(40.0, 1.0, n, sigma),
                    tx_power_dbm=23.0,
                    num_samples=2000,
                    d_min_m=1.0,
                    d_max_m=30.0,
                    seed=1000 + i,
                    location_id=loc,
                )
            )
            for i, (loc, n, sigma) in enumerate(rows)
        ]
        entries = fit_many(surveys, 1.0)
        assert [e.location_id for e in entries] == [loc for loc, _, _ in rows]
        for entry, (loc, n, sigma) in zip(entries, rows):
            assert entry.ok
            # oracle agreement on the same samples
            survey = next(s for s in surveys if s.location_id == loc)
            x = [math.log10(s.distance_m) for s in survey.samples]
            y = [23.0 - s.rssi_dbm for s in survey.samples]
            intercept, slope, osigma, _ = ols_line_fit(x, y)
            assert entry.result.model.n == pytest.approx(slope / 10.0, abs=1e-9)
            assert entry.result.model.sigma_db == pytest.approx(osigma, abs=1e-9)
            # statistical recovery of the generating parameters
            mean_x = sum(x) / len(x)
            se_n = (sigma / 10.0) / math.sqrt(sum((xi - mean_x) ** 2 for xi in x))
            assert abs(entry.result.model.n - n) < 3.0 * se_n
            assert abs(entry.result.model.sigma_db - sigma) / sigma < 0.05


# --- property tests ---------------------------------------------------------

line_models = st.builds(
    LogDistanceModel,
    pl_d0_db=st.floats(min_value=-20.0, max_value=100.0),
    d0_m=st.just(1.0),
    n=st.floats(min_value=-4.0, max_value=4.0),
)

distance_lists = st.lists(
    st.floats(min_value=0.1, max_value=100.0), min_size=2, max_size=40, unique=True
).filter(lambda ds: max(ds) / min(ds) >= 1.1)

# (distance, rssi) pairs with a well-conditioned abscissa
sample_lists = st.lists(
    st.tuples(
        st.floats(min_value=0.1, max_value=100.0),
        st.floats(min_value=-120.0, max_value=0.0),
    ),
    min_size=2,
    max_size=20,
    unique_by=lambda pair: pair[0],
).filter(lambda pairs: max(p[0] for p in pairs) / min(p[0] for p in pairs) >= 2.0)


def noisy_survey(pairs, location_id="noisy"):
    samples = [Sample(d, r) for d, r in pairs]
    return Survey(location_id, samples, AP)


@given(line_models, distance_lists)
def test_exact_recovery_property(model, distances):
    result = fit_log_distance(survey_on_line(model, distances), 1.0)
    assert result.model.n == pytest.approx(model.n, abs=1e-9)
    assert result.model.pl_d0_db == pytest.approx(model.pl_d0_db, abs=1e-9)
    assert result.model.sigma_db < 1e-9


@given(sample_lists, st.floats(min_value=0.01, max_value=100.0))
def test_distance_scale_covariance(pairs, k):
    base = fit_log_distance(noisy_survey(pairs), 1.0)
    scaled = fit_log_distance(noisy_survey([(k * d, r) for d, r in pairs]), 1.0)
    assert scaled.model.n == pytest.approx(base.model.n, abs=1e-9)
    assert scaled.model.pl_d0_db == pytest.approx(
        base.model.pl_d0_db - 10.0 * base.model.n * math.log10(k), abs=1e-9
    )


@given(sample_lists, st.floats(min_value=-40.0, max_value=40.0))
def test_path_loss_offset_covariance(pairs, c):
    base = fit_log_distance(noisy_survey(pairs), 1.0)
    # lowering every RSSI by c raises every measured path loss by c
    shifted = fit_log_distance(noisy_survey([(d, r - c) for d, r in pairs]), 1.0)
    assert shifted.model.pl_d0_db == pytest.approx(base.model.pl_d0_db + c, abs=1e-9)
    assert shifted.model.n == pytest.approx(base.model.n, abs=1e-9)
    assert shifted.model.sigma_db == pytest.approx(base.model.sigma_db, abs=1e-9)


@given(sample_lists, st.randoms(use_true_random=False))
def test_permutation_invariance(pairs, rng):
    base = fit_log_distance(noisy_survey(pairs), 1.0)
    shuffled_pairs = list(pairs)
    rng.shuffle(shuffled_pairs)
    shuffled = fit_log_distance(noisy_survey(shuffled_pairs), 1.0)
    assert shuffled.model.n == pytest.approx(base.model.n, abs=1e-9)
    assert shuffled.model.pl_d0_db == pytest.approx(base.model.pl_d0_db, abs=1e-9)
    assert shuffled.model.sigma_db == pytest.approx(base.model.sigma_db, abs=1e-9)


@given(sample_lists)
def test_residuals_sum_to_zero_and_r2_in_range(pairs):
    result = fit_log_distance(noisy_survey(pairs), 1.0)
    assert abs(sum(result.residuals)) < 1e-6
    assert abs(float(np.mean(result.residuals))) < 1e-6
    assert 0.0 <= result.r_squared <= 1.0
