import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from inducedseq.core import DegreeSequence, VertexSubset
from inducedseq.giant import (
    giant_predicate_fixed,
    giant_predicate_perc,
    joos_stats,
    joos_stats_naive,
    sequence_closeness_report,
)
from inducedseq.model_seq import build_dA, build_dH
from inducedseq.percolation import fixed_subset_pipeline
from inducedseq.sampler import SamplerConfig, spawn_seeds

sorted_seqs = st.lists(st.integers(0, 12), min_size=1, max_size=80).map(sorted)


class TestJoosStats:
    @pytest.mark.parametrize("d, jd, R, MJ", [
        ([1, 1], 2, 1, 2),
        ([3, 3, 3, 3], 1, 12, 12),
        ([2, 2, 2], 3, 2, 0),
        ([0, 0, 0], 3, 0, 0),
        ([1, 1, 3], 3, 3, 5),
    ])
    def test_examples(self, d, jd, R, MJ):
        s = joos_stats(d)
        assert (s.jd, s.R, s.MJ) == (jd, R, MJ)

    def test_unsorted(self):
        with pytest.raises(ValueError):
            joos_stats([3, 1])

    @settings(max_examples=300)
    @given(sorted_seqs)
    def test_matches_naive(self, values):
        assert joos_stats(values) == joos_stats_naive(values)

    @given(sorted_seqs)
    def test_identities(self, values):
        s = joos_stats(values)
        assert 1 <= s.jd <= s.n
        assert 0 <= s.R <= s.M
        assert s.MJ + 2 * values.count(2) == s.M
        assert s.R == sum(values[s.jd - 1:])
        assert s.R >= values[-1]

    @given(st.lists(st.integers(1, 12), min_size=1, max_size=80).map(sorted))
    def test_full_mass_iff_first_index(self, values):
        s = joos_stats(values)
        assert (s.R == s.M) == (s.jd == 1)

    def test_accepts_models(self):
        d = DegreeSequence([3, 3, 3, 3])
        assert joos_stats(d).R == 12
        assert joos_stats(build_dA(d, 0.5)).n == 2

    def test_well_behaved(self):
        s = joos_stats([3] * 100)
        assert s.well_behaved()
        assert not s.well_behaved(lam=1000)


class TestPredicates:
    def test_all_zero_model(self):
        d = DegreeSequence([1] * 20_000)
        v = giant_predicate_perc(build_dA(d, 1e-3), 0.01, d, 1e-3)
        assert v.stats.R == 0 and not v.hasGiant

    def test_regular_almost_everything(self):
        d = DegreeSequence([3] * 1000)
        S = VertexSubset.of(d, range(1, 1000))
        v = giant_predicate_fixed(build_dH(d, S), 0.01, d, S)
        assert v.hasGiant
        assert v.ratio == pytest.approx(1.0, abs=0.01)

    def test_sweep_crosses_near_half(self):
        d = DegreeSequence([3] * 20_000)
        ratios = {p: giant_predicate_perc(build_dA(d, p), 0.01, d, p).ratio
                  for p in np.round(np.arange(0.1, 0.91, 0.1), 2)}
        assert all(ratios[p] < 0.01 for p in (0.1, 0.2, 0.3, 0.4))
        assert all(ratios[p] >= 0.01 for p in (0.6, 0.7, 0.8, 0.9))

    def test_small_p_subcritical(self):
        d = DegreeSequence([3] * 20_000)
        v = giant_predicate_perc(build_dA(d, 1e-3), 0.01, d, 1e-3)
        assert not v.hasGiant

    def test_matchings_never_giant(self):
        d = DegreeSequence([1] * 100_000)
        for p in np.linspace(0.05, 0.95, 19):
            assert not giant_predicate_perc(build_dA(d, p), 0.01, d, p).hasGiant

    def test_monotone_in_eps(self, rng):
        d = DegreeSequence(rng.integers(1, 6, size=500))
        for p in (0.2, 0.5, 0.8):
            m = build_dA(d, p)
            flags = [giant_predicate_perc(m, e, d, p).hasGiant for e in np.geomspace(1e-4, 10, 30)]
            assert flags == sorted(flags, reverse=True)

    def test_bad_eps(self):
        d = DegreeSequence([3] * 10)
        with pytest.raises(ValueError):
            giant_predicate_perc(build_dA(d, 0.5), 0.0, d, 0.5)

    def test_to_dict_keys(self):
        d = DegreeSequence([3] * 10)
        out = giant_predicate_perc(build_dA(d, 0.5), 0.01, d, 0.5).to_dict()
        assert {"jd", "R", "MJ", "ratio", "hasGiant", "eps"} <= set(out)


class TestCloseness:
    def test_identical(self):
        d = DegreeSequence([1, 1, 1, 1])
        m = build_dH(d, VertexSubset.of(d, [1, 2]))
        r = sequence_closeness_report(m.entries, m)
        assert all(r[k] == 0 for k in ("deltaM", "deltaM2", "deltaR", "deltaMJ", "deltaN0"))

    def test_zero_count_identity(self, rng):
        d = DegreeSequence([4] * 200)
        S = VertexSubset.of(d, np.sort(rng.choice(np.arange(1, 201), 100, replace=False)))
        m = build_dH(d, S)
        out = fixed_subset_pipeline(d, S, SamplerConfig(seed=3))
        r = sequence_closeness_report(out.inducedSeq, m)
        assert r["deltaNonZero"] == -r["deltaN0"]

    def test_six_regular_median_gap(self, rng):
        n = 2000
        d = DegreeSequence([6] * n)
        S = VertexSubset.of(d, np.sort(rng.choice(np.arange(1, n + 1), n // 2, replace=False)))
        m = build_dH(d, S)
        gaps = []
        for seed in spawn_seeds(17, 200):
            out = fixed_subset_pipeline(d, S, SamplerConfig(seed=seed))
            gaps.append(abs(sequence_closeness_report(out.inducedSeq, m)["relR"]))
        assert np.median(gaps) <= 0.1
