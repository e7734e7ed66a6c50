import json

import pytest

from hamsq.harness import CLAIMS, resolve_range, run
from hamsq.reports import RunConfig, TARGETS, report_to_json


class TestWindowResolution:
    def test_defaults(self):
        assert resolve_range("fact-1.7", RunConfig()) == (6, 30)
        assert resolve_range("lemma-1.11", RunConfig()) == (6, 15)
        assert resolve_range("theorem-1.2", RunConfig()) == (18, 18)
        assert resolve_range("prop-1.5", RunConfig()) == (7, 12)

    def test_explicit_window(self):
        assert resolve_range("fact-1.7", RunConfig(n_min=9, n_max=11)) == (9, 11)

    def test_below_lower_bound_rejected(self):
        with pytest.raises(ValueError):
            resolve_range("fact-1.7", RunConfig(n_min=5))
        with pytest.raises(ValueError):
            resolve_range("theorem-1.1", RunConfig(n_min=17, n_max=18))

    def test_above_upper_bound_rejected(self):
        with pytest.raises(ValueError):
            resolve_range("lemma-1.11", RunConfig(n_max=16))
        with pytest.raises(ValueError):
            resolve_range("lemma-1.13", RunConfig(n_max=19))

    def test_empty_window_rejected(self):
        # n_min above the default high end leaves nothing to sweep
        with pytest.raises(ValueError):
            resolve_range("fact-1.7", RunConfig(n_min=31))
        # n_min > n_max is caught by RunConfig itself
        with pytest.raises(ValueError):
            RunConfig(n_min=12, n_max=10)

    def test_unknown_target(self):
        with pytest.raises(ValueError):
            run("lemma-9.9")


class TestClaims:
    def test_every_target_has_a_claim(self):
        assert set(CLAIMS) == set(TARGETS)
        for text in CLAIMS.values():
            assert len(text) > 40


class TestSmallWindows:
    # each target on a window small enough for the default test run

    def test_fact_1_7(self):
        rep = run("fact-1.7", RunConfig(n_min=6, n_max=14))
        assert rep.status == "confirmed"
        assert rep.instances_checked == 9

    def test_fact_1_7_single_order(self):
        rep = run("fact-1.7", RunConfig(n_min=9, n_max=9))
        assert rep.status == "confirmed"
        assert rep.instances_checked == 1

    def test_lemma_1_6(self):
        rep = run("lemma-1.6", RunConfig(n_min=6, n_max=9))
        assert rep.status == "confirmed"
        assert dict(rep.breakdown)["n=08"] == 5  # K(8, 3) has five classes

    def test_lemma_1_11(self):
        rep = run("lemma-1.11", RunConfig(n_min=6, n_max=9))
        assert rep.status == "confirmed"
        bd = dict(rep.breakdown)
        assert bd["unexplained"] == 0
        # the figure-defined member is surfaced for audit even on success
        assert any("F5" in a.classification for a in rep.audit)

    def test_lemma_1_12_small(self):
        rep = run("lemma-1.12", RunConfig(n_min=15, n_max=15, max_members=500))
        assert rep.status == "partial"  # capped, so no verdict on the rest
        assert rep.instances_checked == 500

    def test_lemma_1_13(self):
        rep = run("lemma-1.13", RunConfig(n_min=6, n_max=9))
        assert rep.status == "confirmed"
        assert dict(rep.breakdown)["unexplained"] == 0

    def test_theorem_1_4(self):
        rep = run("theorem-1.4", RunConfig(n_min=6, n_max=9))
        assert rep.status == "confirmed"
        details = dict(rep.details)
        assert details["optimum n=06"] == "13"
        assert details["optimum n=08"] == "25"

    def test_prop_1_5(self):
        rep = run("prop-1.5", RunConfig(n_min=7, n_max=9))
        assert rep.status == "confirmed"
        assert rep.instances_checked > 0

    def test_prop_1_5_t_capped(self):
        rep = run("prop-1.5", RunConfig(n_min=9, n_max=9, t_max=2))
        assert rep.status == "partial"


class TestGadgetFallback:
    def test_lemma_1_11_structural(self, tmp_path):
        empty = tmp_path / "none.g6"
        empty.write_text("")
        rep = run("lemma-1.11", RunConfig(n_min=9, n_max=9, gadget_path=str(empty)))
        assert rep.status == "partial"
        assert not rep.discrepancies
        details = dict(rep.details)
        assert "F5" in details["structural n=09"]
        # the unmatched enumerated core is emitted for manual comparison
        assert len(rep.audit) == 1
        assert rep.audit[0].graph6 == "D{c"

    def test_lemma_1_11_structural_confirmed_off_figure_orders(self, tmp_path):
        empty = tmp_path / "none.g6"
        empty.write_text("")
        rep = run("lemma-1.11", RunConfig(n_min=10, n_max=10, gadget_path=str(empty)))
        assert rep.status == "confirmed"  # F families carry no figure member at 10

    def test_lemma_1_13_structural(self, tmp_path):
        empty = tmp_path / "none.g6"
        empty.write_text("")
        rep = run("lemma-1.13", RunConfig(n_min=10, n_max=10, gadget_path=str(empty)))
        assert rep.status == "partial"
        assert not rep.discrepancies
        assert "G1" in dict(rep.details)["structural n=10"]
        assert rep.audit[0].graph6 == "E}PG"


class TestBudgetAndDeterminism:
    def test_budget_yields_partial_with_resume_token(self):
        rep = run("lemma-1.6", RunConfig(n_min=6, n_max=13, budget_seconds=0.02))
        assert rep.status == "partial"
        assert "resume_token" in dict(rep.details)

    def test_reports_identical_modulo_wall_time(self):
        cfg = lambda: RunConfig(n_min=6, n_max=8)
        a = json.loads(report_to_json(run("lemma-1.13", cfg())))
        b = json.loads(report_to_json(run("lemma-1.13", cfg())))
        a.pop("wall_time")
        b.pop("wall_time")
        assert a == b

    def test_config_hash_distinguishes_windows(self):
        a = run("fact-1.7", RunConfig(n_min=6, n_max=8))
        b = run("fact-1.7", RunConfig(n_min=6, n_max=9))
        assert a.config_hash != b.config_hash

    def test_t_max_skip_goes_partial(self):
        rep = run("lemma-1.6", RunConfig(n_min=6, n_max=7, t_max=1))
        assert rep.status == "partial"
        assert rep.instances_checked == 0
        assert any(k.startswith("skipped") for k, _ in rep.details)

    def test_report_written_when_out_dir_set(self, tmp_path):
        rep = run("fact-1.7", RunConfig(n_min=6, n_max=6, out_dir=str(tmp_path)))
        assert rep.status == "confirmed"
        assert (tmp_path / "fact-1.7.json").exists()
        assert (tmp_path / "fact-1.7.md").exists()


class TestSpectralTarget:
    # n=18 is the stated order; the grow route keeps this in test range
    def test_theorem_1_2_details(self):
        rep = run("theorem-1.2", RunConfig())
        assert rep.status == "confirmed"
        details = dict(rep.details)
        assert details["extremal n=18"] == "S15"
        mu = float(details["optimum_mu n=18"])
        assert mu > 16
        assert float(details["margin n=18"]) > 1e-6

    def test_theorem_1_1_buckets(self):
        rep = run("theorem-1.1", RunConfig())
        assert rep.status == "confirmed"
        bd = dict(rep.breakdown)
        assert bd["exceptional-union"] == 2
        assert bd["contains-terminal-star"] + 2 == bd["n=18"]

    def test_lemma_1_14(self):
        rep = run("lemma-1.14", RunConfig())
        assert rep.status == "confirmed"
        assert dict(rep.breakdown)["exceptional-union"] == 2

    def test_theorem_1_3(self):
        rep = run("theorem-1.3", RunConfig())
        assert rep.status == "confirmed"
        bd = dict(rep.breakdown)
        assert bd["rational-orders"] == 10**6 - 17
        assert bd["double-star-orders"] == 183
        assert bd["closure-orders"] == 34
