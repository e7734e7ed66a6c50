import dataclasses
import json

import pytest

from hamsq import __version__
from hamsq.catalog import GraphFamily, complete, cycle, star
from hamsq.core import encode_graph6
from hamsq.errors import Graph6ParseError
from hamsq.reports import (
    Discrepancy,
    RunConfig,
    VerificationReport,
    config_fingerprint,
    export_graphs,
    export_report,
    import_graphs,
    make_report,
    report_from_json,
    report_to_json,
    report_to_markdown,
    write_report,
)


def sample_report(**overrides):
    base = dict(
        target="lemma-1.11",
        n_range=(6, 15),
        instances_checked=123,
        discrepancies=(),
        wall_time=1.25,
        config_hash="ab" * 32,
        claim="every class at this level embeds or contains a listed core",
        breakdown=(("contains_core", 23), ("embeds", 100)),
    )
    base.update(overrides)
    return make_report(**base)


class TestRunConfig:
    def test_defaults_valid(self):
        cfg = RunConfig()
        # unset order range means "target decides"
        assert cfg.n_min is None and cfg.n_max is None and cfg.tol == 1e-9

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"n_min": -1},
            {"n_max": -4},
            {"n_min": 10, "n_max": 9},
            {"t_max": -2},
            {"max_members": 0},
            {"budget_seconds": 0},
            {"tol": 0.0},
            {"workers": 0},
        ],
    )
    def test_rejects_bad_fields(self, kwargs):
        with pytest.raises(ValueError):
            RunConfig(**kwargs)

    def test_fingerprint_stable_and_sensitive(self):
        a = RunConfig(n_min=6, n_max=13)
        b = RunConfig(n_min=6, n_max=13)
        c = RunConfig(n_min=6, n_max=14)
        assert a.fingerprint() == b.fingerprint()
        assert a.fingerprint() != c.fingerprint()
        assert len(a.fingerprint()) == 64


class TestFingerprint:
    def test_key_order_irrelevant(self):
        assert config_fingerprint({"a": 1, "b": 2}) == config_fingerprint({"b": 2, "a": 1})

    def test_value_sensitivity(self):
        assert config_fingerprint({"a": 1}) != config_fingerprint({"a": 2})


class TestReportType:
    def test_status_derivation(self):
        assert sample_report().status == "confirmed"
        bad = sample_report(discrepancies=(Discrepancy("E}PG", "unexplained"),))
        assert bad.status == "refuted"
        cut = sample_report(partial=True)
        assert cut.status == "partial"
        # a failure found mid-sweep is still a failure
        both = sample_report(discrepancies=(Discrepancy("E}PG", "unexplained"),), partial=True)
        assert both.status == "refuted"

    def test_confirmed_cannot_carry_discrepancies(self):
        with pytest.raises(ValueError):
            VerificationReport(
                target="fact-1.7",
                n_range=(6, 30),
                instances_checked=25,
                status="confirmed",
                discrepancies=(Discrepancy("E}PG", "unexplained"),),
                wall_time=0.0,
                tool_version=__version__,
                config_hash="0" * 64,
            )

    def test_unknown_status_rejected(self):
        with pytest.raises(ValueError):
            VerificationReport(
                target="fact-1.7",
                n_range=(6, 30),
                instances_checked=25,
                status="maybe",
                discrepancies=(),
                wall_time=0.0,
                tool_version=__version__,
                config_hash="0" * 64,
            )

    def test_tool_version_stamped(self):
        assert sample_report().tool_version == __version__


class TestSerialization:
    def test_round_trip(self):
        rep = sample_report(discrepancies=(Discrepancy("E}PG", "unexplained"),), partial=True)
        again = report_from_json(report_to_json(rep))
        assert again == rep

    def test_round_trip_audit_and_details(self):
        rep = sample_report(
            audit=(Discrepancy("D{c", "figure-defined obstruction, compare by hand"),),
            details=(("optimum_mu", "16.033320905848"), ("route", "core-growth")),
        )
        assert rep.status == "confirmed"  # audit entries are not failures
        again = report_from_json(report_to_json(rep))
        assert again == rep
        assert again.audit[0].graph6 == "D{c"
        assert dict(again.details)["route"] == "core-growth"

    def test_byte_identical_modulo_wall_time(self):
        a = report_to_json(sample_report(wall_time=1.0))
        b = report_to_json(sample_report(wall_time=2.0))
        da, db = json.loads(a), json.loads(b)
        assert da.pop("wall_time") != db.pop("wall_time")
        assert da == db
        assert report_to_json(sample_report(wall_time=1.0)) == a

    def test_snake_case_keys(self):
        payload = json.loads(report_to_json(sample_report()))
        for key in ("n_range", "instances_checked", "config_hash", "tool_version", "wall_time"):
            assert key in payload

    def test_markdown_contents(self):
        rep = sample_report(discrepancies=(Discrepancy("E}PG", "unexplained"),))
        md = report_to_markdown(rep)
        assert "# lemma-1.11" in md
        assert "E}PG" in md
        assert "refuted" in md
        assert "embeds: 100" in md

    def test_markdown_details_and_audit_sections(self):
        plain = report_to_markdown(sample_report())
        assert "## Details" not in plain and "## Audit" not in plain
        rich = report_to_markdown(
            sample_report(
                audit=(Discrepancy("D{c", "emitted for manual audit"),),
                details=(("optimum_mu", "16.033320905848"),),
            )
        )
        assert "- optimum_mu: 16.033320905848" in rich
        assert "## Audit trail" in rich and "D{c" in rich

    def test_export_dispatch(self):
        rep = sample_report()
        assert export_report(rep, "json") == report_to_json(rep)
        assert export_report(rep, "markdown") == report_to_markdown(rep)
        with pytest.raises(ValueError):
            export_report(rep, "yaml")

    def test_write_report(self, tmp_path):
        rep = sample_report()
        jp, mp = write_report(rep, tmp_path / "out")
        assert report_from_json(jp.read_text()) == rep
        assert mp.read_text() == report_to_markdown(rep)


class TestGraphIO:
    def test_import_mixed_lines(self, tmp_path):
        p = tmp_path / "zoo.g6"
        p.write_text(
            "# a comment\n"
            "\n"
            f"{encode_graph6(complete(4))}\n"
            f"pentagon\t{encode_graph6(cycle(5))}\n"
        )
        fam = import_graphs(p)
        assert isinstance(fam, GraphFamily)
        assert len(fam) == 2
        assert fam.contains_iso(complete(4))
        assert fam.contains_iso(cycle(5))
        named = dict(zip(fam.names, fam.members))
        assert any(name.endswith(":3") for name in fam.names)
        assert any(name.startswith("pentagon") and ":4)" in name for name in fam.names)

    def test_import_error_carries_line(self, tmp_path):
        p = tmp_path / "bad.g6"
        p.write_text("Cx\n??bogus!!!\n")
        with pytest.raises(Graph6ParseError) as ei:
            import_graphs(p)
        assert f"{p}:2" in str(ei.value)

    def test_export_then_import(self, tmp_path):
        fam = GraphFamily(members=(complete(3), star(5)), names=("a", "b"))
        path = export_graphs(fam, tmp_path / "fam.g6")
        again = import_graphs(path)
        assert set(again.codes) == set(fam.codes)
