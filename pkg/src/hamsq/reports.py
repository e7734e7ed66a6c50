"""Verification report records, deterministic serialization, graph6 file IO.

Reports are plain frozen dataclasses rendered to JSON and Markdown.  Two runs
with the same configuration must produce byte-identical JSON except for the
wall_time field, so serialization sorts keys and the configuration hash is
computed over a canonical dump that never includes timing.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Optional

from . import __version__
from .catalog import GraphFamily
from .core import Graph, decode_graph6, encode_graph6
from .errors import Graph6ParseError
from .iso import canonical_form

TARGETS = (
    "fact-1.7",
    "lemma-1.6",
    "lemma-1.11",
    "lemma-1.12",
    "lemma-1.13",
    "lemma-1.14",
    "theorem-1.1",
    "theorem-1.2",
    "theorem-1.3",
    "theorem-1.4",
    "prop-1.5",
)

_STATUSES = ("confirmed", "refuted", "partial")


@dataclass(frozen=True)
class Discrepancy:
    """One offending graph, re-checkable from the graph6 payload alone."""

    graph6: str
    classification: str


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one verification run.

    ``discrepancies`` are failures and force a non-confirmed status.  ``audit``
    entries are informational graph6 payloads (for example figure-defined
    obstructions emitted for manual comparison) and never affect the status.
    ``details`` holds free-form key/value strings such as printed spectral
    radii or resume tokens.
    """

    target: str
    n_range: tuple[int, int]
    instances_checked: int
    status: str
    discrepancies: tuple[Discrepancy, ...]
    wall_time: float
    tool_version: str
    config_hash: str
    claim: str = ""
    breakdown: tuple[tuple[str, int], ...] = ()
    audit: tuple[Discrepancy, ...] = ()
    details: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        if self.status not in _STATUSES:
            raise ValueError(f"status must be one of {_STATUSES}, got {self.status!r}")
        # confirmed and discrepancy-bearing are mutually exclusive by contract
        if self.status == "confirmed" and self.discrepancies:
            raise ValueError("a confirmed report cannot carry discrepancies")


@dataclass(frozen=True)
class RunConfig:
    """Knobs for a verification run.

    ``n_min``/``n_max`` left as None mean "use the target's own default
    order range"; each runner documents its window.
    """

    n_min: Optional[int] = None
    n_max: Optional[int] = None
    t_max: Optional[int] = None
    max_members: Optional[int] = None
    budget_seconds: Optional[float] = None
    tol: float = 1e-9
    gadget_path: Optional[str] = None
    workers: int = 1
    out_dir: Optional[str] = None

    def __post_init__(self):
        if self.n_min is not None and self.n_min < 0:
            raise ValueError(f"n_min must be nonnegative, got {self.n_min}")
        if self.n_max is not None and self.n_max < 0:
            raise ValueError(f"n_max must be nonnegative, got {self.n_max}")
        if self.n_min is not None and self.n_max is not None and self.n_max < self.n_min:
            raise ValueError(f"bad order range {self.n_min}..{self.n_max}")
        if self.t_max is not None and self.t_max < 0:
            raise ValueError(f"edge budget must be nonnegative, got {self.t_max}")
        if self.max_members is not None and self.max_members <= 0:
            raise ValueError(f"member cap must be positive, got {self.max_members}")
        if self.budget_seconds is not None and self.budget_seconds <= 0:
            raise ValueError(f"time budget must be positive, got {self.budget_seconds}")
        if self.tol <= 0:
            raise ValueError(f"tolerance must be positive, got {self.tol}")
        if self.workers < 1:
            raise ValueError(f"worker count must be positive, got {self.workers}")

    def fingerprint(self) -> str:
        return config_fingerprint(
            {
                "n_min": self.n_min,
                "n_max": self.n_max,
                "t_max": self.t_max,
                "max_members": self.max_members,
                "budget_seconds": self.budget_seconds,
                "tol": self.tol,
                "gadget_path": self.gadget_path,
                "workers": self.workers,
            }
        )


def config_fingerprint(params: Mapping) -> str:
    """sha256 over a canonical JSON dump of the parameters (never timing)."""
    blob = json.dumps(dict(params), sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(blob.encode()).hexdigest()


def make_report(
    target: str,
    n_range: tuple[int, int],
    instances_checked: int,
    discrepancies: tuple[Discrepancy, ...],
    wall_time: float,
    config_hash: str,
    claim: str = "",
    breakdown: tuple[tuple[str, int], ...] = (),
    partial: bool = False,
    audit: tuple[Discrepancy, ...] = (),
    details: tuple[tuple[str, str], ...] = (),
) -> VerificationReport:
    """Assemble a report, deriving status from discrepancies and completeness.

    A discrepancy refutes the claim even when the sweep was cut short, so
    refuted outranks partial; partial only means "no verdict on the rest".
    """
    status = "refuted" if discrepancies else ("partial" if partial else "confirmed")
    return VerificationReport(
        target=target,
        n_range=n_range,
        instances_checked=instances_checked,
        status=status,
        discrepancies=discrepancies,
        wall_time=wall_time,
        tool_version=__version__,
        config_hash=config_hash,
        claim=claim,
        breakdown=breakdown,
        audit=audit,
        details=details,
    )


# -- serialization -----------------------------------------------------------


def report_to_json(report: VerificationReport) -> str:
    payload = {
        "target": report.target,
        "n_range": list(report.n_range),
        "instances_checked": report.instances_checked,
        "status": report.status,
        "discrepancies": [
            {"graph6": d.graph6, "classification": d.classification}
            for d in report.discrepancies
        ],
        "wall_time": report.wall_time,
        "tool_version": report.tool_version,
        "config_hash": report.config_hash,
        "claim": report.claim,
        "breakdown": {name: count for name, count in report.breakdown},
        "audit": [
            {"graph6": d.graph6, "classification": d.classification}
            for d in report.audit
        ],
        "details": {key: value for key, value in report.details},
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def report_from_json(text: str) -> VerificationReport:
    raw = json.loads(text)
    return VerificationReport(
        target=raw["target"],
        n_range=(raw["n_range"][0], raw["n_range"][1]),
        instances_checked=raw["instances_checked"],
        status=raw["status"],
        discrepancies=tuple(
            Discrepancy(d["graph6"], d["classification"]) for d in raw["discrepancies"]
        ),
        wall_time=raw["wall_time"],
        tool_version=raw["tool_version"],
        config_hash=raw["config_hash"],
        claim=raw.get("claim", ""),
        breakdown=tuple(sorted(raw.get("breakdown", {}).items())),
        audit=tuple(
            Discrepancy(d["graph6"], d["classification"]) for d in raw.get("audit", [])
        ),
        details=tuple(sorted(raw.get("details", {}).items())),
    )


def report_to_markdown(report: VerificationReport) -> str:
    lines = [
        f"# {report.target}",
        "",
        f"**Claim.** {report.claim}" if report.claim else "**Claim.** (unspecified)",
        "",
        f"**Status:** {report.status}",
        f"**Orders:** {report.n_range[0]}..{report.n_range[1]}",
        f"**Instances checked:** {report.instances_checked}",
        f"**Tool version:** {report.tool_version}",
        f"**Config hash:** `{report.config_hash}`",
        f"**Wall time:** {report.wall_time:.3f} s",
    ]
    if report.breakdown:
        lines += ["", "## Breakdown", ""]
        lines += [f"- {name}: {count}" for name, count in report.breakdown]
    if report.details:
        lines += ["", "## Details", ""]
        lines += [f"- {key}: {value}" for key, value in report.details]
    lines += ["", "## Discrepancies", ""]
    if report.discrepancies:
        lines += ["| graph6 | classification |", "| --- | --- |"]
        lines += [f"| `{d.graph6}` | {d.classification} |" for d in report.discrepancies]
    else:
        lines.append("none")
    if report.audit:
        lines += ["", "## Audit trail", ""]
        lines += ["| graph6 | note |", "| --- | --- |"]
        lines += [f"| `{d.graph6}` | {d.classification} |" for d in report.audit]
    return "\n".join(lines) + "\n"


def export_report(report: VerificationReport, format: str) -> str:
    if format == "json":
        return report_to_json(report)
    if format == "markdown":
        return report_to_markdown(report)
    raise ValueError(f"unknown report format {format!r}; expected json or markdown")


def write_report(report: VerificationReport, out_dir: str | Path) -> tuple[Path, Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    json_path = out / f"{report.target}.json"
    md_path = out / f"{report.target}.md"
    json_path.write_text(report_to_json(report))
    md_path.write_text(report_to_markdown(report))
    return json_path, md_path


# -- graph6 file IO ----------------------------------------------------------


def import_graphs(path: str | Path) -> GraphFamily:
    """Read a graph6 file into a family, keeping line numbers as names.

    Lines may be bare graph6 codes or ``name<TAB>code``; blank lines and
    # comments are skipped.  Parse failures report the offending line.
    """
    p = Path(path)
    entries: list[tuple[str, Graph]] = []
    for lineno, line in enumerate(p.read_text().splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "\t" in line:
            name, code = line.split("\t", 1)
            name = f"{name.strip()} ({p.name}:{lineno})"
        else:
            name, code = f"{p.name}:{lineno}", line
        try:
            g = decode_graph6(code.strip())
        except Graph6ParseError as exc:
            raise Graph6ParseError(f"{p}:{lineno}: {exc.args[0]}", exc.offset) from exc
        entries.append((name, g))
    ordered = sorted(entries, key=lambda kv: canonical_form(kv[1]).code)
    return GraphFamily(
        members=tuple(g for _, g in ordered),
        names=tuple(nm for nm, _ in ordered),
    )


def export_graphs(family, path: str | Path) -> Path:
    """Write one graph6 code per line, in family order."""
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text("".join(encode_graph6(g) + "\n" for g in family))
    return p
