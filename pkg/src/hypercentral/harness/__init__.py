"""Catalog, suites, worked examples, reports and the command line."""

from .catalog import Catalog, build_catalog
from .examples import EXAMPLE_IDS, IntMat2, paper_example
from .report import Report, emit_report
from .specs import ConstructionSpec, parse_spec, ring_from_spec
from .suite import IMPLICATIONS, SUITE_IDS, construction_findings, run_implication_suite

__all__ = [
    "Catalog",
    "ConstructionSpec",
    "EXAMPLE_IDS",
    "IMPLICATIONS",
    "IntMat2",
    "Report",
    "SUITE_IDS",
    "build_catalog",
    "construction_findings",
    "emit_report",
    "paper_example",
    "parse_spec",
    "ring_from_spec",
    "run_implication_suite",
]
