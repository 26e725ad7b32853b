"""Delimited reports and rendered figures for check and verify runs.

Files go into a caller-chosen directory: exact rational values in
tab-separated tables, float renderings of the same data as PNG figures.
The tables carry the truth; the figures are for eyeballing shape (axiom
margins, the geometric collapse of A along the tree).
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .canonical import CanonicalModel, label_depth
from .concepts import ConceptAssertion, Gci
from .interp import KbReport
from .parser import print_concept
from .reduction import CONCEPT_NAMES

__all__ = ["write_check_report", "write_node_report"]


def _axiom_text(axiom) -> str:
    if isinstance(axiom, Gci):
        return f"(gci {print_concept(axiom.lhs)} {print_concept(axiom.rhs)} {axiom.grade})"
    if isinstance(axiom, ConceptAssertion):
        return f"(instance {axiom.individual} {print_concept(axiom.concept)} {axiom.grade})"
    return f"(related {axiom.subject} {axiom.target} {axiom.role} {axiom.grade})"


def write_check_report(report: KbReport, directory: str | Path) -> list[Path]:
    """Write axioms.tsv plus a bar figure of axiom values vs grades."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    table = directory / "axioms.tsv"
    with table.open("w", newline="") as handle:
        writer = csv.writer(handle, delimiter="\t", lineterminator="\n")
        writer.writerow(["index", "satisfied", "value", "grade", "axiom"])
        for position, check in enumerate(report.checks, start=1):
            writer.writerow(
                [
                    position,
                    "yes" if check.satisfied else "no",
                    str(check.value),
                    str(check.axiom.grade),
                    _axiom_text(check.axiom),
                ]
            )

    figure = directory / "axiom_values.png"
    indices = range(1, len(report.checks) + 1)
    values = [float(check.value.value) for check in report.checks]
    grades = [float(check.axiom.grade.value) for check in report.checks]
    colors = ["tab:blue" if check.satisfied else "tab:red" for check in report.checks]
    fig, ax = plt.subplots(figsize=(max(6.0, 0.3 * len(values) + 2.0), 4.0))
    ax.bar(indices, values, color=colors, label="value")
    ax.scatter(indices, grades, color="black", marker="_", s=90, label="grade")
    ax.set_xlabel("axiom index")
    ax.set_ylabel("degree")
    ax.set_ylim(0.0, 1.05)
    ax.set_title("axiom values (bars) vs required grades (ticks)")
    ax.legend(loc="lower right")
    fig.tight_layout()
    fig.savefig(figure, dpi=120)
    plt.close(fig)
    return [table, figure]


def write_node_report(model: CanonicalModel, directory: str | Path) -> list[Path]:
    """Write nodes.tsv plus a figure of V/W values and the decay of A."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    interpretation = model.interpretation
    table = directory / "nodes.tsv"
    with table.open("w", newline="") as handle:
        writer = csv.writer(handle, delimiter="\t", lineterminator="\n")
        writer.writerow(["node", "depth"] + list(CONCEPT_NAMES) + ["vw_gap"])
        for label in interpretation.domain:
            values = model.values_at(label)
            gap = abs(values["V"].value - values["W"].value)
            writer.writerow(
                [label, label_depth(label)]
                + [str(values[name]) for name in CONCEPT_NAMES]
                + [str(gap)]
            )

    figure = directory / "node_values.png"
    labels = list(interpretation.domain)
    positions = range(len(labels))
    v_values = [float(interpretation.concept_value("V", label).value) for label in labels]
    w_values = [float(interpretation.concept_value("W", label).value) for label in labels]
    a_values = [float(interpretation.concept_value("A", label).value) for label in labels]
    fig, (top, bottom) = plt.subplots(
        2, 1, figsize=(max(6.0, 0.12 * len(labels) + 2.0), 6.0), sharex=True
    )
    top.plot(positions, v_values, ".", label="V")
    top.plot(positions, w_values, "x", label="W")
    top.set_ylabel("degree")
    top.set_title("word-encoding values per node (breadth-first order)")
    top.legend(loc="upper left")
    bottom.semilogy(positions, a_values, ".", color="tab:green")
    bottom.set_xlabel("node index")
    bottom.set_ylabel("A (log scale)")
    bottom.set_title("decay of A with tree depth")
    fig.tight_layout()
    fig.savefig(figure, dpi=120)
    plt.close(fig)
    return [table, figure]
