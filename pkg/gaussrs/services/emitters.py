"""
把 RunReport 编码为表格、CSV 或 JSON；三种格式中的数值都先截断到固定有效数字。
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Optional

from gaussrs.core.config import config
from gaussrs.schemas.run import OutputFormat, RunReport

CSV_HEADER = ["kind", "id", "n", "value", "error", "order", "rigorous", "note"]


def round_sig(value: Optional[float], digits: Optional[int] = None) -> Optional[float]:
    if value is None:
        return None
    digits = config.significant_digits if digits is None else digits
    return float(f"{value:.{digits}g}")


def format_number(value: Optional[float]) -> str:
    rounded = round_sig(value)
    return "" if rounded is None else repr(rounded)


def to_document(report: RunReport) -> dict[str, Any]:
    """JSON 文档结构；sweep 只在请求时出现。"""
    document: dict[str, Any] = {
        "rule": round_sig(report.rule),
        "composite": [{"n": row.n, "value": round_sig(row.value)} for row in report.composite],
        "baselines": {name: round_sig(value) for name, value in report.baselines.items()},
        "oracle": round_sig(report.oracle),
        "error": round_sig(report.error),
        "bounds": [
            {
                "id": entry.theorem_id,
                "value": round_sig(entry.bound_value),
                "rigorous": entry.rigorous,
                "note": entry.applicability_note,
            }
            for entry in report.bounds
        ],
    }
    if report.sweep is not None:
        document["sweep"] = [
            {"n": row.n, "value": round_sig(row.value), "error": round_sig(row.error), "order": round_sig(row.order)}
            for row in report.sweep
        ]
    return document


def emit_json(report: RunReport) -> str:
    return json.dumps(to_document(report), indent=2, ensure_ascii=False) + "\n"


def emit_csv(report: RunReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerow(["rule", "", 1, format_number(report.rule), "", "", "", ""])
    for row in report.composite:
        writer.writerow(["composite", "", row.n, format_number(row.value), "", "", "", ""])
    for name, value in report.baselines.items():
        writer.writerow(["baseline", name, "", format_number(value), "", "", "", ""])
    if report.oracle is not None:
        writer.writerow(["oracle", "", "", format_number(report.oracle), "", "", "", ""])
        writer.writerow(["error", "", "", format_number(report.error), "", "", "", ""])
    for entry in report.bounds:
        writer.writerow(
            [
                "bound",
                entry.theorem_id,
                "",
                format_number(entry.bound_value),
                "",
                "",
                str(entry.rigorous).lower(),
                entry.applicability_note,
            ]
        )
    for row in report.sweep or []:
        writer.writerow(
            ["sweep", "", row.n, format_number(row.value), format_number(row.error), format_number(row.order), "", ""]
        )
    return buffer.getvalue()


def emit_table(report: RunReport) -> str:
    lines = [f"{'rule':<12}{format_number(report.rule)}"]
    for row in report.composite:
        lines.append(f"{'composite':<12}n={row.n:<8}{format_number(row.value)}")
    for name, value in report.baselines.items():
        lines.append(f"{name:<12}{format_number(value)}")
    if report.oracle is not None:
        lines.append(f"{'oracle':<12}{format_number(report.oracle)}")
        lines.append(f"{'error':<12}{format_number(report.error)}")
    if report.bounds:
        lines.append("")
        lines.append(f"{'bound':<12}{'value':<24}{'rigorous':<10}note")
        for entry in report.bounds:
            value = format_number(entry.bound_value) or "-"
            rigorous = "yes" if entry.rigorous else "no"
            lines.append(f"{entry.theorem_id:<12}{value:<24}{rigorous:<10}{entry.applicability_note}")
    if report.sweep is not None:
        lines.append("")
        lines.append(f"{'n':<8}{'value':<24}{'error':<24}order")
        for row in report.sweep:
            lines.append(
                f"{row.n:<8}{format_number(row.value):<24}{format_number(row.error) or '-':<24}"
                f"{format_number(row.order)}"
            )
    return "\n".join(lines) + "\n"


EMITTERS = {"table": emit_table, "csv": emit_csv, "json": emit_json}


def emit(report: RunReport, fmt: OutputFormat) -> str:
    return EMITTERS[fmt](report)
