import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Any

from src.domain.shared.custom_types import OutputFormat
from src.features.cli.application.dtos import ReportDocument

logger = logging.getLogger(__name__)


def _cell(value: Any) -> Any:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return value


def render_csv(report: ReportDocument) -> str:
    """Una fila por resultado; los valores anidados van como JSON en la celda."""
    rows = [{key: _cell(value) for key, value in result.items()} for result in report.results]
    fieldnames: list[str] = []
    for row in rows:
        fieldnames.extend(key for key in row if key not in fieldnames)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def render(report: ReportDocument, output_format: OutputFormat) -> str:
    if output_format == OutputFormat.CSV:
        return render_csv(report)
    return report.model_dump_json(indent=2) + "\n"


def write_report(
    report: ReportDocument, output_format: OutputFormat, out: str | None = None
) -> None:
    """Escribe el informe en `out` o, si no hay ruta, en la salida estandar."""
    text = render(report, output_format)
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info(f"Informe {report.subcommand} escrito en {path}")
