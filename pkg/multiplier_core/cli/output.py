"""
Writing tables and reports

Floats are written with 17 significant digits so identical runs produce
identical bytes.
"""
from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Optional, TextIO

from utils import logger

from .types import RunReport, Table


def format_cell(value: Any) -> str:
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return format(value, '.17g')
    if isinstance(value, (list, tuple)):
        return ';'.join(format_cell(v) for v in value)
    return str(value)


def table_to_csv(table: Table) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(table.header)
    for row in table.rows:
        writer.writerow([format_cell(v) for v in row])
    return buffer.getvalue()


def table_to_json(table: Table) -> str:
    records = [dict(zip(table.header, row)) for row in table.rows]
    return json.dumps(records, sort_keys=True, indent=2, ensure_ascii=False) + '\n'


def _write(text: str, path: Optional[str], stream: Optional[TextIO] = None) -> None:
    if path is None:
        (stream or sys.stdout).write(text)
        return
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding='utf-8')
    logger.info(f"📝 Wrote {target}")


def write_table(table: Table, path: str) -> None:
    """CSV for a .csv path, JSON records otherwise."""
    text = table_to_csv(table) if Path(path).suffix.lower() == '.csv' else table_to_json(table)
    _write(text, path)


def write_report(report: RunReport, path: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
    _write(report.to_json(), path, stream)
