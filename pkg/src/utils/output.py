"""Report emission to stdout or a file named by --out"""

import csv
import io
import json
import os
import sys
import logging
from typing import Optional, TextIO

logger = logging.getLogger(__name__)

OUTPUT_MODES = ('human', 'json', 'csv')


class ReportWriter:
    """Writes JSON, CSV or plain-text reports to a single sink"""

    def __init__(self, mode: str = 'human', out_path: Optional[str] = None,
                 stream: Optional[TextIO] = None):
        if mode not in OUTPUT_MODES:
            raise ValueError(f"output mode must be one of {OUTPUT_MODES}, got {mode!r}")
        self.mode = mode
        self.out_path = out_path
        self.stream = stream
        self._handle: Optional[TextIO] = None

    def connect(self) -> TextIO:
        """Open the sink: the --out file if given, else the stream (stdout by default)"""
        if self._handle is not None:
            return self._handle
        if self.out_path:
            directory = os.path.dirname(self.out_path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            self._handle = open(self.out_path, 'w', encoding='utf-8', newline='')
            logger.info(f"Writing report to {self.out_path}")
        else:
            self._handle = self.stream or sys.stdout
        return self._handle

    def write_json(self, report) -> None:
        """Compact JSON with insertion-order keys, one document per line"""
        handle = self.connect()
        handle.write(json.dumps(report, separators=(',', ':')) + '\n')

    def write_rows(self, rows: list[dict], columns: list[str]) -> None:
        """CSV with a fixed header; missing cells are left empty"""
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator='\n',
                                extrasaction='ignore')
        writer.writeheader()
        for row in rows:
            writer.writerow({key: _csv_cell(row.get(key)) for key in columns})
        self.connect().write(buffer.getvalue())
        logger.info(f"Wrote {len(rows)} rows")

    def write_text(self, text: str) -> None:
        handle = self.connect()
        handle.write(text if text.endswith('\n') else text + '\n')

    def write(self, report: dict, text: Optional[str] = None) -> None:
        """JSON in json mode, else the human rendering"""
        if self.mode == 'json':
            self.write_json(report)
        else:
            self.write_text(text if text is not None else render_human(report))

    def close(self):
        """Close the file sink; stdout is only flushed"""
        if self._handle is None:
            return
        if self.out_path:
            self._handle.close()
            logger.info(f"Closed {self.out_path}")
        else:
            self._handle.flush()
        self._handle = None


def _csv_cell(value):
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return value


def render_human(report: dict, indent: int = 0) -> str:
    """key: value lines, nested dicts indented"""
    pad = '  ' * indent
    lines = []
    for key, value in report.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_human(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(f"{pad}  - " + ', '.join(f"{k}={v}" for k, v in item.items()))
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: " + ' '.join(str(v) for v in value))
        else:
            lines.append(f"{pad}{key}: {value}")
    return '\n'.join(line for line in lines if line)
