#!/usr/bin/env python3
"""
JSON Exporter - Write verification reports
"""

import gzip
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional

from domain.interfaces import IReportExporter

logger = logging.getLogger(__name__)


class JsonExporter(IReportExporter):
    """
    JSON report exporter
    Supports plain JSON and compressed .json.gz output; output is byte-stable
    for equal reports
    """

    def __init__(self, indent: int = 2):
        self.indent = indent

    def serialize(self, report: Dict[str, Any]) -> str:
        """
        Serialize a report
        Args:
            report: JSON-ready report
        Returns:
            str: Serialized text with a trailing newline
        """
        return json.dumps(report, indent=self.indent, ensure_ascii=False) + "\n"

    def export(self, report: Dict[str, Any], destination: Optional[str] = None) -> str:
        text = self.serialize(report)
        if destination is None or destination == "-":
            sys.stdout.write(text)
            sys.stdout.flush()
            return text

        path = Path(destination)
        path.parent.mkdir(parents=True, exist_ok=True)
        if path.suffix == ".gz":
            with gzip.open(path, 'wt', encoding='utf-8') as f:
                f.write(text)
        else:
            with open(path, 'w', encoding='utf-8') as f:
                f.write(text)
        logger.info(f"Report written to {path}")
        return text
