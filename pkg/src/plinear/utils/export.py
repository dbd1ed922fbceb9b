"""Export verification reports to files."""

import csv
import json
from pathlib import Path
from typing import List

from plinear.engine.reports import VerificationReport


class ReportExporter:
    """Export verification reports to various formats."""

    def export_reports_to_json(self, reports: List[VerificationReport], output_file: Path) -> None:
        """
        Write one JSON document per report, keyed by report name.

        Args:
            reports: Verification reports
            output_file: Output JSON file path
        """
        payload = {report.name: report.to_dict() for report in reports}
        Path(output_file).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")

    def export_failures_to_csv(
        self, reports: List[VerificationReport], output_file: Path
    ) -> None:
        """
        Export every retained failure as one CSV row.

        Args:
            reports: Verification reports
            output_file: Output CSV file path
        """
        fieldnames = ["report", "k", "l", "lhs", "rhs"]
        with open(output_file, "w", newline="") as f:
            writer = csv.DictWriter(f, fieldnames=fieldnames)
            writer.writeheader()
            for report in reports:
                for failure in report.failures:
                    writer.writerow(
                        {
                            "report": report.name,
                            "k": json.dumps(failure.k),
                            "l": json.dumps(failure.l),
                            "lhs": json.dumps(failure.lhs),
                            "rhs": json.dumps(failure.rhs),
                        }
                    )

    def export_summary_to_text(self, reports: List[VerificationReport], output_file: Path) -> None:
        """Write the text form of every report."""
        text = "\n".join(report.to_text() for report in reports)
        Path(output_file).write_text(text + "\n", encoding="utf-8")

    def export(self, reports: List[VerificationReport], output_file: Path) -> Path:
        """Pick the format from the file suffix (.json, .csv, anything else as text)."""
        output_file = Path(output_file)
        suffix = output_file.suffix.lower()
        if suffix == ".json":
            self.export_reports_to_json(reports, output_file)
        elif suffix == ".csv":
            self.export_failures_to_csv(reports, output_file)
        else:
            self.export_summary_to_text(reports, output_file)
        return output_file
