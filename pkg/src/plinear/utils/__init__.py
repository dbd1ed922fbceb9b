"""Utility functions and helpers."""

from plinear.utils.export import ReportExporter

__all__ = ["ReportExporter"]
