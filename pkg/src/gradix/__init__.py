"""Exact arithmetic for groupoid-graded rings and their structure theory."""

__version__ = "0.1.0"
