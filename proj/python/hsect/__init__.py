"""Global sections of homogeneous bundles on ADE flag varieties."""

from pathlib import Path

from ._core import (
    FormatError,
    ValidationError,
    bott,
    check,
    euler,
    h0,
    h_graded,
    run_cli,
    solve,
)

__all__ = [
    "FormatError",
    "ValidationError",
    "bott",
    "check",
    "euler",
    "h0",
    "h_graded",
    "load",
    "run_cli",
    "solve",
]


def load(path):
    """Read a bundle file as text, for the functions above."""
    return Path(path).read_text(encoding="utf-8")
