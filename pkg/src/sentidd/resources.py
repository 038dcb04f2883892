"""Locate bundled data files, honoring the SENTIDD_DATA_DIR override."""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

DATA_DIR_ENV = "SENTIDD_DATA_DIR"


def bundled_text(filename: str) -> str:
    """Return the contents of a bundled data file.

    If the SENTIDD_DATA_DIR environment variable is set, the file is read
    from that directory instead of the package's data/ directory.
    """
    override = os.environ.get(DATA_DIR_ENV)
    if override:
        return (Path(override) / filename).read_text(encoding="utf-8")
    return (resources.files("sentidd") / "data" / filename).read_text(encoding="utf-8")


def read_word_lines(text: str) -> list[str]:
    """Parse a one-entry-per-line word file; '#' lines are comments."""
    words = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        words.append(line.lower())
    return words
