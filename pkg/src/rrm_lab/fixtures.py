"""Read-only reference fixtures (experimental values and external results).

These are display strings, never recomputed; tests may parse the numbers
out of them for delta reporting.
"""

from __future__ import annotations

from importlib import resources

from .errors import ValidationError


def load_fixtures() -> dict:
    text = (resources.files("rrm_lab") / "data" / "fixtures.txt").read_text(
        encoding="utf-8"
    )
    out = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise ValidationError(f"fixtures.txt:{lineno}: expected key: text")
        key, _, value = line.partition(":")
        out[key.strip()] = value.strip()
    return out


def show(key: str) -> str:
    table = load_fixtures()
    if key not in table:
        raise ValidationError(
            f"unknown fixture '{key}'; known: {', '.join(sorted(table))}"
        )
    return table[key]
