# Renders command results as JSON, CSV or plain text

import csv
from dataclasses import dataclass
from dataclasses import field
import io
import json
from typing import Any, List, Optional, Sequence

from moserpoly.errors import InvalidArgumentError

FORMATS = ("json", "csv", "plain")


@dataclass
class CommandOutput:
    """
    One command result in the shapes the renderers need.

    ``document`` is the JSON form. ``header`` and ``rows`` are the tabular
    form used by CSV, and by plain output unless ``plain`` lists the lines
    to print instead. Cells are already strings so rationals never pass
    through floats.
    """

    document: Any
    header: List[str]
    rows: List[Sequence[str]] = field(default_factory=list)
    plain: Optional[List[str]] = None


def render_json(output: CommandOutput) -> str:
    return json.dumps(output.document, indent=2, sort_keys=False) + "\n"


def render_csv(output: CommandOutput) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(output.header)
    writer.writerows(output.rows)
    return buffer.getvalue()


def render_plain(output: CommandOutput) -> str:
    if output.plain is not None:
        lines = list(output.plain)
    else:
        lines = [" ".join(output.header)]
        lines.extend(" ".join(row) for row in output.rows)
    return "\n".join(lines) + "\n"


RENDERERS = {
    "json": render_json,
    "csv": render_csv,
    "plain": render_plain,
}


def render(output: CommandOutput, fmt: str) -> str:
    """Render ``output`` in one of FORMATS."""
    if fmt not in RENDERERS:
        raise InvalidArgumentError(f"Unknown output format: {fmt}")
    return RENDERERS[fmt](output)
