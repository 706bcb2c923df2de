"""Result documents and their CSV/JSON/Markdown serializations.

CSV is the reference format: comma separated, one header row, dot decimal
separator, LF line endings, no quoting (values never contain commas).
Leading comment lines carry the document kind, the effective configuration
(enough to reproduce the document bit-identically), and any metadata such
as a shatter verdict. Numeric cells use fixed per-column formats, chosen so
that a serialized document re-parses to exactly the written values; JSON
carries full double precision instead.
"""

import json
from dataclasses import dataclass, field

FORMATS = ("csv", "json", "markdown")

#: Per-kind column names and fixed CSV/Markdown formats.
SCHEMAS = {
    "table1": (("R", "d"), ("sf_density", ".4f"), ("l2_over_sqrtR", ".4f"),
               ("l1_over_sqrtR", ".4f"), ("fourier_ratio", ".4f"),
               ("linf_over_sqrtR", ".2f")),
    "table2": (("label", "s"), ("fourier_ratio", ".4f"), ("l2_over_sqrtR", ".4f")),
    "figures": (("series", "s"), ("x", "g"), ("y", "r")),
    "shatter": (("pattern", "d"), ("sigma", "s"), ("best_fr", ".6f"), ("met", "b")),
    "norms": (("R", "d"), ("realization", "s"), ("l1", "r"), ("l2", "r"),
              ("linf", "r"), ("fourier_ratio", "r"), ("l1_error_indicator", "r"),
              ("linf_correction_bound", "r"), ("M_used", "d")),
}


@dataclass(frozen=True)
class ReportDoc:
    """Rows of labeled numeric records plus the configuration that made them."""
    kind: str
    rows: tuple
    config_echo: dict
    format: str = "csv"
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in SCHEMAS:
            raise ValueError(f"unknown report kind {self.kind!r}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")


def _format_cell(value, fmt: str) -> str:
    if fmt == "s":
        return str(value)
    if fmt == "d":
        return str(int(value))
    if fmt == "b":
        return "true" if value else "false"
    if fmt == "r":  # shortest round-trip representation
        return repr(float(value))
    if fmt == "g":  # int-or-label column (figures x)
        return str(value)
    return format(float(value), fmt)


def _parse_cell(text: str, fmt: str):
    if fmt == "s":
        return text
    if fmt == "d":
        return int(text)
    if fmt == "b":
        return text == "true"
    if fmt == "g":
        try:
            return int(text)
        except ValueError:
            return text
    return float(text)


def to_csv(doc: ReportDoc) -> str:
    schema = SCHEMAS[doc.kind]
    lines = [f"# kind={doc.kind}"]
    for key in sorted(doc.config_echo):
        lines.append(f"# config.{key}={doc.config_echo[key]}")
    for key in sorted(doc.meta):
        lines.append(f"# meta.{key}={doc.meta[key]}")
    lines.append(",".join(name for name, _ in schema))
    for row in doc.rows:
        lines.append(",".join(_format_cell(row[name], fmt) for name, fmt in schema))
    return "\n".join(lines) + "\n"


def parse_csv(text: str) -> ReportDoc:
    """Inverse of to_csv; numeric cells come back exactly as written."""
    kind = None
    config: dict = {}
    meta: dict = {}
    data_lines = []
    for line in text.splitlines():
        if line.startswith("# kind="):
            kind = line[len("# kind="):]
        elif line.startswith("# config."):
            key, _, value = line[len("# config."):].partition("=")
            config[key] = value
        elif line.startswith("# meta."):
            key, _, value = line[len("# meta."):].partition("=")
            meta[key] = value
        elif line and not line.startswith("#"):
            data_lines.append(line)
    if kind is None or not data_lines:
        raise ValueError("not a report CSV: missing kind header or data")
    schema = SCHEMAS[kind]
    header = data_lines[0].split(",")
    if header != [name for name, _ in schema]:
        raise ValueError(f"header {header} does not match the {kind} schema")
    rows = []
    for line in data_lines[1:]:
        cells = line.split(",")
        rows.append({name: _parse_cell(cell, fmt)
                     for (name, fmt), cell in zip(schema, cells)})
    return ReportDoc(kind=kind, rows=tuple(rows), config_echo=config,
                     format="csv", meta=meta)


def to_json(doc: ReportDoc) -> str:
    payload = {"kind": doc.kind, "config": doc.config_echo, "rows": list(doc.rows)}
    if doc.meta:
        payload["meta"] = doc.meta
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def to_markdown(doc: ReportDoc) -> str:
    schema = SCHEMAS[doc.kind]
    names = [name for name, _ in schema]
    lines = [f"<!-- kind={doc.kind} config={json.dumps(doc.config_echo, sort_keys=True)}"
             + (f" meta={json.dumps(doc.meta, sort_keys=True)}" if doc.meta else "")
             + " -->"]
    lines.append("| " + " | ".join(names) + " |")
    lines.append("|" + "|".join("---" for _ in names) + "|")
    for row in doc.rows:
        lines.append("| " + " | ".join(_format_cell(row[name], fmt)
                                       for name, fmt in schema) + " |")
    return "\n".join(lines) + "\n"


def render(doc: ReportDoc) -> str:
    """Serialize in the document's declared format."""
    if doc.format == "csv":
        return to_csv(doc)
    if doc.format == "json":
        return to_json(doc)
    return to_markdown(doc)
