import csv
import io
import json
import logging
import os
import tempfile
from pathlib import Path

from algebra.exceptions import MalformedInput

logger = logging.getLogger(__name__)

ARTIFACT_FORMAT = "nichols-forge/1"
FORMATS = ("json", "csv", "markdown")


def artifact(manifest: dict, result) -> dict:
    """Wrap a result with the schema tag and the manifest that produced it."""
    return {"format": ARTIFACT_FORMAT, "manifest": manifest, "result": result}


def _json_bytes(payload) -> bytes:
    return (json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n").encode("utf-8")


def _table(result: dict) -> tuple[list, list[dict]] | None:
    if isinstance(result, dict) and "rows" in result:
        rows = result["rows"]
        columns = result.get("columns") or (sorted(rows[0]) if rows else [])
        return list(columns), rows
    return None


def _cell(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, ensure_ascii=False)
    if value is None:
        return ""
    return str(value)


def _csv_bytes(payload: dict) -> bytes:
    table = _table(payload["result"])
    if table is None:
        raise MalformedInput("CSV output needs a tabular result (rows and columns)")
    columns, rows = table
    buffer = io.StringIO()
    buffer.write(f"# format: {payload['format']}\n")
    buffer.write(f"# manifest: {json.dumps(payload['manifest'], sort_keys=True, ensure_ascii=False)}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(column)) for column in columns])
    return buffer.getvalue().encode("utf-8")


def _markdown_table(columns: list, rows: list[dict]) -> list[str]:
    lines = ["| " + " | ".join(columns) + " |", "|" + "|".join("---" for _ in columns) + "|"]
    for row in rows:
        lines.append("| " + " | ".join(_cell(row.get(column)).replace("|", "\\|") for column in columns) + " |")
    return lines


def _markdown_bytes(payload: dict) -> bytes:
    result = payload["result"]
    lines = [f"<!-- {payload['format']} manifest: {json.dumps(payload['manifest'], sort_keys=True)} -->", ""]
    title = payload["manifest"].get("command", "report")
    lines.append(f"# {title}")
    lines.append("")
    table = _table(result)
    if table is not None:
        lines.extend(_markdown_table(*table))
    elif isinstance(result, dict):
        scalars = {k: v for k, v in result.items() if not isinstance(v, (dict, list))}
        nested = {k: v for k, v in result.items() if isinstance(v, (dict, list))}
        if scalars:
            lines.extend(_markdown_table(["field", "value"], [{"field": k, "value": v} for k, v in sorted(scalars.items())]))
        for key in sorted(nested):
            value = nested[key]
            lines.extend(["", f"## {key}", ""])
            if isinstance(value, list) and value and all(isinstance(r, dict) for r in value):
                lines.extend(_markdown_table(sorted({c for r in value for c in r}), value))
            elif isinstance(value, dict) and all(not isinstance(v, (dict, list)) for v in value.values()):
                lines.extend(_markdown_table(["field", "value"], [{"field": k, "value": v} for k, v in sorted(value.items())]))
            else:
                lines.extend(["```json", json.dumps(value, indent=2, sort_keys=True, ensure_ascii=False), "```"])
    else:
        lines.append(_cell(result))
    return ("\n".join(lines) + "\n").encode("utf-8")


def emit_report(payload: dict, fmt: str = "json") -> bytes:
    """Serialize an artifact; equal payloads always give equal bytes.

    Tabular results (a "rows" list, optional "columns") render as CSV or a
    markdown table; everything else is JSON or a markdown field list.
    """
    if fmt not in FORMATS:
        raise MalformedInput(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    if fmt == "json":
        return _json_bytes(payload)
    if fmt == "csv":
        return _csv_bytes(payload)
    return _markdown_bytes(payload)


def parse_report(data: bytes) -> dict:
    """Read back a JSON artifact."""
    try:
        payload = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise MalformedInput(f"not a JSON artifact: {exc}") from exc
    if payload.get("format") != ARTIFACT_FORMAT:
        raise MalformedInput(f"unsupported artifact format {payload.get('format')!r}")
    return payload


def write_atomic(path: str | Path, data: bytes) -> Path:
    """Write through a temporary file in the target directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise
    logger.debug("wrote %s bytes to %s", len(data), path)
    return path


def read_json_input(path: str | Path) -> dict:
    """Load a JSON input file; unreadable or malformed files are bad input."""
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"malformed JSON in {path}: {exc}") from exc
