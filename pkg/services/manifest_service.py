import hashlib
import json
import logging
from dataclasses import dataclass, field

from django.db import DatabaseError

from algebra.conf import bound
from nichols.models import RunRecord

logger = logging.getLogger(__name__)


def digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def canonical_json(value) -> str:
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


@dataclass
class RunManifest:
    """Everything needed to reproduce an artifact byte for byte."""

    command: str
    params: dict = field(default_factory=dict)
    seeds: list = field(default_factory=list)
    engines: list = field(default_factory=list)
    tool_version: str = field(default_factory=lambda: bound("FORGE_TOOL_VERSION"))
    input_digest: str = ""

    def with_input(self, data: bytes) -> "RunManifest":
        self.input_digest = digest(data)
        return self

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "seeds": list(self.seeds),
            "engines": list(self.engines),
            "tool_version": self.tool_version,
            "input_digest": self.input_digest,
        }

    def key(self) -> str:
        return digest(canonical_json(self.as_dict()).encode("utf-8"))


def record_run(manifest: RunManifest, exit_code: int, output: bytes | None = None) -> RunRecord | None:
    """Persist a run when FORGE_RECORD_RUNS is on.

    Recording never changes the outcome of a command: database errors are
    logged and swallowed.
    """
    if not bound("FORGE_RECORD_RUNS"):
        return None
    try:
        return RunRecord.objects.create(
            command=manifest.command,
            params=manifest.params,
            seeds=list(manifest.seeds),
            engines=list(manifest.engines),
            tool_version=manifest.tool_version,
            input_digest=manifest.input_digest,
            output_digest=digest(output) if output is not None else "",
            exit_code=exit_code,
        )
    except DatabaseError as exc:
        logger.warning("run of %s not recorded: %s", manifest.command, exc)
        return None
