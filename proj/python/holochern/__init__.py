"""Exact Cech-Hodge Chern character cocycles from transition data."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Any, Optional, Union

from ._holochern import ParseError, RationalFunction, modes, residue, run_json

__all__ = ["ParseError", "RationalFunction", "Result", "modes", "residue", "run"]


@dataclass
class Result:
    report: dict
    artifact: str

    @property
    def exit_code(self) -> int:
        return self.report["exitCode"]

    @property
    def ok(self) -> bool:
        return self.exit_code == 0


def run(
    manifest: Union[dict, str, os.PathLike, None],
    mode: str = "",
    max_level: Optional[int] = None,
    seed: int = 1,
) -> Result:
    """Runs one mode on a manifest given as a dict or a path to a JSON file."""
    if manifest is None:
        text = ""
    elif isinstance(manifest, dict):
        text = json.dumps(manifest)
    else:
        with open(manifest, encoding="utf-8") as f:
            text = f.read()
    out: Any = json.loads(run_json(text, mode, max_level, seed))
    return Result(out["report"], out["artifact"])
