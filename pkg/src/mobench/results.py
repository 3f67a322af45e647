"""Run results and front file I/O.

Front CSVs carry a ``f1,f2[,f3[,f4]]`` header and one member per row with
17 significant digits, which makes seeded reruns byte-comparable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import FrontFileError


@dataclass
class RunResult:
    """Outcome of one seeded algorithm execution."""

    algorithm: str
    problem: str
    seed: int
    generations: int
    evaluations: int
    wall_ms: float
    front: np.ndarray
    front_size_trace: list[int] = field(default_factory=list)
    evaluation_trace: list[int] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "problem": self.problem,
            "seed": self.seed,
            "generations": self.generations,
            "evaluations": self.evaluations,
            "wall_ms": self.wall_ms,
            "front": [[float(v) for v in row] for row in np.asarray(self.front)],
        }

    def write_json(self, path) -> None:
        Path(path).write_text(json.dumps(self.to_json_dict(), indent=2) + "\n", encoding="utf-8")


def write_front_csv(path, front: np.ndarray) -> None:
    F = np.asarray(front, dtype=float)
    if F.ndim != 2:
        raise FrontFileError(f"front must be 2-D, got shape {F.shape}")
    header = ",".join(f"f{k + 1}" for k in range(F.shape[1]))
    lines = [header]
    for row in F:
        lines.append(",".join(format(v, ".17g") for v in row))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_front_csv(path) -> np.ndarray:
    """Parse a front CSV; raises :class:`FrontFileError` on malformed files."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FrontFileError(f"{path}: empty front file")
    header = [c.strip() for c in lines[0].split(",")]
    if header != [f"f{k + 1}" for k in range(len(header))] or len(header) < 2:
        raise FrontFileError(f"{path}: expected header f1,f2[,...], got {lines[0]!r}")
    rows = []
    for ln_no, line in enumerate(lines[1:], start=2):
        cells = line.split(",")
        if len(cells) != len(header):
            raise FrontFileError(f"{path}:{ln_no}: expected {len(header)} columns")
        try:
            rows.append([float(c) for c in cells])
        except ValueError as exc:
            raise FrontFileError(f"{path}:{ln_no}: {exc}") from exc
    if not rows:
        raise FrontFileError(f"{path}: no data rows")
    return np.array(rows, dtype=float)
