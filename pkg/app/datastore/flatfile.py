"""Plain-text formats for ETC matrices, dependency matrices, manifests and schedules.

ETC files hold n×q positive decimals in task-major order, whitespace separated
(the classic Braun benchmark files put one value per line). Dependency files hold
n lines of n space-separated 0/1 cells, rows being children. Lines starting
with ``#`` are comments everywhere.
"""

import math
from pathlib import Path
from typing import Dict, Iterator, List, Mapping, Tuple

import numpy as np

from app.model.dag import DependencyDag
from app.model.errors import (
    DataFormatError,
    NonBinaryError,
    NonNumericError,
    PositivityError,
    TokenCountError,
)
from app.model.workload import Chromosome, EtcMatrix, WorkloadInstance, validate_chromosome


def _content_lines(path: Path) -> Iterator[Tuple[int, str]]:
    with open(path, encoding="utf-8") as handle:
        for number, line in enumerate(handle, start=1):
            stripped = line.strip()
            if stripped and not stripped.startswith("#"):
                yield number, stripped


def _tokens(path: Path) -> List[Tuple[int, str]]:
    return [(number, token) for number, line in _content_lines(path) for token in line.split()]


def count_tokens(path: Path) -> int:
    return len(_tokens(path))


def parse_etc_file(path: Path, n: int, q: int) -> EtcMatrix:
    tokens = _tokens(path)
    if len(tokens) < n * q:
        raise TokenCountError(n * q, len(tokens), str(path))

    cells = np.empty(n * q, dtype=np.float64)
    for index, (number, token) in enumerate(tokens[: n * q]):
        try:
            value = float(token)
        except ValueError:
            raise NonNumericError(number, token) from None
        if not (math.isfinite(value) and value > 0):
            raise PositivityError(index // q, index % q, value)
        cells[index] = value
    return EtcMatrix(cells=cells.reshape(n, q))


def write_etc_file(path: Path, etc: EtcMatrix) -> None:
    lines = [f"# ETC matrix: {etc.n} tasks x {etc.q} clouds, task-major, milliseconds"]
    lines.extend(repr(float(value)) for value in etc.cells.reshape(-1))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def parse_dep_file(path: Path, n: int) -> DependencyDag:
    rows = list(_content_lines(path))
    if len(rows) < n:
        raise TokenCountError(n * n, sum(len(line.split()) for _, line in rows), str(path))

    dep = np.zeros((n, n), dtype=np.uint8)
    for i, (number, line) in enumerate(rows[:n]):
        cells = line.split()
        if len(cells) != n:
            raise TokenCountError(n, len(cells), f"{path} line {number}")
        for j, token in enumerate(cells):
            if token not in ("0", "1"):
                raise NonBinaryError(i, j, token)
            dep[i, j] = int(token)
    return DependencyDag(dep=dep)


def write_dep_file(path: Path, dag: DependencyDag) -> None:
    lines = [" ".join(str(int(cell)) for cell in row) for row in dag.dep]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def count_rows(path: Path) -> int:
    return sum(1 for _ in _content_lines(path))


def read_manifest(path: Path) -> Dict[str, str]:
    manifest: Dict[str, str] = {}
    for number, line in _content_lines(path):
        key, separator, value = line.partition("=")
        if not separator:
            raise DataFormatError(f"{path} line {number}: expected key=value, got {line!r}")
        manifest[key.strip()] = value.strip()
    return manifest


def write_manifest(path: Path, entries: Mapping[str, object]) -> None:
    lines = [f"{key}={value}" for key, value in entries.items()]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def parse_schedule_file(path: Path, instance: WorkloadInstance) -> Chromosome:
    """Read n whitespace-separated cloud indices."""
    tokens = _tokens(path)
    if len(tokens) < instance.n:
        raise TokenCountError(instance.n, len(tokens), str(path))
    genes = []
    for number, token in tokens[: instance.n]:
        try:
            genes.append(int(token))
        except ValueError:
            raise NonNumericError(number, token) from None
    return validate_chromosome(instance, genes)


def write_schedule_file(path: Path, genes: Chromosome) -> None:
    Path(path).write_text(" ".join(str(int(g)) for g in genes) + "\n", encoding="utf-8")
