"""The worked 14-task, 4-cloud example instance.

By default only tasks A-I are returned: the original dependency rows for M
and N are ambiguous (row M lists itself as a parent). The full variant drops
that self-edge and reads M <- L, N <- {L, M}; it is illustrative, never an oracle.
"""

from typing import Dict, List, Tuple

import numpy as np

from app.model.dag import DependencyDag
from app.model.workload import EtcMatrix, WorkloadInstance

LABELS = "ABCDEFGHIJKLMN"

# Execution time (ms) of each task on clouds 1-4
ETC_ROWS: Tuple[Tuple[float, ...], ...] = (
    (6, 10, 3, 2),  # A
    (7, 9, 4, 3),  # B
    (8, 8, 5, 4),  # C
    (10, 7, 3, 5),  # D
    (4, 8, 4, 6),  # E
    (5, 5, 5, 7),  # F
    (6, 4, 10, 8),  # G
    (7, 6, 8, 9),  # H
    (3, 3, 9, 9),  # I
    (7, 4, 9, 8),  # J
    (9, 4, 8, 7),  # K
    (4, 6, 7, 10),  # L
    (5, 6, 6, 3),  # M
    (5, 8, 5, 4),  # N
)

# child -> parents it waits for
PARENTS: Dict[str, str] = {
    "E": "ABCD",
    "G": "F",
    "H": "F",
    "I": "GH",
    "K": "J",
    "L": "K",
    "M": "L",
    "N": "LM",
}

APPLICATIONS: Tuple[str, ...] = ("ABCDE", "FGHI", "JKLMN")


def demo_instance(full: bool = False) -> WorkloadInstance:
    n = len(LABELS) if full else 9
    labels = LABELS[:n]
    dep = np.zeros((n, n), dtype=np.uint8)
    for child, parents in PARENTS.items():
        if child not in labels:
            continue
        for parent in parents:
            dep[labels.index(child), labels.index(parent)] = 1

    app_of: List[int] = [
        next(a for a, members in enumerate(APPLICATIONS) if label in members)
        for label in labels
    ]
    return WorkloadInstance(
        etc=EtcMatrix(cells=np.array(ETC_ROWS[:n], dtype=np.float64)),
        dag=DependencyDag(dep=dep),
        app_of=tuple(app_of),
        p=max(app_of) + 1,
    )
