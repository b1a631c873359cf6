"""
Unit tests for dependency DAG utilities.

Test Strategy:
- Worked-example matrix (tasks A-L) for exact parents/descendants
- Hand-made cyclic and self-looping matrices for the error paths
- Hypothesis-generated DAGs for ordering and closure properties
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from app.benchmark.demo import LABELS, PARENTS
from app.model.dag import (
    DependencyDag,
    ancestors,
    children,
    descendants,
    parents,
    topological_order,
    validate_dag,
)
from app.model.errors import CycleError, SelfLoopError
from tests.factories import A, B, C, D, E, F, G, H, I, random_dag_matrix

pytestmark = pytest.mark.unit


def _labelled_dag(labels: str) -> DependencyDag:
    dep = np.zeros((len(labels), len(labels)), dtype=np.uint8)
    for child, parent_labels in PARENTS.items():
        if child not in labels:
            continue
        for parent in parent_labels:
            if parent in labels:
                dep[labels.index(child), labels.index(parent)] = 1
    return DependencyDag(dep=dep)


@pytest.fixture
def table_dag() -> DependencyDag:
    """Tasks A-L with their unambiguous edges."""
    return _labelled_dag(LABELS[:12])


class TestDependencyDagModel:
    def test_rejects_non_square_matrix(self):
        with pytest.raises(ValidationError, match="square"):
            DependencyDag(dep=[[0, 1, 0]])

    def test_rejects_non_binary_cells(self):
        with pytest.raises(ValidationError, match="0 or 1"):
            DependencyDag(dep=[[0, 2], [0, 0]])

    def test_matrix_is_read_only(self):
        dag = DependencyDag.edgeless(3)
        with pytest.raises(ValueError):
            dag.dep[0, 1] = 1


class TestValidateDag:
    def test_table_matrix_is_valid(self, table_dag):
        validate_dag(table_dag)

    def test_edgeless_graph_is_valid(self):
        validate_dag(DependencyDag.edgeless(3))

    def test_two_cycle_is_reported(self):
        dag = DependencyDag(dep=[[0, 1], [1, 0]])
        with pytest.raises(CycleError) as excinfo:
            validate_dag(dag)
        assert excinfo.value.tasks == [0, 1]

    def test_residue_excludes_peelable_tasks(self):
        # 0 is independent, 1 <-> 2 form a cycle, 3 waits on the cycle
        dep = np.zeros((4, 4), dtype=np.uint8)
        dep[1, 2] = dep[2, 1] = 1
        dep[3, 2] = 1
        with pytest.raises(CycleError) as excinfo:
            validate_dag(DependencyDag(dep=dep))
        assert 0 not in excinfo.value.tasks
        assert {1, 2} <= set(excinfo.value.tasks)

    def test_self_loop_is_rejected(self):
        dep = np.zeros((3, 3), dtype=np.uint8)
        dep[2, 2] = 1
        with pytest.raises(SelfLoopError) as excinfo:
            validate_dag(DependencyDag(dep=dep))
        assert excinfo.value.task == 2


class TestTopologicalOrder:
    def test_edgeless_graph_keeps_index_order(self):
        assert topological_order(DependencyDag.edgeless(3)) == [0, 1, 2]

    def test_fork_join_application(self):
        dag = _labelled_dag("FGHI")
        assert topological_order(dag) == [0, 1, 2, 3]

    def test_fan_in_application(self):
        dag = _labelled_dag("ABCDE")
        assert topological_order(dag) == [0, 1, 2, 3, 4]

    def test_ready_tasks_lowest_index_first(self):
        # 0 waits on 2; 1 and 2 are ready at the start
        dag = DependencyDag(dep=[[0, 0, 1], [0, 0, 0], [0, 0, 0]])
        assert topological_order(dag) == [1, 2, 0]

    def test_cycle_propagates(self):
        with pytest.raises(CycleError):
            topological_order(DependencyDag(dep=[[0, 1], [1, 0]]))

    @settings(max_examples=100, deadline=None)
    @given(
        n=st.integers(min_value=1, max_value=12),
        seed=st.integers(min_value=0, max_value=2**32 - 1),
        edge_prob=st.floats(min_value=0.0, max_value=1.0),
    )
    def test_parents_precede_children(self, n, seed, edge_prob):
        dag = DependencyDag(dep=random_dag_matrix(np.random.default_rng(seed), n, edge_prob))
        order = topological_order(dag)
        position = {t: i for i, t in enumerate(order)}

        assert sorted(order) == list(range(n))
        for child, parent in zip(*np.nonzero(dag.dep)):
            assert position[int(parent)] < position[int(child)]


class TestClosures:
    def test_descendants_of_fork(self, table_dag):
        assert descendants(table_dag, F) == {G, H, I}

    def test_descendants_of_sink(self, table_dag):
        assert descendants(table_dag, I) == set()

    def test_descendants_in_edgeless_graph(self):
        dag = DependencyDag.edgeless(4)
        assert all(descendants(dag, t) == set() for t in range(4))

    def test_parents_of_fan_in(self, table_dag):
        assert parents(table_dag, E) == {A, B, C, D}

    def test_parents_of_join(self, table_dag):
        assert parents(table_dag, I) == {G, H}

    def test_parents_of_source(self, table_dag):
        assert parents(table_dag, A) == set()

    def test_children_of_fork(self, table_dag):
        assert children(table_dag, F) == {G, H}

    def test_ancestors_of_join(self, table_dag):
        assert ancestors(table_dag, I) == {F, G, H}

    @settings(max_examples=100, deadline=None)
    @given(
        n=st.integers(min_value=1, max_value=12),
        seed=st.integers(min_value=0, max_value=2**32 - 1),
        edge_prob=st.floats(min_value=0.0, max_value=1.0),
    )
    def test_descendants_mirror_ancestors(self, n, seed, edge_prob):
        dag = DependencyDag(dep=random_dag_matrix(np.random.default_rng(seed), n, edge_prob))
        for t in range(n):
            for u in range(n):
                assert (u in descendants(dag, t)) == (t in ancestors(dag, u))
                assert not (u in descendants(dag, t) and t in descendants(dag, u))
            assert t not in descendants(dag, t)
