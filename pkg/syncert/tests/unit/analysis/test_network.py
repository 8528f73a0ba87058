import networkx as nx
import numpy as np
import pytest
from scipy.linalg import block_diag

from syncert.analysis.errors import ArrayValidationError, IssueKind
from syncert.analysis.network import (
    LaplacianPair,
    build_laplacians,
    build_r_delta,
    connected_components,
    damper_connectivity,
    derive_graphs,
    laplacian,
    random_array,
    validate_array,
)
from syncert.configs.tolerances import DEFAULT_TOLERANCES


def test_validate_array_accepts_example(example1):
    assert example1.q == 4
    assert example1.omega0 == 1.0
    assert example1.d[1, 3] == example1.d[3, 1] == 1.0
    assert not example1.d.flags.writeable


@pytest.mark.parametrize(
    "d, r, omega0, kind",
    [
        ([[0, 1], [0, 0]], [[0, 0], [0, 0]], 1.0, IssueKind.NON_SYMMETRIC),
        ([[0, -1], [-1, 0]], [[0, 0], [0, 0]], 1.0, IssueKind.NEGATIVE_WEIGHT),
        ([[0, 0], [0, 0]], [[1, 0], [0, 0]], 1.0, IssueKind.NONZERO_DIAGONAL),
        ([[0, 0], [0, 0]], [[0, 0], [0, 0]], 0.0, IssueKind.NON_POSITIVE_OMEGA0),
        ([[0, 0, 0]], [[0, 0], [0, 0]], 1.0, IssueKind.SHAPE_MISMATCH),
        ([[0, np.nan], [np.nan, 0]], [[0, 0], [0, 0]], 1.0, IssueKind.NON_FINITE),
    ],
)
def test_validate_array_reports_issue(d, r, omega0, kind):
    with pytest.raises(ArrayValidationError) as excinfo:
        validate_array(2, omega0, d, r)
    assert kind in {issue.kind for issue in excinfo.value.issues}


def test_asymmetric_issue_uses_one_based_indices():
    with pytest.raises(ArrayValidationError) as excinfo:
        validate_array(2, 1.0, [[0, 1], [2, 0]], np.zeros((2, 2)))
    assert "non_symmetric(1,2)" in str(excinfo.value)


def test_build_laplacians_example1(example1):
    L = build_laplacians(example1)
    expected_D = np.array([[0, 0, 0, 0], [0, 1, 0, -1], [0, 0, 0, 0], [0, -1, 0, 1]])
    expected_R = np.array([[1, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 1, 0], [0, 0, 0, 0]])
    np.testing.assert_array_equal(L.D, expected_D)
    np.testing.assert_array_equal(L.R, expected_R)
    assert L.is_valid()


def test_laplacian_pair_rejects_positive_off_diagonal():
    bad = np.array([[-1.0, 1.0], [1.0, -1.0]])
    assert not LaplacianPair(bad, np.zeros((2, 2))).is_valid()


def test_derive_graphs(example1, example2):
    gamma_d, gamma_r, gamma_sigma, gamma_delta = derive_graphs(example1)
    assert gamma_d.edge_set() == {(1, 3)}
    assert gamma_r.edge_set() == {(0, 1), (1, 2)}
    assert gamma_delta.edge_set() == {(0, 1), (1, 2)}
    assert gamma_sigma.edge_set() == {(0, 1), (1, 2), (1, 3)}

    *_, gamma_sigma, gamma_delta = derive_graphs(example2)
    assert gamma_delta.edge_set() == {(0, 1), (2, 3)}
    assert gamma_sigma.is_connected()


def test_spring_on_damped_pair_leaves_spring_only_graph():
    array = validate_array(2, 1.0, [[0, 1], [1, 0]], [[0, 1], [1, 0]])
    *_, gamma_delta = derive_graphs(array)
    assert gamma_delta.edge_set() == set()


def test_connected_components_ordering(example1):
    *_, gamma_delta = derive_graphs(example1)
    assert connected_components(gamma_delta) == [[0, 1, 2], [3]]


def test_build_r_delta(example1, example2):
    _, decomposition = build_r_delta(example1)
    assert decomposition.count == 2
    np.testing.assert_array_equal(
        decomposition.blocks[0], [[1, -1, 0], [-1, 2, -1], [0, -1, 1]]
    )
    np.testing.assert_array_equal(decomposition.blocks[1], [[0]])
    assert decomposition.permutation == [0, 1, 2, 3]

    _, decomposition = build_r_delta(example2)
    assert decomposition.count == 2
    np.testing.assert_array_equal(decomposition.blocks[0], decomposition.blocks[1])


def test_damper_connectivity(example1, path_dampers):
    result = damper_connectivity(path_dampers)
    assert result.graph_connected and result.spectral_connected and result.agree
    assert result.lambda2 == pytest.approx(1.0)

    result = damper_connectivity(example1)
    assert not result.graph_connected
    assert result.agree


def test_permuted_and_scaled(example1):
    perm = [3, 2, 1, 0]
    permuted = example1.permuted(perm)
    assert permuted.d[0, 2] == example1.d[3, 1]
    scaled = example1.scaled(2.0, 3.0)
    np.testing.assert_array_equal(scaled.r, 3.0 * example1.r)
    np.testing.assert_array_equal(scaled.d, 2.0 * example1.d)


def test_random_array_is_valid(rng):
    for q in range(1, 7):
        array = random_array(rng, q, 0.5, integer_weights=True)
        assert build_laplacians(array).is_valid()
        assert set(np.unique(array.d)) <= {0.0, 1.0, 2.0}


def quadratic_form_by_edges(w: np.ndarray, z: np.ndarray) -> float:
    return 0.5 * float(np.sum(w * (z[:, None] - z[None, :]) ** 2))


def test_laplacian_quadratic_form(rng):
    for _ in range(200):
        q = int(rng.integers(2, 8))
        array = random_array(rng, q, float(rng.uniform(0.2, 0.9)))
        L = build_laplacians(array)
        z = rng.standard_normal(q)
        assert z @ L.D @ z == pytest.approx(quadratic_form_by_edges(array.d, z), abs=1e-9)
        assert z @ L.R @ z == pytest.approx(quadratic_form_by_edges(array.r, z), abs=1e-9)

    w = np.triu(rng.uniform(0.0, 3.0, size=(5, 5)), k=1)
    w = w + w.T
    D = laplacian(w)
    np.testing.assert_allclose(D @ np.ones(5), 0.0, atol=1e-12)
    np.testing.assert_allclose(D, D.T)
    z = rng.standard_normal(5)
    assert z @ D @ z == pytest.approx(quadratic_form_by_edges(w, z), rel=1e-12)


def test_relabelling_conjugates_laplacians(rng):
    for _ in range(200):
        q = int(rng.integers(2, 8))
        array = random_array(rng, q, float(rng.uniform(0.2, 0.9)))
        perm = rng.permutation(q)
        P = np.eye(q)[perm]
        original = build_laplacians(array)
        relabelled = build_laplacians(array.permuted(perm))
        np.testing.assert_allclose(relabelled.D, P @ original.D @ P.T, atol=1e-12)
        np.testing.assert_allclose(relabelled.R, P @ original.R @ P.T, atol=1e-12)


def test_damper_connectivity_matches_graph_traversal(rng):
    outcomes = set()
    for _ in range(200):
        q = int(rng.integers(2, 9))
        array = random_array(rng, q, float(rng.uniform(0.1, 0.8)), integer_weights=True)
        result = damper_connectivity(array)
        assert result.agree
        assert result.graph_connected == nx.is_connected(nx.from_numpy_array(array.d))
        threshold = DEFAULT_TOLERANCES.eig_rel * max(1.0, np.linalg.norm(laplacian(array.d), 2))
        assert result.spectral_connected == (result.lambda2 > threshold)
        outcomes.add(result.graph_connected)
    assert outcomes == {True, False}


def assert_blocks_reassemble(r_delta, decomposition):
    P = np.eye(len(decomposition.permutation))[decomposition.permutation]
    np.testing.assert_allclose(P @ r_delta @ P.T, block_diag(*decomposition.blocks))
    for block in decomposition.blocks:
        eigenvalues = np.linalg.eigvalsh(block)
        scale = max(1.0, float(np.abs(eigenvalues).max()))
        assert np.sum(np.abs(eigenvalues) < 1e-9 * scale) == 1


def test_build_r_delta_interleaved_components():
    springs = np.zeros((4, 4))
    springs[0, 2] = springs[2, 0] = 1.0
    springs[1, 3] = springs[3, 1] = 2.0
    dampers = np.zeros((4, 4))
    dampers[0, 1] = dampers[1, 0] = 1.0
    array = validate_array(4, 1.0, dampers, springs)

    r_delta, decomposition = build_r_delta(array)
    assert decomposition.components == [[0, 2], [1, 3]]
    assert decomposition.permutation == [0, 2, 1, 3]
    assert decomposition.offsets == [0, 2]
    np.testing.assert_array_equal(decomposition.blocks[1], [[2, -2], [-2, 2]])
    assert_blocks_reassemble(r_delta, decomposition)


def test_build_r_delta_blocks(rng):
    reordered = 0
    for _ in range(200):
        q = int(rng.integers(2, 8))
        array = random_array(rng, q, float(rng.uniform(0.1, 0.6)), spring_density=0.4)
        r_delta, decomposition = build_r_delta(array)
        assert sorted(decomposition.permutation) == list(range(q))
        assert sum(decomposition.sizes) == q
        assert_blocks_reassemble(r_delta, decomposition)
        reordered += decomposition.permutation != list(range(q))
    assert reordered > 0
