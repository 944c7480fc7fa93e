"""Smoke tests for the python surface of the C++ core."""

import math

import numpy as np
import pytest

import qsslab

LOG2_3 = math.log2(3.0)


def test_cgl23_verifies():
    scheme = qsslab.cgl23()
    report = qsslab.full_verification(scheme)
    assert report["overall"]
    assert report["i_rs_bits"] == pytest.approx(2 * LOG2_3, abs=1e-9)
    assert report["rates"]["r"] == pytest.approx(1.0, abs=1e-9)


def test_threshold_scheme_verifies():
    scheme = qsslab.threshold(2, 3, 3)
    report = qsslab.verify_definition1(scheme)
    assert report["definition1_verdict"]


def test_entropy_values():
    rho = np.eye(2, dtype=complex) / 2
    assert qsslab.von_neumann_entropy(rho, [("X", 2)]) == pytest.approx(1.0, abs=1e-12)

    bell = np.zeros(4, dtype=complex)
    bell[0] = bell[3] = 1 / math.sqrt(2)
    rho_bell = np.outer(bell, bell.conj())
    layout = [("X", 2), ("Y", 2)]
    assert qsslab.conditional_entropy(rho_bell, layout, ["X"], ["Y"]) == pytest.approx(
        -1.0, abs=1e-9
    )
    assert qsslab.mutual_information(rho_bell, layout, ["X"], ["Y"]) == pytest.approx(
        2.0, abs=1e-9
    )


def test_partial_trace_and_tensor_product():
    a = np.diag([1.0, 2.0]).astype(complex)
    b = np.diag([3.0, 4.0]).astype(complex)
    ab = qsslab.tensor_product(a, b)
    assert np.allclose(ab, np.kron(a, b))

    bell = np.zeros(4, dtype=complex)
    bell[0] = bell[3] = 1 / math.sqrt(2)
    rho = np.outer(bell, bell.conj())
    reduced = qsslab.partial_trace(rho, [("X", 2), ("Y", 2)], ["X"])
    assert np.allclose(reduced, np.eye(2) / 2)


def test_classification():
    flags = qsslab.classify(qsslab.threshold_structure(2, 3))
    assert flags["quantum_admissible"] and flags["complement_closed"]

    vernam = qsslab.classify(qsslab.vernam_structure())
    assert vernam["quantum_admissible"] and not vernam["complement_closed"]

    pairs = qsslab.theorem6_pairs(qsslab.vernam_structure())
    assert (["A", "B"], ["M"]) in [(a, b) for a, b in pairs]


def test_recovery_roundtrip():
    scheme = qsslab.cgl23()
    recovery = qsslab.synthesize_recovery(scheme, ["P1", "P2"])
    assert recovery["fidelity"] >= 1 - 1e-9
    u = recovery["isometry"]
    assert np.allclose(u.conj().T @ u, np.eye(u.shape[1]), atol=1e-8)

    with pytest.raises(RuntimeError):
        qsslab.synthesize_recovery(scheme, ["P1"])


def test_load_scheme_and_errors():
    scheme = qsslab.load_scheme('{"encoding": {"builtin": "cgl23"}}')
    assert scheme.name == "cgl23"
    assert scheme.secret_dim == 3

    with pytest.raises(ValueError):
        qsslab.load_scheme("{}")


def test_random_density_determinism():
    layout = [("X", 2), ("Y", 2)]
    a = qsslab.random_density_matrix(layout, 4, 42)
    b = qsslab.random_density_matrix(layout, 4, 42)
    assert np.array_equal(a, b)
    assert np.trace(a) == pytest.approx(1.0, abs=1e-12)
