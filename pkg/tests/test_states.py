import numpy as np
import pytest
from hypothesis import given

from conftest import REF, physical_vectors
from qcorr.errors import NonPhysical
from qcorr.states import (
    CorrelationVector,
    RegionLabel,
    XState,
    bd_to_density,
    bd_to_xstate,
    bell_eigenvalues,
    classify_region,
    density_to_bd,
    is_entangled_ppt,
    partial_transpose,
    validate_density,
)


def test_maximally_mixed():
    rho = bd_to_density(CorrelationVector(0, 0, 0))
    np.testing.assert_allclose(rho, np.eye(4) / 4)


def test_vertex_is_bell_projector():
    # (1, 1, -1) is the projector onto (|01> + |10>)/sqrt(2)
    rho = bd_to_density(CorrelationVector(1, 1, -1))
    psi = np.array([0.0, 1.0, 1.0, 0.0]) / np.sqrt(2)
    np.testing.assert_allclose(rho, np.outer(psi, psi), atol=1e-15)
    w = np.linalg.eigvalsh(rho)
    np.testing.assert_allclose(w, [0, 0, 0, 1], atol=1e-15)


def test_reference_state_physical():
    r = CorrelationVector(*REF)
    rho = bd_to_density(r)
    assert np.linalg.eigvalsh(rho).min() >= -1e-15
    validate_density(rho)


def test_nonphysical_raises_with_eigenvalue():
    with pytest.raises(NonPhysical, match="eigenvalue -0.25"):
        CorrelationVector(2, 0, 0)


def test_marginals_maximally_mixed():
    rho = bd_to_density(CorrelationVector(*REF))
    t = rho.reshape(2, 2, 2, 2)
    red_a = np.einsum("ijkj->ik", t)
    red_b = np.einsum("jijk->ik", t)
    np.testing.assert_allclose(red_a, np.eye(2) / 2, atol=1e-15)
    np.testing.assert_allclose(red_b, np.eye(2) / 2, atol=1e-15)


def test_round_trip_reference_states():
    for r in [(-0.7, -0.7, -0.7), REF, (0, 0, 0)]:
        rv = CorrelationVector(*r)
        back = density_to_bd(bd_to_density(rv))
        np.testing.assert_allclose(back.as_array(), rv.as_array(), atol=1e-12)


@given(physical_vectors())
def test_round_trip_property(r):
    back = density_to_bd(bd_to_density(r))
    np.testing.assert_allclose(back.as_array(), r.as_array(), atol=1e-12)


@given(physical_vectors())
def test_bell_eigenvalues_match_numeric(r):
    rho = bd_to_density(r)
    np.testing.assert_allclose(
        sorted(bell_eigenvalues(r.r1, r.r2, r.r3)),
        np.linalg.eigvalsh(rho),
        atol=1e-12,
    )


def test_bd_to_xstate_examples():
    assert bd_to_xstate(CorrelationVector(0, 0, 0)) == XState(0.25, 0.25, 0.25, 0.25, 0, 0)
    x = bd_to_xstate(CorrelationVector(1, 1, -1))
    assert (x.a, x.b, x.c, x.d) == (0, 0.5, 0.5, 0)
    assert x.e == 0 and x.f == 0.5
    x = bd_to_xstate(CorrelationVector(*REF))
    np.testing.assert_allclose(
        [x.a, x.b, x.c, x.d, x.e.real, x.f.real],
        [0.155, 0.345, 0.345, 0.155, 0.015, 0.31],
        atol=1e-15,
    )


@given(physical_vectors())
def test_xstate_embedding_matches_density(r):
    np.testing.assert_allclose(
        bd_to_xstate(r).to_density(), bd_to_density(r), atol=1e-14
    )


def test_classify_examples():
    assert classify_region(CorrelationVector(1, 1, -1)) is RegionLabel.ENTANGLED
    assert classify_region(CorrelationVector(0.3, 0, 0)) is RegionLabel.CLASSICAL
    assert classify_region(CorrelationVector(*REF)) is RegionLabel.ENTANGLED
    assert (
        classify_region(CorrelationVector(0.3, 0.3, 0.3))
        is RegionLabel.SEPARABLE_NONCLASSICAL
    )


@given(physical_vectors())
def test_classify_matches_ppt(r):
    # skip near the octahedron boundary where both tests are tolerance-limited
    margin = sum(r.abs_triple()) - 1.0
    if abs(margin) < 1e-9:
        return
    entangled = classify_region(r) is RegionLabel.ENTANGLED
    assert entangled == is_entangled_ppt(bd_to_density(r))


def test_partial_transpose_involution():
    rho = bd_to_density(CorrelationVector(*REF))
    np.testing.assert_allclose(partial_transpose(partial_transpose(rho)), rho)


def test_xstate_invariants():
    with pytest.raises(NonPhysical, match="exceeds"):
        XState(0.25, 0.25, 0.25, 0.25, 0.3, 0)
    with pytest.raises(NonPhysical, match="sum"):
        XState(0.5, 0.5, 0.5, 0.5, 0, 0)


def test_json_round_trips():
    r = CorrelationVector(*REF)
    assert CorrelationVector.from_json(r.to_json()) == r
    x = bd_to_xstate(r)
    assert XState.from_json(x.to_json()) == x
    x2 = XState(0.4, 0.2, 0.2, 0.2, 0.1 + 0.05j, 0.1j)
    assert XState.from_json(x2.to_json()) == x2


def test_density_matrices_are_read_only():
    rho = bd_to_density(CorrelationVector(*REF))
    with pytest.raises(ValueError):
        rho[0, 0] = 1.0
