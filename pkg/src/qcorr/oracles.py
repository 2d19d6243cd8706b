"""Brute-force minimizers over the classical and separable sets.

These oracles validate every closed-form quantifier by direct search: grid
scans refined by golden-section or zooming sub-grids, with trace distances
obtained from eigenvalues of the operator difference rather than from any
r-space shortcut.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericalFailure
from .quantifiers import Norm
from .states import CorrelationVector, XState, bd_to_density

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class SeparableXCandidate:
    """Coherences of a candidate separable X state with a fixed diagonal."""

    e_prime: complex
    f_prime: complex


@dataclass(frozen=True)
class OracleResult:
    minimizer: object  # CorrelationVector or SeparableXCandidate
    distance: float
    evaluations: int


def trace_norm(delta: np.ndarray) -> float:
    """Trace norm of a Hermitian matrix: sum of absolute eigenvalues."""
    delta = np.asarray(delta)
    try:
        w = np.linalg.eigvalsh(delta)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure("eigensolve failed: %s" % exc) from exc
    return float(np.sum(np.abs(w)))


def hs_operator_sq(delta: np.ndarray) -> float:
    """Squared Hilbert-Schmidt norm of an operator difference."""
    delta = np.asarray(delta)
    return float(np.sum(np.abs(delta) ** 2))


def golden_section_min(f, a: float, b: float, tol: float = 1e-8):
    """Minimize a unimodal scalar function on [a, b].

    Returns (x, f(x), evaluations) once the bracket is narrower than tol.
    """
    evals = 0
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    evals += 2
    while (b - a) > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
        evals += 1
    x = 0.5 * (a + b)
    return x, f(x), evals + 1


def _axis_vector(axis: int, t: float) -> CorrelationVector:
    r = [0.0, 0.0, 0.0]
    r[axis] = t
    return CorrelationVector(*r)


def _axis_density_stack(r: CorrelationVector, axis: int, ts: np.ndarray) -> np.ndarray:
    """Real symmetric stack rho(r) - rho(axis state t) for all t at once.

    Bell-diagonal density matrices are real in the computational basis, so the
    differences can be diagonalized as real symmetric matrices.
    """
    base = bd_to_density(r).real - np.eye(4) / 4.0  # identity parts cancel
    deltas = np.broadcast_to(base, (len(ts), 4, 4)).copy()
    quarter = ts / 4.0
    if axis == 0:  # sigma1 x sigma1: full anti-diagonal
        idx = ((0, 1, 2, 3), (3, 2, 1, 0))
        for i, j in zip(*idx):
            deltas[:, i, j] -= quarter
    elif axis == 1:  # sigma2 x sigma2: anti-diagonal with signs (-, +, +, -)
        signs = (-1.0, 1.0, 1.0, -1.0)
        for (i, j), sg in zip(((0, 3), (1, 2), (2, 1), (3, 0)), signs):
            deltas[:, i, j] -= sg * quarter
    else:  # sigma3 x sigma3: diagonal (+, -, -, +)
        signs = (1.0, -1.0, -1.0, 1.0)
        for k, sg in enumerate(signs):
            deltas[:, k, k] -= sg * quarter
    return deltas


def closest_classical(r: CorrelationVector, norm: Norm, grid_step: float = 1e-3) -> OracleResult:
    """Closest point on the Cartesian axes (t, 0, 0), (0, t, 0), (0, 0, t).

    Scans each axis with a coarse grid and refines the best bracket by
    golden-section search to 1e-8.  HS distances are squared Euclidean in
    r-space; trace distances are eigenvalue sums of the operator difference.
    """
    rv = r.as_array()
    rho = bd_to_density(r)
    n_coarse = int(round(2.0 / grid_step)) + 1
    ts = np.linspace(-1.0, 1.0, n_coarse)
    best = None
    evals = 0

    for axis in range(3):
        if norm is Norm.HS:
            rest = sum(rv[k] ** 2 for k in range(3) if k != axis)

            def f(t, axis=axis, rest=rest):
                return (rv[axis] - t) ** 2 + rest

            coarse = (rv[axis] - ts) ** 2 + rest
        else:
            def f(t, axis=axis):
                return trace_norm(rho - bd_to_density(_axis_vector(axis, t)))

            deltas = _axis_density_stack(r, axis, ts)
            coarse = np.abs(np.linalg.eigvalsh(deltas)).sum(axis=1)
        evals += n_coarse
        k = int(np.argmin(coarse))
        lo = ts[max(k - 1, 0)]
        hi = ts[min(k + 1, n_coarse - 1)]
        t_star, f_star, n = golden_section_min(f, lo, hi)
        evals += n
        if best is None or f_star < best[0]:
            best = (f_star, axis, t_star)

    f_star, axis, t_star = best
    return OracleResult(
        minimizer=_axis_vector(axis, t_star), distance=float(f_star), evaluations=evals
    )


def _project_l1_ball(s: np.ndarray) -> np.ndarray:
    """Euclidean projection of a nonnegative vector onto {z >= 0, sum z <= 1}."""
    if s.sum() <= 1.0:
        return s.copy()
    u = np.sort(s)[::-1]
    css = np.cumsum(u) - 1.0
    ks = np.arange(1, len(s) + 1)
    valid = u - css / ks > 0
    k = ks[valid][-1]
    tau = css[k - 1] / k
    return np.maximum(s - tau, 0.0)


def closest_separable_hs(r: CorrelationVector) -> OracleResult:
    """Closest point of the separable octahedron |z1| + |z2| + |z3| <= 1.

    Uses the exact Euclidean projection (soft-thresholded simplex projection
    of the absolute triple, signs restored); interior points project to
    themselves with distance 0.
    """
    s = np.abs(r.as_array())
    z = _project_l1_ball(s)
    signs = np.sign(r.as_array())
    signs[signs == 0.0] = 1.0
    minimizer = CorrelationVector(*(signs * z))
    dist = float(np.sum((s - z) ** 2))
    return OracleResult(minimizer=minimizer, distance=dist, evaluations=1)


def _phase(z: complex) -> complex:
    return z / abs(z) if abs(z) > 0.0 else 1.0 + 0.0j


def _xdiff_trace_norms(
    abs_e: float,
    abs_f: float,
    a: np.ndarray,
    b: np.ndarray,
    diag_delta: np.ndarray | None = None,
) -> np.ndarray:
    """Batched trace norms of rho_X - sigma_X over candidate moduli (a, b).

    With the candidate phases aligned to e and f, conjugation by a diagonal
    phase unitary turns every difference into a real symmetric matrix with
    anti-diagonal entries |e| - a and |f| - b, leaving eigenvalues unchanged.
    diag_delta, when given, is the shared population difference of the stack.
    """
    n = len(a)
    deltas = np.zeros((n, 4, 4))
    de = abs_e - a
    df = abs_f - b
    deltas[:, 0, 3] = de
    deltas[:, 3, 0] = de
    deltas[:, 1, 2] = df
    deltas[:, 2, 1] = df
    if diag_delta is not None:
        for k in range(4):
            deltas[:, k, k] = diag_delta[k]
    w = np.linalg.eigvalsh(deltas)
    return np.abs(w).sum(axis=1)


def closest_separable_trace_xfamily(
    x: XState, n_grid: int = 200, refine_to: float = 1e-7
) -> OracleResult:
    """Trace-norm closest separable X state with the same populations.

    Grid search over the candidate moduli (|e'|, |f'|) in
    [0, min(sqrt(ad), sqrt(bc))]^2, refined by zooming sub-grids; candidate
    phases are aligned with e and f, where the minimum is attained.
    """
    m = min(math.sqrt(max(x.a * x.d, 0.0)), math.sqrt(max(x.b * x.c, 0.0)))
    abs_e, abs_f = abs(x.e), abs(x.f)
    evals = 0

    if m == 0.0:
        best_a = best_f = 0.0
    else:
        ga = np.linspace(0.0, m, n_grid)
        aa, bb = np.meshgrid(ga, ga, indexing="ij")
        flat_a, flat_b = aa.ravel(), bb.ravel()
        vals = _xdiff_trace_norms(abs_e, abs_f, flat_a, flat_b)
        evals += len(vals)
        k = int(np.argmin(vals))
        best_a, best_f = float(flat_a[k]), float(flat_b[k])
        h = m / (n_grid - 1)
        while h > refine_to:
            ga = np.clip(np.linspace(best_a - h, best_a + h, 21), 0.0, m)
            gb = np.clip(np.linspace(best_f - h, best_f + h, 21), 0.0, m)
            aa, bb = np.meshgrid(ga, gb, indexing="ij")
            flat_a, flat_b = aa.ravel(), bb.ravel()
            vals = _xdiff_trace_norms(abs_e, abs_f, flat_a, flat_b)
            evals += len(vals)
            k = int(np.argmin(vals))
            best_a, best_f = float(flat_a[k]), float(flat_b[k])
            h /= 10.0

    cand = SeparableXCandidate(
        e_prime=_phase(x.e) * best_a, f_prime=_phase(x.f) * best_f
    )
    sigma = XState(x.a, x.b, x.c, x.d, cand.e_prime, cand.f_prime)
    dist = trace_norm(x.to_density() - sigma.to_density())
    return OracleResult(minimizer=cand, distance=dist, evaluations=evals + 1)


def clamped_minimizer(x: XState) -> SeparableXCandidate:
    """Analytic minimizer: each coherence kept if feasible, else clamped to the
    separability bound min(sqrt(ad), sqrt(bc)); phases follow e and f."""
    m = min(math.sqrt(max(x.a * x.d, 0.0)), math.sqrt(max(x.b * x.c, 0.0)))
    return SeparableXCandidate(
        e_prime=_phase(x.e) * min(abs(x.e), m),
        f_prime=_phase(x.f) * min(abs(x.f), m),
    )


def wider_separable_search(
    x: XState, rng: np.random.Generator, n_diagonals: int = 200, n_grid: int = 41
) -> OracleResult:
    """Exploratory search over separable X states with *free* diagonals.

    The defined quantity fixes the candidate populations to those of x; this
    search samples other population vectors (uniform on the simplex, plus the
    original) and optimizes the coherences inside each PPT-feasible box.  It
    is reported for information only.
    """
    own = np.array([x.a, x.b, x.c, x.d])
    best: tuple[float, SeparableXCandidate] | None = None
    evals = 0
    diags = [own]
    diags.extend(rng.dirichlet(np.ones(4), size=n_diagonals))
    for diag in diags:
        a, b, c, d = (float(v) for v in diag)
        m = min(math.sqrt(max(a * d, 0.0)), math.sqrt(max(b * c, 0.0)))
        ge = np.linspace(0.0, m, n_grid)
        aa, bb = np.meshgrid(ge, ge, indexing="ij")
        flat_a, flat_b = aa.ravel(), bb.ravel()
        vals = _xdiff_trace_norms(abs(x.e), abs(x.f), flat_a, flat_b, diag_delta=own - diag)
        evals += len(vals)
        k = int(np.argmin(vals))
        if best is None or vals[k] < best[0]:
            best = (
                float(vals[k]),
                SeparableXCandidate(
                    _phase(x.e) * float(flat_a[k]), _phase(x.f) * float(flat_b[k])
                ),
            )
    return OracleResult(minimizer=best[1], distance=best[0], evaluations=evals)
