"""Direct discord-entanglement relations and analytic critical times.

For the dephasing-type channels (phase damping, bit flip, bit-phase flip,
phase flip) one correlation axis is preserved while the other two decay by a
common factor g(p); writing the initial state in a channel-canonical order
(decaying axes first, preserved axis last) reduces every case to the phase
damping analysis.  Under depolarizing noise all three axes share the factor.

The relation functions invert the entanglement (HS norm) or the concurrence
(trace norm) for g(p) and substitute it into the active discord branch, so
applying them to a directly computed E or C must reproduce the directly
computed discord piecewise.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .channels import (
    PRESERVED_AXIS,
    ChannelKind,
    evolved_vector,
    inverse_decay_p,
)
from .errors import (
    BranchUnknown,
    DegenerateOrdering,
    NotEntangled,
    OutOfRange,
    WindowViolation,
)
from .quantifiers import Norm, concurrence_x, hs_discord, trace_discord
from .states import CorrelationVector, bd_to_xstate

_ORDER_TOL = 1e-12
_WINDOW_TOL = 1e-9

# canonical slot -> original axis, with the preserved axis in the last slot
_CANONICAL_PERM = {
    ChannelKind.PHASE_DAMPING: (0, 1, 2),
    ChannelKind.PHASE_FLIP: (0, 1, 2),
    ChannelKind.BIT_FLIP: (1, 2, 0),
    ChannelKind.BIT_PHASE_FLIP: (0, 2, 1),
    ChannelKind.DEPOLARIZING: (0, 1, 2),
}


@dataclass(frozen=True)
class RelationCase:
    """A channel/norm/initial-state combination for the relation formulas."""

    channel: ChannelKind
    norm: Norm
    initial: CorrelationVector


@dataclass(frozen=True)
class CriticalTimes:
    sudden_changes: tuple[float, ...]
    sudden_death: float | None


def ordering(r: CorrelationVector) -> tuple[int, int, int]:
    """1-based axis indices sorted by increasing |r_i|; ties are rejected."""
    s = r.abs_triple()
    for i in range(3):
        for j in range(i + 1, 3):
            if abs(s[i] - s[j]) <= _ORDER_TOL:
                raise DegenerateOrdering(
                    "|r%d| = |r%d| = %.12g: piecewise case analysis undefined"
                    % (i + 1, j + 1, s[i])
                )
    return tuple(sorted((1, 2, 3), key=lambda k: s[k - 1]))


def _canonical(channel: ChannelKind, r: CorrelationVector):
    perm = _CANONICAL_PERM[channel]
    rv = (r.r1, r.r2, r.r3)
    u = tuple(rv[j] for j in perm)
    s = tuple(abs(v) for v in u)
    return perm, u, s


def _death_factor(channel: ChannelKind, r: CorrelationVector) -> float:
    """Decay factor g at which the evolved state reaches the octahedron."""
    _, _, s = _canonical(channel, r)
    if sum(s) <= 1.0:
        raise NotEntangled(
            "initial state (%g, %g, %g) is separable" % (r.r1, r.r2, r.r3)
        )
    if channel is ChannelKind.DEPOLARIZING:
        return 1.0 / sum(s)
    return (1.0 - s[2]) / (s[0] + s[1])


def sudden_death_time(channel: ChannelKind, r: CorrelationVector) -> float:
    """Analytic entanglement sudden-death time; raises NotEntangled when the
    initial state already lies inside the separable octahedron."""
    return inverse_decay_p(channel, _death_factor(channel, r))


def _mirrored(channel: ChannelKind, p: float) -> list[float]:
    """A crossing of the decay factor and, for phase flip, its mirror image
    on the rising side of (1 - 2p)^2."""
    if channel is ChannelKind.PHASE_FLIP and 0.0 < p < 0.5:
        return [p, 1.0 - p]
    return [p]


@lru_cache(maxsize=4096)
def critical_times(case: RelationCase) -> CriticalTimes:
    """Sudden-change times of the discord and the sudden-death time.

    Dephasing-type channels: the HS discord switches branch when the dominant
    decaying component crosses the preserved one; the trace discord switches
    whenever a decaying component crosses it.  Depolarizing dynamics never
    exhibits a sudden change.  Orderings with coinciding |r_i| are rejected.
    """
    ordering(case.initial)
    channel = case.channel
    changes: list[float] = []
    if channel is not ChannelKind.DEPOLARIZING:
        _, _, s = _canonical(channel, case.initial)
        if case.norm is Norm.HS:
            smax = max(s[0], s[1])
            if smax > s[2] > 0.0:
                changes += _mirrored(channel, inverse_decay_p(channel, s[2] / smax))
        else:
            for si in (s[0], s[1]):
                if si > s[2] > 0.0:
                    changes += _mirrored(channel, inverse_decay_p(channel, s[2] / si))
    try:
        death = sudden_death_time(channel, case.initial)
    except NotEntangled:
        death = None
    return CriticalTimes(sudden_changes=tuple(sorted(changes)), sudden_death=death)


def hs_branch_at(case: RelationCase, p: float) -> str:
    """Active HS-discord branch along the trajectory at probability p."""
    return hs_discord(evolved_vector(case.channel, case.initial, p)).branch


def trace_piece_at(case: RelationCase, p: float) -> str:
    """Component attaining the intermediate value at probability p."""
    return trace_discord(evolved_vector(case.channel, case.initial, p)).branch


def is_extrapolated_piece(case: RelationCase, p: float) -> bool:
    """True on the post-sudden-change segment of the single-change trace case,
    whose D(C) form is obtained by the same substitution but has no stated
    counterpart; flagged so downstream output can mark it."""
    if case.channel is ChannelKind.DEPOLARIZING or case.norm is not Norm.TRACE:
        return False
    try:
        _, _, s = _canonical(case.channel, case.initial)
        single_change = min(s[0], s[1]) < s[2] < max(s[0], s[1])
        if not single_change:
            return False
        times = critical_times(case)
        return bool(times.sudden_changes) and p > times.sudden_changes[0]
    except DegenerateOrdering:
        return False


def _branch_index(label: str | None, prefix: str) -> int:
    if label is None:
        raise BranchUnknown("active branch label is required")
    if len(label) == 2 and label[0] == prefix and label[1] in "123":
        return int(label[1]) - 1
    raise BranchUnknown("unrecognized branch label %r" % label)


def _p_from_factor(channel: ChannelKind, g: float, what: str) -> float:
    if g > 1.0 + _WINDOW_TOL:
        raise WindowViolation("%s exceeds its initial value (factor %.12g > 1)" % (what, g))
    return inverse_decay_p(channel, min(g, 1.0))


def _check_death_window(channel: ChannelKind, r: CorrelationVector, g: float, what: str):
    g_sd = _death_factor(channel, r)
    if g < g_sd - _WINDOW_TOL:
        raise WindowViolation(
            "%s lies beyond sudden death (factor %.12g < %.12g)" % (what, g, g_sd)
        )


def hs_discord_from_entanglement(E: float, case: RelationCase, branch: str | None = None) -> float:
    """HS discord reconstructed from the HS entanglement on the active branch.

    Inverts E = ((s1 + s2) g + s3 - 1)^2 / 3 (dephasing-type; all-axes sum for
    depolarizing) for the decay factor g and evaluates the branch's distance
    to the corresponding axis.  Valid for p in [0, p_SD] on the branch's own
    window; outside it WindowViolation is raised.
    """
    idx = _branch_index(branch, "D")
    if E < 0.0:
        raise OutOfRange("entanglement E = %g is negative" % E)
    channel = case.channel
    perm, _, s = _canonical(channel, case.initial)
    root = (3.0 * E) ** 0.5
    if channel is ChannelKind.DEPOLARIZING:
        total = sum(s)
        if total <= 1.0:
            raise NotEntangled("initial state is separable")
        g = (root + 1.0) / total
    else:
        if s[0] + s[1] == 0.0:
            raise NotEntangled("initial state has no decaying components")
        g = (root - s[2] + 1.0) / (s[0] + s[1])
    _check_death_window(channel, case.initial, g, "E")
    p = _p_from_factor(channel, g, "E")
    if hs_branch_at(case, p) != "D%d" % (idx + 1):
        dvals = _hs_branch_values(case, p)
        if dvals[idx] > min(dvals) + _WINDOW_TOL:
            raise WindowViolation(
                "branch D%d is not active at p = %.9g" % (idx + 1, p)
            )
    gsq = g * g
    if channel is ChannelKind.DEPOLARIZING:
        others = [s[k] for k in range(3) if k != idx]
        return gsq * (others[0] ** 2 + others[1] ** 2)
    slot = perm.index(idx)
    if slot == 2:  # distance to the preserved axis
        return (s[0] ** 2 + s[1] ** 2) * gsq
    other = 1 - slot
    return s[other] ** 2 * gsq + s[2] ** 2


def _hs_branch_values(case: RelationCase, p: float) -> tuple[float, float, float]:
    rv = evolved_vector(case.channel, case.initial, p)
    return (
        rv.r2 ** 2 + rv.r3 ** 2,
        rv.r1 ** 2 + rv.r3 ** 2,
        rv.r1 ** 2 + rv.r2 ** 2,
    )


def trace_discord_from_concurrence(C: float, case: RelationCase, piece: str | None = None) -> float:
    """Trace discord reconstructed from the concurrence on the active piece.

    The winning concurrence branch of the (canonically ordered) initial state
    fixes the sign pairing: C1 pairs (|u2 - u1|, |1 - u3|), C2 pairs
    (|u2 + u1|, |1 + u3|).  Decaying pieces evaluate |r_i| g(C); the preserved
    piece is the constant plateau.  WindowViolation outside the piece window.
    """
    idx = _branch_index(piece, "r")
    if C < 0.0:
        raise OutOfRange("concurrence C = %g is negative" % C)
    channel = case.channel
    perm, u, s = _canonical(channel, case.initial)
    cx = concurrence_x(bd_to_xstate(CorrelationVector(*u)))
    if cx.branch is None:
        raise NotEntangled("initial state has zero concurrence")
    if channel is ChannelKind.DEPOLARIZING:
        if cx.branch == "C1":
            denom = abs(u[0] - u[1]) + u[2]
        else:
            denom = abs(u[0] + u[1]) - u[2]
        g = (2.0 * C + 1.0) / denom
    else:
        if cx.branch == "C1":
            amp, off = abs(u[1] - u[0]), abs(1.0 - u[2])
        else:
            amp, off = abs(u[1] + u[0]), abs(1.0 + u[2])
        g = (2.0 * C + off) / amp
    _check_death_window(channel, case.initial, g, "C")
    p = _p_from_factor(channel, g, "C")
    if trace_piece_at(case, p) != "r%d" % (idx + 1):
        sv = [abs(v) for v in evolved_vector(channel, case.initial, p).as_array()]
        mid = sorted(sv)[1]
        if abs(sv[idx] - mid) > _WINDOW_TOL:
            raise WindowViolation("piece r%d is not active at p = %.9g" % (idx + 1, p))
    if channel is not ChannelKind.DEPOLARIZING and perm.index(idx) == 2:
        return s[2]
    return abs((case.initial.r1, case.initial.r2, case.initial.r3)[idx]) * g


def piecewise_discord_pd_trace(p: float, r0: CorrelationVector) -> float:
    """Piecewise trace discord of a phase-damped Bell-diagonal state.

    Evaluates the analytic piece active at p: a decaying |r_i| (1 - p)^2 or
    the |r3| plateau, per the strict ordering of the initial moduli.
    """
    if not 0.0 <= p <= 1.0:
        raise OutOfRange("p = %g outside [0, 1]" % p)
    ordering(r0)
    case = RelationCase(ChannelKind.PHASE_DAMPING, Norm.TRACE, r0)
    idx = _branch_index(trace_piece_at(case, p), "r")
    if idx == PRESERVED_AXIS[ChannelKind.PHASE_DAMPING]:
        return abs(r0.r3)
    return abs((r0.r1, r0.r2, r0.r3)[idx]) * (1.0 - p) ** 2
