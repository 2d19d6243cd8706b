"""Acceptance suite: every criterion at its stated tolerance.

Each test prints one `ACCEPTANCE <nn> <name>: PASS|FAIL` line (run pytest
with -s to stream them) and then asserts, so a red test always carries its
deviation in the failure message.
"""

import json

import numpy as np

from conftest import REF
from qcorr.channels import ChannelKind, apply_local_pair, evolved_vector, kraus_for, monotone_p_max
from qcorr.cli import main
from qcorr.dynamics import SUDDEN_CHANGE, SUDDEN_DEATH, contractivity_scan, run_trajectory
from qcorr.oracles import (
    clamped_minimizer,
    closest_classical,
    closest_separable_hs,
    closest_separable_trace_xfamily,
    trace_norm,
)
from qcorr.quantifiers import (
    Norm,
    concurrence_x,
    hs_discord,
    hs_entanglement,
    trace_discord,
    wootters_concurrence,
)
from qcorr.relations import (
    RelationCase,
    critical_times,
    hs_discord_from_entanglement,
    sudden_death_time,
    trace_discord_from_concurrence,
)
from qcorr.sampling import random_bd_pairs, random_entangled_bd, random_entangled_xstate, random_xstate
from qcorr.states import CorrelationVector, XState, bd_to_density, bd_to_xstate, density_to_bd
from qcorr.verify import physical_grid

R0 = CorrelationVector(*REF)
SEED = 42

# one line per criterion; echoed in the terminal summary by conftest.py
LINES: list[str] = []


def _report(num, name, ok, detail=""):
    line = "ACCEPTANCE %02d %s: %s %s" % (num, name, "PASS" if ok else "FAIL", detail)
    LINES.append(line)
    print(line)
    assert ok, "criterion %02d %s failed: %s" % (num, name, detail)


def test_criterion_01_hs_oracle_equivalence():
    grid = physical_grid(9)
    dev_d = max(
        abs(closest_classical(r, Norm.HS).distance - hs_discord(r).value) for r in grid
    )
    dev_e = max(
        abs(closest_separable_hs(r).distance - hs_entanglement(r).value) for r in grid
    )
    _report(
        1,
        "hs_oracle_equivalence",
        dev_d <= 1e-6 and dev_e <= 1e-8,
        "discord_dev=%.3e entanglement_dev=%.3e states=%d" % (dev_d, dev_e, len(grid)),
    )


def test_criterion_02_trace_oracle_equivalence():
    grid = physical_grid(9)
    dev = max(
        abs(closest_classical(r, Norm.TRACE).distance - trace_discord(r).value)
        for r in grid
    )
    _report(2, "trace_oracle_equivalence", dev <= 1e-4, "dev=%.3e" % dev)


def test_criterion_03_trace_distance_identity():
    rng = np.random.default_rng(SEED)
    dev_grid = 0.0
    dev_clamped = 0.0
    for _ in range(1000):
        x = random_entangled_xstate(rng)
        c = concurrence_x(x).value
        dev_grid = max(dev_grid, abs(closest_separable_trace_xfamily(x).distance - c))
        cand = clamped_minimizer(x)
        sigma = XState(x.a, x.b, x.c, x.d, cand.e_prime, cand.f_prime)
        dev_clamped = max(dev_clamped, abs(trace_norm(x.to_density() - sigma.to_density()) - c))
    _report(
        3,
        "trace_distance_identity",
        dev_grid <= 1e-4 and dev_clamped <= 1e-12,
        "grid_dev=%.3e clamped_dev=%.3e" % (dev_grid, dev_clamped),
    )


def test_criterion_04_concurrence_oracle():
    rng = np.random.default_rng(SEED)
    dev = 0.0
    for _ in range(10000):
        x = random_xstate(rng)
        dev = max(dev, abs(wootters_concurrence(x.to_density()) - concurrence_x(x).value))
    _report(4, "wootters_concurrence", dev <= 1e-10, "dev=%.3e" % dev)


def test_criterion_05_channel_agreement():
    grid = physical_grid(5)
    dev = 0.0
    for kind in ChannelKind:
        for p in np.linspace(0.0, 1.0, 11):
            ch = kraus_for(kind, p)
            for r in grid:
                numeric = density_to_bd(apply_local_pair(bd_to_density(r), ch))
                analytic = evolved_vector(kind, r, p)
                dev = max(dev, np.max(np.abs(numeric.as_array() - analytic.as_array())))
    _report(5, "channel_agreement", dev <= 1e-12, "dev=%.3e states=%d" % (dev, len(grid)))


def test_criterion_06_relation_identity():
    rng = np.random.default_rng(SEED)
    states = [random_entangled_bd(rng, min_margin=1e-3, min_gap=1e-3) for _ in range(200)]
    dev = 0.0
    for kind in (
        ChannelKind.PHASE_DAMPING,
        ChannelKind.BIT_FLIP,
        ChannelKind.BIT_PHASE_FLIP,
        ChannelKind.DEPOLARIZING,
    ):
        for r in states:
            case_hs = RelationCase(kind, Norm.HS, r)
            case_tr = RelationCase(kind, Norm.TRACE, r)
            p_sd = sudden_death_time(kind, r)
            ps = np.arange(0.0, p_sd, 1e-3)
            for p in ps:
                rv = evolved_vector(kind, r, p)
                d = hs_discord(rv)
                rec = hs_discord_from_entanglement(
                    hs_entanglement(rv).value, case_hs, branch=d.branch
                )
                dev = max(dev, abs(rec - d.value))
                t = trace_discord(rv)
                c = concurrence_x(bd_to_xstate(rv)).value
                rec = trace_discord_from_concurrence(c, case_tr, piece=t.branch)
                dev = max(dev, abs(rec - t.value))
    _report(6, "relation_identity", dev <= 1e-9, "dev=%.3e" % dev)


def test_criterion_07_pd_event_structure():
    traj = run_trajectory(ChannelKind.PHASE_DAMPING, R0, 1.0, 1001)
    tr = sorted(
        e.p_detected
        for e in traj.event_records
        if e.kind == SUDDEN_CHANGE and e.norm is Norm.TRACE
    )
    hs = [
        e.p_detected
        for e in traj.event_records
        if e.kind == SUDDEN_CHANGE and e.norm is Norm.HS
    ]
    ct_tr = critical_times(RelationCase(ChannelKind.PHASE_DAMPING, Norm.TRACE, R0))
    ct_hs = critical_times(RelationCase(ChannelKind.PHASE_DAMPING, Norm.HS, R0))
    ok = (
        len(tr) == 2
        and len(hs) == 1
        and all(abs(d - a) <= 1e-6 for d, a in zip(tr, ct_tr.sudden_changes))
        and abs(hs[0] - ct_hs.sudden_changes[0]) <= 1e-6
        and np.allclose(tr, [0.19746, 0.23540], atol=5e-6)
        and np.allclose(hs, [0.23540], atol=5e-6)
    )
    deaths = {
        e.norm: e.p_detected for e in traj.event_records if e.kind == SUDDEN_DEATH
    }
    ok = ok and abs(ct_hs.sudden_death - ct_tr.sudden_death) <= 1e-12
    ok = ok and abs(deaths[Norm.HS] - deaths[Norm.TRACE]) <= 1e-12
    ok = ok and abs(deaths[Norm.HS] - 0.29289) <= 5e-6
    _report(
        7,
        "pd_event_structure",
        ok,
        "trace=%s hs=%s death=%.8f" % ([round(p, 6) for p in tr], [round(p, 6) for p in hs], deaths[Norm.HS]),
    )


def test_criterion_08_depol_event_structure():
    traj = run_trajectory(ChannelKind.DEPOLARIZING, R0, 1.0, 1001)
    changes = [e for e in traj.event_records if e.kind == SUDDEN_CHANGE]
    death = traj.death_p()
    ok = not changes and death is not None and abs(death - (1 - np.sqrt(1 / 1.62))) <= 1e-8
    _report(8, "depol_event_structure", ok, "changes=%d death=%.10f" % (len(changes), death))


def test_criterion_09_contractivity():
    rng = np.random.default_rng(SEED)
    pairs = random_bd_pairs(rng, 100)
    worst_hs = worst_tr = 0.0
    clean = True
    for kind in ChannelKind:
        grid = np.linspace(0.0, monotone_p_max(kind), 51)
        rep = contractivity_scan(kind, pairs, grid, tol=1e-12)
        clean = clean and rep.clean
        worst_hs = max(worst_hs, rep.max_increase_hs)
        worst_tr = max(worst_tr, rep.max_increase_trace)
    _report(
        9,
        "contractivity_scan",
        clean,
        "max_increase_hs=%.3e max_increase_trace=%.3e" % (worst_hs, worst_tr),
    )


def test_criterion_10_verify_determinism(tmp_path, capsys):
    argv = ["verify", "--seed", "42", "--grid", "5", "--xstates", "50", "--wootters", "500"]
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    code1 = main(argv + ["--out", str(out1)])
    code2 = main(argv + ["--out", str(out2)])
    capsys.readouterr()
    identical = out1.read_bytes() == out2.read_bytes()
    report = json.loads(out1.read_text())
    ok = identical and code1 == 0 and code2 == 0 and report["all_pass"]
    _report(10, "verify_determinism", ok, "identical=%s exit=%d" % (identical, code1))
