"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines as they complete.
"""

import time
from contextlib import contextmanager
from functools import lru_cache

import numpy as np
import pytest

from nhrlc import (
    CircuitParams,
    ExistenceViolation,
    InitialData,
    Phase,
    compare,
    eigensystem,
    ep_system,
    evolve_closed_form,
    evolve_integrated,
    evolve_spectral,
    fermionize,
    gain_hamiltonian,
    hamiltonian,
    hpf_build,
    is_similar,
    ladder_check,
    lemma_hypothesis,
    lemma_similarity_residual,
    liouville,
    m_equivalent,
    metric_pair,
    pf_identify,
    positive_pair,
    pt_check,
    similar_hamiltonian,
    solve_intertwiners,
    sqrt_pos_hermitian,
    uniform_grid,
    verify_intertwining,
)
from nhrlc.cli import main

from helpers import draw_params, random_invertible

SQ2 = np.sqrt(2.0)


@contextmanager
def criterion(number, name):
    try:
        yield
    except BaseException:
        print(f"criterion {number:2d} [{name}]: FAIL")
        raise
    print(f"criterion {number:2d} [{name}]: PASS")


@lru_cache(maxsize=None)
def phase_draws(phase_name, count, seed):
    rng = np.random.default_rng(seed)
    phase = Phase[phase_name]
    return tuple(draw_params(rng, phase) for _ in range(count))


def test_criterion_1_golden_reproduction():
    with criterion(1, "golden worked-example reproduction"):
        start = time.perf_counter()
        params = CircuitParams.from_rates(1 / SQ2, 1.0)
        system = eigensystem(params)
        assert abs(system.lambda_plus - (1 - 1j) / SQ2) < 1e-12
        assert abs(system.lambda_minus - (-1 - 1j) / SQ2) < 1e-12
        assert abs(np.conj(system.n_phi_plus) * system.n_psi_plus - (1 - 1j) / 2) < 1e-12
        assert abs(np.conj(system.n_phi_minus) * system.n_psi_minus - (1 + 1j) / 2) < 1e-12
        pair = metric_pair(system)
        assert np.abs(pair.s_phi - np.array([[1, -1 / SQ2], [-1 / SQ2, 1]])).max() < 1e-12
        assert np.abs(pair.s_psi - np.array([[2, SQ2], [SQ2, 2]])).max() < 1e-12
        h_sim = similar_hamiltonian(system, pair, hamiltonian(params))
        assert np.abs(h_sim - 1j * np.array([[-SQ2, 1], [-1, 0]])).max() < 1e-12
        assert time.perf_counter() - start < 1.0


def test_criterion_2_biorthogonality_laws():
    with criterion(2, "phase-dependent biorthogonality laws"):
        for phase_name, same, crossed in (
            ("BROKEN", 1.0, 0.0),
            ("UNBROKEN", 0.0, 1.0),
        ):
            for params in phase_draws(phase_name, 200, seed=101):
                system = eigensystem(params)
                assert abs(system.n_pp - same) < 1e-12
                assert abs(system.n_mm - same) < 1e-12
                assert abs(system.n_pm - crossed) < 1e-12
                assert abs(system.n_mp - crossed) < 1e-12


def test_criterion_3_metric_laws():
    with criterion(3, "metric pair and intertwining laws"):
        for phase_name in ("BROKEN", "UNBROKEN"):
            for params in phase_draws(phase_name, 200, seed=101):
                system = eigensystem(params)
                pair = metric_pair(system)
                assert np.abs(pair.s_phi @ pair.s_psi - np.eye(2)).max() < 1e-12
                if system.phase is Phase.BROKEN:
                    assert np.abs(pair.s_phi - pair.s_phi.conj().T).max() < 1e-14
                    assert np.abs(pair.s_psi - pair.s_psi.conj().T).max() < 1e-14
                    sqrt_pos_hermitian(pair.s_phi)  # raises unless positive
                    sqrt_pos_hermitian(pair.s_psi)
                else:
                    assert np.linalg.norm(pair.s_phi @ system.psi_plus - system.phi_plus) < 1e-11
                    assert np.linalg.norm(pair.s_psi @ system.phi_minus - system.psi_minus) < 1e-11
                h = hamiltonian(params)
                report = verify_intertwining(h, similar_hamiltonian(system, pair, h), pair)
                assert report.residual_h_sphi < 1e-11
                assert report.residual_spsi_h < 1e-11
                assert report.residual_adjoint < 1e-11


def test_criterion_4_intertwiner_nonexistence():
    with criterion(4, "no intertwiner between H and its adjoint"):
        for params in phase_draws("BROKEN", 100, seed=102):
            assert solve_intertwiners(hamiltonian(params), gain_hamiltonian(params)) == []
        identity = np.eye(2)
        shear = np.array([[1.0, 1.0], [0.0, 1.0]])
        assert len(solve_intertwiners(shear, identity)) == 2
        assert not is_similar(identity, shear)
        assert m_equivalent(identity, shear)


def test_criterion_5_m_equivalence_ledger():
    with criterion(5, "equal invariants only at the special parameter"):
        h_b = np.array([[1.0, 2.0], [1.0, 0.0]])
        for beta, expected in ((-1.0, True), (0.0, False), (5.0, False)):
            h_a = np.array([[2.0, 3.0], [0.0, beta]])
            assert m_equivalent(h_a, h_b) is expected
            assert len(solve_intertwiners(h_a, h_b)) >= 1


def test_criterion_6_ladder_pair_suite():
    with criterion(6, "ladder pair algebra and identification"):
        eye = np.eye(2)
        for phase_name in ("BROKEN", "UNBROKEN"):
            for params in phase_draws(phase_name, 100, seed=103):
                h = hamiltonian(params)
                system = eigensystem(params)
                for branch in ("plus", "minus"):
                    pf = pf_identify(params, branch)
                    assert np.abs(pf.c_op @ pf.cc_op + pf.cc_op @ pf.c_op - eye).max() < 1e-11
                    assert np.abs(pf.c_op @ pf.c_op).max() < 1e-11
                    assert np.abs(pf.cc_op @ pf.cc_op).max() < 1e-11
                    assert np.abs(hpf_build(pf) - h).max() < 1e-12
                    assert max(ladder_check(pf, system).values()) < 1e-11
        with pytest.raises(ExistenceViolation):
            pf_identify(CircuitParams.from_rates(2.0 * (1.0 + 1e-13), 2.0), "plus")


def test_criterion_7_fermionization():
    with criterion(7, "fermionization through metric square roots"):
        eye = np.eye(2)
        for params in phase_draws("BROKEN", 100, seed=104):
            system = eigensystem(params)
            pair = positive_pair(system)
            fz = fermionize(pf_identify(params, "plus"), pair)
            adag = fz.a_op.conj().T
            assert np.abs(fz.a_op @ adag + adag @ fz.a_op - eye).max() < 1e-11
            assert np.abs(fz.a_op @ fz.a_op).max() < 1e-11
            assert abs(np.linalg.norm(fz.e_plus) - 1.0) < 1e-11
            assert abs(np.linalg.norm(fz.e_minus) - 1.0) < 1e-11
            assert abs(np.vdot(fz.e_minus, fz.e_plus)) < 1e-11
            rebuilt = sqrt_pos_hermitian(pair.s_phi) @ fz.h_fho @ sqrt_pos_hermitian(pair.s_psi)
            assert np.abs(rebuilt - hamiltonian(params)).max() < 1e-11


def test_criterion_8_pt_symmetry_grid():
    with criterion(8, "parity-conjugation symmetry only at the lossless unit point"):
        alphas = np.linspace(0.0, 2.0, 50)
        omegas = np.linspace(2.0 / 50.0, 2.0, 50)
        hits = []
        for i, alpha in enumerate(alphas):
            for j, w0 in enumerate(omegas):
                h = hamiltonian(CircuitParams.from_rates(float(alpha), float(w0)))
                if pt_check(h).is_pt_symmetric:
                    hits.append((i, j))
        assert hits == [(0, 24)]
        assert alphas[0] == 0.0 and abs(omegas[24] - 1.0) < 1e-12


def test_criterion_9_dynamics_triple_agreement():
    with criterion(9, "three-route evolution agreement and RK order"):
        start = time.perf_counter()
        rng = np.random.default_rng(105)
        grid = uniform_grid(10.0, 0.01)
        for _ in range(50):
            params = draw_params(rng, Phase.BROKEN)
            init = InitialData(i0=1.0, v0=float(rng.normal()), inductance=1.0)
            closed = evolve_closed_form(params, init, grid)
            spectral = evolve_spectral(params, init, grid)
            rk = evolve_integrated(params, init, grid, step=1e-3)
            assert compare(closed, spectral)[0] < 1e-10
            assert compare(closed, rk)[0] < 1e-6
        conv_grid = uniform_grid(5.0, 0.04)
        ref_params = CircuitParams.from_rates(1 / SQ2, 1.0)
        ref_init = InitialData(i0=1.0, v0=0.0, inductance=1.0)
        ref = evolve_closed_form(ref_params, ref_init, conv_grid)
        errors = [
            compare(ref, evolve_integrated(ref_params, ref_init, conv_grid, step=s))[0]
            for s in (0.02, 0.01, 0.005)
        ]
        for coarse, fine in zip(errors, errors[1:]):
            assert 16.0 * 0.8 < coarse / fine < 16.0 * 1.2
        assert time.perf_counter() - start < 30.0


def test_criterion_10_exceptional_point_behavior(capsys):
    with criterion(10, "self-orthogonality and sweep coalescence"):
        ep = ep_system(CircuitParams.from_rates(2.0, 2.0))
        assert abs(ep.self_orthogonality) < 1e-12
        code = main(["sweep", "--omega0", "1", "--alpha-min", "0",
                     "--alpha-max", "2", "--steps", "201"])
        out = capsys.readouterr().out
        assert code == 0
        rows = out.strip().splitlines()[1:]
        gaps = []
        for row in rows:
            fields = row.split(",")
            lam_p = complex(float(fields[1]), float(fields[2]))
            lam_m = complex(float(fields[3]), float(fields[4]))
            gaps.append((abs(lam_p - lam_m), float(fields[0])))
        _, alpha_at_min = min(gaps)
        assert abs(alpha_at_min - 1.0) <= 0.01 + 1e-12


def test_criterion_11_coupled_circuit_lemma():
    with criterion(11, "coupled-circuit similarity lemma"):
        a, mu, g = 2.0, 0.3, 2.0  # 2a = g^2
        system = liouville(-g, a, a * mu, g, a, a * mu)
        assert lemma_hypothesis(system)
        rng = np.random.default_rng(106)
        for _ in range(20):
            assert lemma_similarity_residual(system, random_invertible(rng, 4)) < 1e-10
        a, g = 1.0, 1.0  # 2a != g^2
        assert not lemma_hypothesis(liouville(-g, a, a * mu, g, a, a * mu))
