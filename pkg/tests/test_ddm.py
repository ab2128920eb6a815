"""Tests for subdomain solves, the Schwarz iteration and initial guesses"""

import numpy as np
import pytest

from src.ddm import SchwarzSolver, coarse_initialize, quadratic_seed, solve_global
from src.ddm.initialization import coarse_start
from src.exceptions import LinearSolveFailure
from src.geometry import build_grid
from src.models.domain import DecompositionSpec, DomainSpec
from src.models.solver import DdmConfig, NewtonConfig
from src.problems import SampledProblem
from src.scheme import MongeAmpereScheme


def ddm_config(m: int, n: int, overlap: float, **kwargs) -> DdmConfig:
    return DdmConfig(decomposition=DecompositionSpec.uniform(m, n, overlap), **kwargs)


@pytest.fixture
def global_solution(coarse_grid, ex1):
    scheme = MongeAmpereScheme(coarse_grid)
    data = ex1.sample(coarse_grid)
    tight = NewtonConfig(tolerance=coarse_grid.h / 100)
    u, report = solve_global(scheme, data, coarse_initialize(ex1, coarse_grid), tight)
    assert report.converged
    return u


def test_single_subdomain_iterate_is_global_solve(coarse_grid, ex1, global_solution):
    solver = SchwarzSolver(coarse_grid, ex1, ddm_config(1, 1, 0.2))
    seed = quadratic_seed(coarse_grid, solver.data)
    u_next, reports = solver.iterate(seed)
    assert len(reports) == 1
    assert np.max(np.abs(u_next - global_solution)) <= 10 * coarse_grid.h
    assert solver.scheme.residual_norm(u_next, solver.data) < coarse_grid.h


def test_subdomain_residual_branches(coarse_grid, ex1, global_solution):
    solver = SchwarzSolver(coarse_grid, ex1, ddm_config(2, 1, 0.2))
    outside = coarse_grid.node_id(coarse_grid.spec.N, 1)
    assert outside not in solver.decomposition[0]
    v = global_solution
    assert solver.subdomain_residual(0, v, v, outside) == 0.0
    inside = coarse_grid.node_id(1, 1)
    assert solver.subdomain_residual(0, v, v, inside) == pytest.approx(
        solver.scheme.residual(v, solver.data, inside)
    )
    boundary = coarse_grid.n_interior
    assert solver.subdomain_residual(0, v, v, boundary) == 0.0


def test_solve_subdomain_keeps_exterior(coarse_grid, ex1, global_solution):
    solver = SchwarzSolver(coarse_grid, ex1, ddm_config(2, 1, 0.2))
    v = global_solution + 0.05
    u_0, report = solver.solve_subdomain(0, v)
    assert report.converged
    outside = ~solver.decomposition[0].mask
    n = coarse_grid.n_interior
    np.testing.assert_array_equal(u_0[:n][outside], v[:n][outside])
    np.testing.assert_array_equal(u_0[coarse_grid.n_interior:], solver.data.g)


def test_subdomain_fixed_point(coarse_grid, ex1, global_solution):
    solver = SchwarzSolver(coarse_grid, ex1, ddm_config(2, 2, 0.2))
    for i in range(len(solver.decomposition)):
        u_i, report = solver.solve_subdomain(i, global_solution)
        assert report.iterations <= 1
        assert np.max(np.abs(u_i - global_solution)) <= 10 * coarse_grid.h


def test_subdomain_comparison(coarse_grid, ex1, global_solution):
    """Ordered exterior data gives ordered subdomain solutions"""
    solver = SchwarzSolver(coarse_grid, ex1, ddm_config(2, 1, 0.2))
    low, _ = solver.solve_subdomain(0, global_solution - 0.2)
    high, _ = solver.solve_subdomain(0, global_solution + 0.2)
    assert np.all(low <= high + 10 * coarse_grid.h)


@pytest.mark.parametrize("problem_name", ["ex1", "ex2"])
@pytest.mark.parametrize("m, n", [(2, 1), (2, 2)])
@pytest.mark.parametrize("overlap", [0.1, 0.4])
def test_matches_single_domain_solution(problem_name, m, n, overlap, request):
    """h = 0.05 on (-0.5, 0.5)^2"""
    problem = request.getfixturevalue(problem_name)
    grid = build_grid(DomainSpec.from_spacing(0.5, 0.05))
    scheme = MongeAmpereScheme(grid)
    data = problem.sample(grid)
    reference, _ = solve_global(scheme, data, coarse_initialize(problem, grid), NewtonConfig())

    u, report = SchwarzSolver(grid, problem, ddm_config(m, n, overlap)).solve()

    assert report.converged
    assert report.residual_history[-1] < grid.h
    assert np.max(np.abs(u - reference)) <= 10 * grid.h
    np.testing.assert_array_equal(u[grid.n_interior:], data.g)


def test_fixed_point_after_convergence(coarse_grid, ex1):
    solver = SchwarzSolver(coarse_grid, ex1, ddm_config(2, 2, 0.2))
    u, report = solver.solve()
    assert report.converged
    u_next, _ = solver.iterate(u)
    assert np.max(np.abs(u_next - u)) <= 10 * coarse_grid.h


def test_monotone_from_subsolution(coarse_grid, ex1, global_solution):
    """Starting 10 below the solution, iterates increase node-wise and converge"""
    solver = SchwarzSolver(coarse_grid, ex1, ddm_config(2, 1, 0.2))
    u = solver.data.with_boundary(global_solution - 10.0)
    slack = 10 * coarse_grid.h
    for _ in range(solver.cfg.max_outer):
        if solver.scheme.residual_norm(u, solver.data) < coarse_grid.h:
            break
        u_next, _ = solver.iterate(u)
        assert np.all(u_next >= u - slack)
        u = u_next
    assert solver.scheme.residual_norm(u, solver.data) < coarse_grid.h


def test_threads_do_not_change_iterates(coarse_grid, ex1):
    serial = SchwarzSolver(coarse_grid, ex1, ddm_config(2, 2, 0.2))
    threaded = SchwarzSolver(coarse_grid, ex1, ddm_config(2, 2, 0.2, threads=4))
    u0, _ = serial.initial_guess()
    a, _ = serial.iterate(u0)
    b, _ = threaded.iterate(u0)
    np.testing.assert_array_equal(a, b)


def test_subdomain_threshold_scales_with_subdomain_count():
    assert ddm_config(1, 1, 0.2).subdomain_threshold(0.05) == pytest.approx(0.05)
    assert ddm_config(2, 2, 0.2).subdomain_threshold(0.05) == pytest.approx(0.0125)
    explicit = ddm_config(2, 2, 0.2, newton=NewtonConfig(tolerance=0.03))
    assert explicit.subdomain_threshold(0.05) == 0.03


def test_stalled_outer_iteration_stops(coarse_grid, ex1):
    """Subdomain solves looser than the outer threshold end with converged=false"""
    cfg = ddm_config(
        2,
        2,
        0.2,
        newton=NewtonConfig(tolerance=coarse_grid.h),
        outer_tolerance=1e-10,
        max_outer=100,
    )
    u, report = SchwarzSolver(coarse_grid, ex1, cfg).solve()
    assert not report.converged
    assert report.outer_iterations < 100
    assert report.message == "outer iteration stalled"
    assert report.residual_history[-1] < 2 * coarse_grid.h
    np.testing.assert_array_equal(u[coarse_grid.n_interior:], ex1.sample(coarse_grid).g)


@pytest.mark.parametrize(
    "problem_name, L, m, n, overlap, low, high",
    [
        ("ex1", 0.5, 2, 1, 0.1, 4, 14),
        ("ex1", 2.0, 2, 2, 0.4, 5, 18),
        ("ex2", 1.0, 2, 2, 0.2, 5, 20),
    ],
)
def test_outer_iteration_bands(problem_name, L, m, n, overlap, low, high, request):
    """h = 0.05"""
    problem = request.getfixturevalue(problem_name)
    grid = build_grid(DomainSpec.from_spacing(L, 0.05))
    _, report = SchwarzSolver(grid, problem, ddm_config(m, n, overlap)).solve()
    assert report.converged
    assert low <= report.outer_iterations <= high


@pytest.mark.parametrize("m, n", [(2, 1), (2, 2)])
@pytest.mark.parametrize("L", [0.5, 1.0])
def test_more_overlap_needs_fewer_iterations(L, m, n, ex1):
    grid = build_grid(DomainSpec.from_spacing(L, 0.05))
    _, narrow = SchwarzSolver(grid, ex1, ddm_config(m, n, 0.1)).solve()
    _, wide = SchwarzSolver(grid, ex1, ddm_config(m, n, 0.4)).solve()
    assert narrow.converged and wide.converged
    assert wide.outer_iterations <= narrow.outer_iterations


def test_iterations_grow_slowly_with_subdomains(ex1):
    """m = n in {2, 3, 4} at p = 20%: non-decreasing, less than quadratic growth"""
    grid = build_grid(DomainSpec.from_spacing(0.5, 0.05))
    counts = []
    for k in (2, 3, 4):
        _, report = SchwarzSolver(grid, ex1, ddm_config(k, k, 0.2)).solve()
        assert report.converged
        counts.append(report.outer_iterations)
    assert counts == sorted(counts)
    assert counts[2] / counts[0] < 4


def test_coarse_start_interpolates(ex1):
    """N=19 coarsens to N_c=4 whose nodes coincide with every fourth fine node"""
    grid = build_grid(DomainSpec(L=0.5, N=19))
    u, fell_back = coarse_start(ex1, grid)
    assert not fell_back

    coarse = build_grid(grid.spec.coarsened())
    assert coarse.spec.N == 4
    coarse_data = ex1.sample(coarse)
    u_coarse, _ = solve_global(
        MongeAmpereScheme(coarse), coarse_data, quadratic_seed(coarse, coarse_data), NewtonConfig()
    )
    for a in range(1, 5):
        for b in range(1, 5):
            fine = grid.node_id(4 * a, 4 * b)
            assert u[fine] == pytest.approx(u_coarse[coarse.node_id(a, b)], abs=1e-10)

    corners = [u_coarse[coarse.node_id(a, b)] for a in (1, 2) for b in (1, 2)]
    assert u[grid.node_id(6, 6)] == pytest.approx(np.mean(corners), abs=1e-10)
    np.testing.assert_array_equal(u[grid.n_interior:], ex1.sample(grid).g)


def test_coarse_start_beats_flat_guess(ex1):
    grid = build_grid(DomainSpec.from_spacing(0.5, 0.05))
    scheme = MongeAmpereScheme(grid)
    data = ex1.sample(grid)
    flat = data.with_boundary(np.zeros(grid.n_nodes))
    start = coarse_initialize(ex1, grid)
    assert scheme.residual_norm(start, data) < scheme.residual_norm(flat, data)


def test_sampled_problem_falls_back_to_seed(coarse_grid, ex1):
    data = ex1.sample(coarse_grid)
    problem = SampledProblem(np.concatenate([data.f, data.g]))
    u, fell_back = coarse_start(problem, coarse_grid)
    assert fell_back
    np.testing.assert_array_equal(u, quadratic_seed(coarse_grid, data))

    _, report = SchwarzSolver(coarse_grid, problem, ddm_config(2, 1, 0.2)).solve()
    assert report.coarse_fallback
    assert report.converged


def test_coarse_start_survives_linear_solve_failure(coarse_grid, ex1, monkeypatch):
    def failing_solve(*args, **kwargs):
        raise LinearSolveFailure("Krylov solver returned a non-finite step", 0)

    monkeypatch.setattr("src.ddm.initialization.solve_global", failing_solve)
    u, fell_back = coarse_start(ex1, coarse_grid)
    assert fell_back
    np.testing.assert_array_equal(u, quadratic_seed(coarse_grid, ex1.sample(coarse_grid)))

    _, report = SchwarzSolver(coarse_grid, ex1, ddm_config(2, 1, 0.2)).solve()
    assert report.coarse_fallback
    assert report.converged
