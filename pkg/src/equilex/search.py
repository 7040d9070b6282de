"""Random-restart gradient descent hunting for equilateral configurations.

The objective works on p-th powers of distances,

    E(X) = sum_{i<j} (||x_i - x_j||_p^p - 1)^2,

which is continuously differentiable for p > 1 even where points collide,
unlike the norm itself.  E vanishes exactly on configurations whose pairwise
l_p distances are all 1.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSetError, DomainError
from .lp_core import LpSpace, PointSet
from .verify import EquilateralReport, check_equilateral

log = logging.getLogger(__name__)

# A run only counts as a discovery if both independent criteria hold.
DISCOVERY_ENERGY = 1e-12
DISCOVERY_VERIFY_TOL = 1e-6


@dataclass(frozen=True)
class SearchConfig:
    space: LpSpace
    n: int
    restarts: int = 50
    max_iters: int = 2000
    seed: int = 0
    threshold: float = 1e-13
    init_step: float = 0.05
    step_shrink: float = 0.5
    step_grow: float = 2.0
    max_step: float = 1.0
    armijo_c: float = 1e-4
    max_backtracks: int = 40
    grad_tol: float = 1e-20

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"need n >= 2 points, got {self.n}")
        if self.restarts < 1:
            raise DomainError(f"need restarts >= 1, got {self.restarts}")


@dataclass(frozen=True)
class SearchResult:
    best_points: PointSet
    best_energy: float
    restart_index: int
    iterations_used: int
    report: EquilateralReport | None
    discovery: bool


def _energy_grad(X: np.ndarray, p: float) -> tuple[float, np.ndarray]:
    diff = X[:, None, :] - X[None, :, :]
    ad = np.abs(diff)
    D = (ad**p).sum(axis=2)
    R = D - 1.0
    iu = np.triu_indices(X.shape[0], 1)
    E = float((R[iu] ** 2).sum())
    # d|t|^p/dt = p |t|^(p-1) sign(t); the diagonal contributes nothing
    S = ad ** (p - 1.0) * np.sign(diff)
    G = 2.0 * p * (R[:, :, None] * S).sum(axis=1)
    return E, G


def energy(X: PointSet) -> float:
    """Sum of squared deviations of the p-th power distances from 1."""
    if len(X) < 2:
        raise DomainError(f"need at least 2 points, got {len(X)}")
    return _energy_grad(X.points, X.space.p)[0]


def energy_gradient(X: PointSet) -> np.ndarray:
    """Flattened gradient of energy, length n*dim, rows varying fastest by point."""
    if len(X) < 2:
        raise DomainError(f"need at least 2 points, got {len(X)}")
    return _energy_grad(X.points, X.space.p)[1].ravel()


def minimize_energy(
    X0: np.ndarray, p: float, cfg: SearchConfig
) -> tuple[np.ndarray, float, int, list[float]]:
    """Gradient descent with backtracking (Armijo) line search.

    Returns the final configuration, its energy, iterations used, and the
    trace of accepted energies (non-increasing by construction).  Stops at
    cfg.threshold, on a vanishing gradient, on line-search failure, or at
    cfg.max_iters.
    """
    X = np.array(X0, dtype=np.float64)
    E, G = _energy_grad(X, p)
    trace = [E]
    step = cfg.init_step
    iters = 0
    for iters in range(1, cfg.max_iters + 1):
        if E < cfg.threshold:
            iters -= 1
            break
        g2 = float((G * G).sum())
        if g2 < cfg.grad_tol:
            iters -= 1
            break
        t = step
        accepted = False
        for _ in range(cfg.max_backtracks):
            Xn = X - t * G
            En, Gn = _energy_grad(Xn, p)
            if En <= E - cfg.armijo_c * t * g2:
                accepted = True
                break
            t *= cfg.step_shrink
        if not accepted:
            iters -= 1
            break
        X, E, G = Xn, En, Gn
        trace.append(E)
        step = min(t * cfg.step_grow, cfg.max_step)
    return X, E, iters, trace


def _restart_rng(seed: int, restart: int) -> np.random.Generator:
    # documented substream derivation: base entropy + restart index as spawn key
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(restart,)))


def _run_one(cfg: SearchConfig, restart: int) -> tuple[int, np.ndarray, float, int]:
    rng = _restart_rng(cfg.seed, restart)
    X0 = rng.uniform(-1.0, 1.0, size=(cfg.n, cfg.space.dim))
    X, E, iters, _ = minimize_energy(X0, cfg.space.p, cfg)
    log.info("restart %d: energy=%.6e iters=%d", restart, E, iters)
    return restart, X, E, iters


def run_search(cfg: SearchConfig, threads: int = 1) -> SearchResult:
    """Run all restarts and keep the minimum-energy configuration.

    Restarts are independent; with threads > 1 they run concurrently and the
    merge stays deterministic (minimum energy, ties to the lowest restart
    index).  Results are reproducible from (cfg, seed) alone.
    """
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(lambda r: _run_one(cfg, r), range(cfg.restarts)))
    else:
        outcomes = [_run_one(cfg, r) for r in range(cfg.restarts)]

    best = min(outcomes, key=lambda o: (o[2], o[0]))
    restart, X, _, iters = best
    best_set = PointSet(cfg.space, X)
    best_energy = energy(best_set)  # recomputed from the stored points
    try:
        report = check_equilateral(best_set, tol=DISCOVERY_VERIFY_TOL)
    except DegenerateSetError:
        report = None
    discovery = best_energy < DISCOVERY_ENERGY and report is not None and report.passed
    return SearchResult(
        best_points=best_set,
        best_energy=best_energy,
        restart_index=restart,
        iterations_used=iters,
        report=report,
        discovery=discovery,
    )
