"""Heuristic minimization of phi(f, d) over weight functions with f+ = r.

Every value reported here is an upper bound on gamma(n, d, r); it is only a
determination when :func:`mslab.bounds.gamma_known` agrees.

Random candidates are kept in integer form while searching: nonnegative values
``k_i / D`` and raw negative weights ``m_i`` that are rescaled so the total is
exactly zero, giving y_i = -m_i * P / (D * M) with P = sum(k), M = sum(m).
Multiplying through by D * M yields the integer vector passed to the kernel.
"""
from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from . import kernels
from .bounds import PROVED_HERE, alpha_window, build_f_alpha, gamma_known, in_b_range, upper_bound_sum
from .errors import DomainError, InvariantViolation
from .weights import WeightFunction, count_dplus, make_weight_function

SEARCH_MAX_N = 14


@dataclass(frozen=True)
class SearchConfig:
    restarts: int = 200
    seed: int = 0
    alpha_steps: int = 10
    local_iters: int = 50
    denominator: int = 64

    def __post_init__(self) -> None:
        for name in ("restarts", "alpha_steps", "local_iters", "denominator"):
            if getattr(self, name) < 1:
                raise DomainError(f"SearchConfig.{name} must be positive")
        if not 0 <= self.seed < 2**64:
            raise DomainError("SearchConfig.seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class SearchReport:
    n: int
    d: int
    r: int
    best_phi: int
    best_f: WeightFunction
    method: str
    seed: int
    gamma_known_match: Optional[bool] = None
    restart_min: Optional[int] = None
    config: dict = field(default_factory=dict)

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "r": self.r,
            "seed": self.seed,
            "best_phi": self.best_phi,
            "best_f": [str(v) for v in self.best_f.values],
            "method": self.method,
            "gamma_known_match": self.gamma_known_match,
            "restart_min": self.restart_min,
            "config": self.config,
        }

    @classmethod
    def from_record(cls, rec: dict) -> SearchReport:
        return cls(
            n=rec["n"],
            d=rec["d"],
            r=rec["r"],
            best_phi=rec["best_phi"],
            best_f=make_weight_function(Fraction(v) for v in rec["best_f"]),
            method=rec["method"],
            seed=rec["seed"],
            gamma_known_match=rec.get("gamma_known_match"),
            restart_min=rec.get("restart_min"),
            config=rec.get("config", {}),
        )


def _check_instance(n: int, d: int, r: int) -> None:
    if not 1 <= d <= n:
        raise DomainError(f"need 1 <= d <= n, got n={n}, d={d}")
    if not 1 <= r <= n:
        raise DomainError(f"need 1 <= r <= n (no weight function has f+ = {r}), got r={r}")
    if n > SEARCH_MAX_N:
        raise DomainError(f"search supports n <= {SEARCH_MAX_N}, got n={n}")


def _match(n: int, d: int, r: int, phi: int) -> Optional[bool]:
    case = gamma_known(n, d, r)
    return None if case is None else phi == case.value


def sweep_alpha(n: int, d: int, r: int, steps: int = 10) -> SearchReport:
    """Evaluate the alpha-family at ``steps`` evenly spaced points of the open window."""
    if steps < 1:
        raise DomainError("steps must be positive")
    upper = alpha_window(n, d, r)
    best: tuple[int, tuple[Fraction, ...]] | None = None
    for j in range(1, steps + 1):
        f = build_f_alpha(n, d, r, upper * Fraction(j, steps + 1))
        key = (count_dplus(f, d), f.values)
        if best is None or key < best:
            best = key
    phi, values = best
    return SearchReport(n, d, r, phi, WeightFunction(values), "alpha-sweep", 0, _match(n, d, r, phi))


# -- random restarts ---------------------------------------------------------------

def _integer_vector(pos: list[int], neg: list[int]) -> list[int]:
    if not neg:
        return list(pos)
    P, M = sum(pos), sum(neg)
    return [k * M for k in pos] + [-m * P for m in neg]


def _to_weight_function(pos: list[int], neg: list[int], D: int) -> WeightFunction:
    P, M = sum(pos), sum(neg)
    values = [Fraction(k, D) for k in pos] + [Fraction(-m * P, D * M) for m in neg]
    return make_weight_function(values)


def _restart(n: int, d: int, r: int, cfg: SearchConfig, seed: int) -> tuple[int, list[int], list[int]]:
    rng = random.Random(seed)
    D = cfg.denominator
    pos = [rng.randint(1, D) for _ in range(r)]
    neg = [rng.randint(1, D) for _ in range(n - r)]
    coords = [rng.randrange(n) for _ in range(cfg.local_iters)]
    steps = [rng.choice((-1, 1)) for _ in range(cfg.local_iters)]
    return kernels.local_descent(pos, neg, d, coords, steps)


def restart_seeds(seed: int, restarts: int) -> list[int]:
    """Per-restart seeds derived from the master seed; independent of scheduling."""
    return [int(s) for s in np.random.SeedSequence(seed).generate_state(restarts, dtype=np.uint64)]


def minimize_phi(n: int, d: int, r: int, cfg: SearchConfig | None = None, threads: int = 1) -> SearchReport:
    """Smallest phi(f, d) found over the alpha sweep (when defined) and random restarts.

    Each restart draws r nonnegative values k/D and n-r negative values rescaled to
    a zero total, then runs ``local_iters`` single-coordinate +-1/D moves, keeping
    only strict decreases. The winner is re-validated and recounted from its
    rational values before reporting.

    Raises:
        InvariantViolation: if the winner undercuts a value with a full proof,
            which can only mean a counting bug.
    """
    cfg = cfg or SearchConfig()
    _check_instance(n, d, r)
    candidates: list[tuple[int, tuple[Fraction, ...], str]] = []
    if in_b_range(n, d, r):
        sweep = sweep_alpha(n, d, r, cfg.alpha_steps)
        candidates.append((sweep.best_phi, sweep.best_f.values, "alpha-sweep"))

    seeds = restart_seeds(cfg.seed, cfg.restarts)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda s: _restart(n, d, r, cfg, s), seeds))
    else:
        results = [_restart(n, d, r, cfg, s) for s in seeds]
    restart_min = min(phi for phi, _, _ in results)
    for phi, pos, neg in results:
        if phi == restart_min:
            f = _to_weight_function(pos, neg, cfg.denominator)
            candidates.append((phi, f.values, "random-restart"))

    phi, values, method = min(candidates, key=lambda c: (c[0], c[1]))
    best_f = WeightFunction(values)
    if best_f.total() < 0 or best_f.r != r:
        raise InvariantViolation(f"search produced an infeasible weight function {values}")
    if count_dplus(best_f, d) != phi:
        raise InvariantViolation(f"recount of best candidate disagrees with search value {phi}")
    case = gamma_known(n, d, r)
    if case is not None and case.status == PROVED_HERE and phi < case.value:
        raise InvariantViolation(f"search value {phi} undercuts the proved gamma({n},{d},{r}) = {case.value}")
    return SearchReport(
        n, d, r, phi, best_f, method, cfg.seed,
        gamma_known_match=None if case is None else phi == case.value,
        restart_min=restart_min,
        config=asdict(cfg),
    )


@dataclass(frozen=True)
class PsiBracket:
    n: int
    d: int
    reports: dict[int, SearchReport]

    @property
    def upper(self) -> int:
        return min(rep.best_phi for rep in self.reports.values())

    @property
    def argmin(self) -> int:
        return min(self.reports, key=lambda r: (self.reports[r].best_phi, r))


def psi_bracket(n: int, d: int, cfg: SearchConfig | None = None, threads: int = 1) -> PsiBracket:
    """Run :func:`minimize_phi` for every r in 1..n; psi(n, d) is at most the smallest result."""
    return PsiBracket(n, d, {r: minimize_phi(n, d, r, cfg, threads) for r in range(1, n + 1)})


def check_upper_bound_consistency(report: SearchReport) -> bool:
    """best_phi never exceeds the alpha-family value where that construction applies."""
    if not in_b_range(report.n, report.d, report.r):
        return True
    return report.best_phi <= upper_bound_sum(report.n, report.d, report.r)
