"""Numeric checks behind the erring-search query lower bound.

The bound follows Zalka's hybrid style of argument: compare a run of the
algorithm against runs where the first few oracle calls are replaced by
the identity.  Three facts carry the proof, and each has an exact or
sampled check here:

  * swapping one oracle call changes the final state by an angle of at
    most 2 arcsin sqrt(p), p the probability that the skipped query would
    have touched the marked address (`hybrid_step_margins`);
  * summed over marked addresses, the final states of the real runs sit
    far from the oracle-free run (`total_angle_sum`, reported against
    (pi/2) N since the hidden constant is not pinned);
  * sum_y arcsin sqrt(p_y) over a probability vector is maximized by the
    uniform vector (`max_arcsin_probability_sum`).

`zalka_error_bound` evaluates the resulting query floor
(pi/4) sqrt(N) (1 - C (sqrt(err) + N^(-1/4))) with the hidden constant C
exposed as a parameter.

Angles between unit states are measured as arccos |<v|w>|, a metric on
rays that ignores global sign.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import statevector
from .partial_search import Script, validate_script
from .reduced import OperatorTag
from .statevector import BlockConfig, DenseState


def angle_distance(v, w) -> float:
    """arccos |<v|w>| between unit states (arrays or dense states)."""
    va = _as_unit_array(v)
    wa = _as_unit_array(w)
    overlap = abs(complex(np.vdot(va, wa)))
    return math.acos(min(1.0, overlap))


def _as_unit_array(v) -> np.ndarray:
    arr = np.asarray(getattr(v, "amplitudes", v))
    norm = float(np.linalg.norm(arr))
    if abs(norm - 1.0) > 1e-6:
        raise ValueError(f"expected a unit state, got norm {norm!r}")
    return arr


def zalka_error_bound(n: int, err: float, hidden_const: float = 1.0) -> float:
    """Query floor for search algorithms that err with probability <= err.

    The closed form is (pi/4) sqrt(N) (1 - C (sqrt(err) + N^(-1/4))),
    floored at zero.  The derivation assumes N >= 100 and err <= 0.1;
    outside that regime the value is still computed but tagged with a
    warning.
    """
    if err < 0.0:
        raise ValueError(f"error probability must be >= 0, got {err}")
    if hidden_const <= 0.0:
        raise ValueError(f"hidden_const must be positive, got {hidden_const}")
    if n < 100 or err > 0.1:
        warnings.warn(
            f"outside the bound's stated regime (N >= 100, err <= 0.1): N={n}, err={err}",
            stacklevel=2,
        )
    value = (math.pi / 4.0) * math.sqrt(n) * (1.0 - hidden_const * (math.sqrt(err) + n**-0.25))
    return max(0.0, value)


@dataclass(frozen=True)
class HybridTrajectory:
    """Final states of hybrid-oracle runs for one marked address.

    ``states[i]`` is the final state when the first T-i oracle calls are
    the identity and the last i are real (T = total query count); so
    states[0] is the oracle-free run and states[T] the real run.
    ``probs[t]`` is the probability that the state of the oracle-free run
    just before query t+1 puts on the marked address.
    """

    n_addresses: int
    target: int
    script: tuple[OperatorTag, ...]
    states: tuple[DenseState, ...]
    probs: tuple[float, ...]

    @property
    def n_queries(self) -> int:
        return len(self.probs)


def hybrid_trajectory(n: int, script: Script, target: int, n_blocks: int = 1) -> HybridTrajectory:
    """Build all T+1 hybrid runs of a script on the dense backend."""
    validate_script(script)
    script = tuple(script)
    cfg = BlockConfig(n, n_blocks, target)
    n_queries = sum(op in (OperatorTag.ORACLE, OperatorTag.STEP3) for op in script)
    final, probs = _run_hybrid(cfg, script, identity_prefix=n_queries, record_probs=True)
    states = [final]
    for i in range(1, n_queries + 1):
        final, _ = _run_hybrid(cfg, script, identity_prefix=n_queries - i)
        states.append(final)
    return HybridTrajectory(n, target, script, tuple(states), tuple(probs))


def _run_hybrid(
    cfg: BlockConfig, script: tuple[OperatorTag, ...], identity_prefix: int, record_probs: bool = False
) -> tuple[DenseState, list[float]]:
    state = statevector.uniform_state(cfg.n_addresses)
    probs: list[float] = []
    query_index = 0
    for op in script:
        if op is OperatorTag.ORACLE or op is OperatorTag.STEP3:
            if record_probs:
                probs.append(float(state.address_probabilities()[cfg.target]))
            use_identity = query_index < identity_prefix
            query_index += 1
            if op is OperatorTag.ORACLE:
                state = statevector.invert_target(state, cfg, identity_oracle=use_identity)
            else:
                if not state.has_ancilla:
                    state = statevector.attach_ancilla(state)
                state = statevector.step3_transfer(state, cfg, identity_oracle=use_identity)
        elif op is OperatorTag.GLOBAL_DIFFUSION:
            state = statevector.global_diffusion(state)
        elif op is OperatorTag.BLOCK_DIFFUSION:
            state = statevector.block_diffusion(state, cfg)
        else:
            raise ValueError(f"unknown operator {op!r}")
    return state, probs


def hybrid_step_margins(traj: HybridTrajectory) -> np.ndarray:
    """Slack in the per-swap bound angle <= 2 arcsin sqrt(p), one entry per query.

    Entry i-1 compares states i-1 and i (the runs differing in query T-i+1)
    against 2 arcsin sqrt(probs[T-i]).  All entries should be >= -1e-9; a
    negative margin beyond floating error falsifies the bound.
    """
    t = traj.n_queries
    margins = np.empty(t)
    for i in range(1, t + 1):
        lhs = angle_distance(traj.states[i - 1], traj.states[i])
        rhs = 2.0 * math.asin(math.sqrt(traj.probs[t - i]))
        margins[i - 1] = rhs - lhs
    return margins


def total_angle_sum(n: int, script: Script, n_blocks: int = 1) -> tuple[float, float]:
    """Sum over marked addresses of the angle between real and oracle-free runs.

    Returns (sum, (pi/2) * N).  The bound's hidden constant is not pinned,
    so this is a diagnostic ratio rather than a pass/fail check; a
    zero-query script gives sum 0.
    """
    validate_script(script)
    script = tuple(script)
    cfg0 = BlockConfig(n, n_blocks, 0)
    n_queries = sum(op in (OperatorTag.ORACLE, OperatorTag.STEP3) for op in script)
    oracle_free, _ = _run_hybrid(cfg0, script, identity_prefix=n_queries)
    total = 0.0
    for y in range(n):
        real, _ = _run_hybrid(BlockConfig(n, n_blocks, y), script, identity_prefix=0)
        total += angle_distance(oracle_free, real)
    return total, (math.pi / 2.0) * n


def max_arcsin_probability_sum(n: int, samples: int, seed: int) -> float:
    """Largest observed sum_y arcsin sqrt(p_y) over sampled probability vectors.

    Samples the simplex uniformly (flat Dirichlet) and adds the corners where
    a violation of the uniform-maximizer claim would show up: point masses,
    two-point mixtures, and near-uniform perturbations.  The claimed maximum
    is N * arcsin(1/sqrt(N)), attained by the uniform vector.
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    rng = np.random.default_rng(seed)
    best = _arcsin_sum(np.full((1, n), 1.0 / n))

    remaining = samples
    while remaining > 0:
        chunk = min(remaining, 20000)
        best = max(best, _arcsin_sum(rng.dirichlet(np.ones(n), size=chunk)))
        remaining -= chunk

    best = max(best, _arcsin_sum(np.eye(n)))
    mix = np.linspace(0.0, 1.0, 201)
    two_point = np.zeros((mix.size, n))
    two_point[:, 0] = mix
    two_point[:, 1] = 1.0 - mix
    best = max(best, _arcsin_sum(two_point))
    near_uniform = rng.dirichlet(np.full(n, 1000.0), size=2000)
    best = max(best, _arcsin_sum(near_uniform))
    return best


def _arcsin_sum(p: np.ndarray) -> float:
    return float(np.arcsin(np.sqrt(np.clip(p, 0.0, 1.0))).sum(axis=1).max())
