"""Classical block search: how little randomization saves.

A zero-error classical searcher probes K-1 of the K blocks in random
order; if every probe misses, the target sits in the block it skipped.
The expected count is (N/2)(1 - 1/K^2): the savings over plain search
vanish quadratically in K, which is what makes the quantum speedup of
partial search interesting at all.
"""
from partialsearch import (
    classical_formulas,
    exact_expected_probes,
    simulate_randomized,
    two_case_expectation,
)

n, trials, seed = 1200, 200000, 1

print(f"N = {n}, {trials} trials per row, seed {seed}")
print(f"{'K':>4} {'expected':>10} {'simulated':>10} {'std err':>8} {'determ.':>8}")
for k in (2, 3, 4, 6, 8):
    report = simulate_randomized(n, k, trials, seed)
    print(
        f"{k:>4} {report.expected_randomized:>10.3f} {report.sample_mean:>10.3f}"
        f" {report.sample_std_err:>8.3f} {report.deterministic:>8.0f}"
    )

# The closed form is a probability-weighted split over whether the target's
# block was probed; the two cases recombine exactly.
k = 3
print(f"\ntwo-case split at K={k}: {two_case_expectation(n, k):.6f}"
      f" == closed form {classical_formulas(n, k).expected_randomized:.6f}")

# The asymptotic formula drops an O(1) term; the simulator sees the exact
# value, (1 - 1/K)/2 above the formula.
print(f"exact per-trial expectation at K={k}: {exact_expected_probes(n, k):.6f}"
      f"  (formula + {(1 - 1 / k) / 2:.4f})")
