"""How the sampled reward gradient approaches the exact one as M grows.

The exact gradient of E[r] with respect to the logits comes from central
differences of the dynamic-programming expectation.

Run: python demos/03_score_function_gradient.py
"""

import numpy as np

from ruleocr import nn, rules

rng = np.random.default_rng(3)
logits = rng.standard_normal((5, 10))
p = nn.softmax_rows(logits)


def expected(z):
    return rules.expected_reward_exact("rule2", nn.softmax_rows(z))


eps = 1e-6
exact = np.zeros_like(logits)
for idx in np.ndindex(logits.shape):
    z = logits.copy()
    z[idx] += eps
    up = expected(z)
    z[idx] -= 2 * eps
    exact[idx] = (up - expected(z)) / (2 * eps)

# logits_grad_reinforce is the gradient of a loss, so it estimates -exact
for m in (10, 1_000, 100_000, 1_000_000):
    s = nn.sample_sequences(p, m, rng)
    g = nn.logits_grad_reinforce(p, s, rules.verify_many("rule2", s).astype(float))
    err = np.linalg.norm(g + exact) / np.linalg.norm(exact)
    print(f"M={m:>9}: relative error {err:.4f}")
# with very few samples no draw may be valid, giving a zero estimate (error 1)
print("error shrinks roughly as 1/sqrt(M)")
