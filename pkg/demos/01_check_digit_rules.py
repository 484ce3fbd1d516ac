"""Three check-digit rules, their residue automata, and exact expected reward.

Run: python demos/01_check_digit_rules.py
"""

import numpy as np

from ruleocr import nn, rules
from ruleocr.rules import Rule

print("check digits for prefix 2024:")
for rule in Rule:
    d = rules.check_digit(rule, (2, 0, 2, 4))
    print(f"  {rule.value}: 2024{d}  valid={rules.verify(rule, (2, 0, 2, 4, d))}")

# Each rule is a small automaton over residues; exactly one check digit is
# accepted from every reachable state, so 1 in 10 strings is valid.
for rule in Rule:
    aut = rules.residue_automaton(rule)
    print(f"{rule.value}: modulus {aut.modulus}, {rules.count_valid(rule)} valid strings of 100000")

# The automaton turns E[r] under a per-position categorical model into a
# small dynamic program. Compare with sampling.
rng = np.random.default_rng(0)
p = nn.softmax_rows(rng.standard_normal((5, 10)) * 2)
exact = rules.expected_reward_exact("rule2", p)
for m in (100, 10_000, 1_000_000):
    mc = rules.verify_many("rule2", nn.sample_sequences(p, m, rng)).mean()
    print(f"M={m:>9}: sampled reward {mc:.5f}  exact {exact:.5f}")
