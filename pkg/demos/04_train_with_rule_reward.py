"""Train the recognizer with and without the rule reward on a small budget.

A few minutes on one CPU. The full protocol lives in the CLI, e.g.
``ruleocr sweep alpha --data data/mnist_rule2 --out runs/sweep --epochs 60``.

Run: python demos/04_train_with_rule_reward.py [mnist_dir]
"""

import logging
import sys
import tempfile
from pathlib import Path

from ruleocr import ingest, synth, train

logging.basicConfig(level=logging.INFO, format="%(message)s")

if len(sys.argv) > 1:
    mnist = Path(sys.argv[1])
else:
    mnist = ingest.export_mlxtend_subset(Path(tempfile.mkdtemp()) / "mnist")

splits, _ = synth.synthesize_dataset("rule2", ingest.load_pools(mnist, "train"), seed=0,
                                     test_pools=ingest.load_pools(mnist, "test"))
data = {"train": splits["train"].subset(500), "val": splits["val"]}

for alpha in ("0", "0.1", "aa"):
    cfg = train.TrainConfig(schedule=alpha, epochs=8, M=2000, seed=0)
    params, history = train.train_model(cfg, data)
    m = train.evaluate(params, splits["test"])
    print(f"alpha={cfg.schedule.label():>4}: test seq acc {m.seq_accuracy:.3f}, "
          f"per digit {m.per_digit_accuracy:.3f}, rule-valid predictions {m.mean_rule_reward:.3f}")
