"""Build a small rule-constrained dataset from MNIST digits and look at it.

Uses the 5000-image MNIST subset bundled with mlxtend unless a directory
with the four IDX files is passed as the first argument.

Run: python demos/02_build_dataset.py [mnist_dir]
"""

import sys
import tempfile
from pathlib import Path

import numpy as np

from ruleocr import ingest, synth

if len(sys.argv) > 1:
    mnist = Path(sys.argv[1])
else:
    mnist = ingest.export_mlxtend_subset(Path(tempfile.mkdtemp()) / "mnist")

train_pools = ingest.load_pools(mnist, "train")
test_pools = ingest.load_pools(mnist, "test")
print("digits per class (train):", train_pools.sizes())

splits, manifest = synth.synthesize_dataset("rule3", train_pools, seed=1, counts=(20, 5, 5),
                                            test_pools=test_pools)
print("manifest hash:", manifest.content_hash[:16])


def show(image, width=56):
    # coarse ASCII rendering, every other column
    shades = " .:-=+*#%@"
    for row in image[::2, ::112 // width]:
        print("".join(shades[min(int(v * 10), 9)] for v in row))


e = splits["train"][0]
print("label", "".join(map(str, e.label)))
show(e.image)

blocked = synth.blockout(e, np.random.default_rng(0), k=2)
print("same example, third digit blocked out")
show(blocked.image)
