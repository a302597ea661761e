"""Train a degree-5 model on two Werner states, one local and one not.

The plateau of the loss is the diagnostic: a local state drops to the floor
set by the arithmetic and the optimizer budget, a non-local one stalls orders of
magnitude above it. With the reduced budget below this takes a few minutes.
"""

import numpy as np

from lhvfit import TrainConfig, train, werner_state

config = TrainConfig(steps=3000, batch=256, n_hidden=1024, lr_per_sample=4e-4, lr_decay=0.1, degree=5)

for v in (0.5, 0.85):
    cloud, trace = train(werner_state(v), config)
    print(f"v = {v:.2f}   plateau {trace.plateau:.2e}   median |lambda| {float(np.median(cloud.norms())):.1f}")
