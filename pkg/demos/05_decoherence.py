"""
Strong interaction: which-pair information and decoherence
==========================================================

Tracing out the transverse modes leaves the path density matrix G / 8. For
strong repulsion only a configuration and its complement keep their
coherence (they share a displacement pattern), and every detector outcome
becomes equally likely.
"""
import numpy as np

from pigeonhole import output_distribution, reduced_density
from pigeonhole.observables import SIGN_PATTERNS

np.set_printoptions(precision=3, suppress=True, linewidth=120)

for x in [0.0, 1.0, 10.0]:
    print(f"x = {x}")
    print(reduced_density(x).real * 8)

###############################################################################
# Detector statistics across the interaction range.

labels = ["".join("+" if s > 0 else "-" for s in p) for p in SIGN_PATTERNS]
print("x     " + " ".join(f"{l:>7}" for l in labels))
for x in [0.0, 0.5, 1.0, 1.43, 2.0, 3.0, 10.0]:
    print(f"{x:5.2f} " + " ".join(f"{p:7.4f}" for p in output_distribution(x)))
