"""
Weak values of the same-path projectors
=======================================

Three particles enter ``|+++>`` and are post-selected on ``|+i +i +i>``.
The weak value of "particles 1 and 2 share a path" vanishes, while the weak
value of "all three share a path" is -1/2.
"""
import numpy as np

from pigeonhole import (
    CONFIGS,
    DiagonalProjector,
    hamming,
    interference_sign,
    plus_state,
    post_state,
    strong_conditional_mean,
    weak_value,
)

pre, post = plus_state(), post_state("+++")
print("post-selection probability:", abs(post.inner(pre)) ** 2)

###############################################################################
# Two-particle projectors. Each splits into an LL part and an RR part whose
# weak values are +i/2 and -i/2, so they cancel.

for pair in [(0, 1), (0, 2), (1, 2)]:
    print(f"same{pair}:", np.round(weak_value(DiagonalProjector.same(*pair), pre, post), 15))

ll = weak_value(DiagonalProjector.arms({0: "L", 1: "L"}), pre, post)
rr = weak_value(DiagonalProjector.arms({0: "R", 1: "R"}), pre, post)
print("LL_12:", ll, " RR_12:", rr)

###############################################################################
# The three-particle projector |LLL><LLL| + |RRR><RRR| keeps only two of the
# four terms above, and they do not cancel.

same_123 = DiagonalProjector.same(0, 1, 2)
print("same_123:", weak_value(same_123, pre, post))

###############################################################################
# A sharp measurement of the same projector, followed by the same
# post-selection, gives an ordinary probability instead.

print("sharp P(all together | post-selected):", strong_conditional_mean(same_123, pre, post))

###############################################################################
# Interference between branches under this post-selection. The cross term
# between branches b and b' carries the phase i**(r(b) - r(b')), where r
# counts particles in R. Odd differences are neutral; note LLR vs LRL is at
# Hamming distance 2 yet interferes constructively.

for b in CONFIGS[:4]:
    row = [f"{interference_sign(b, b2).value[:5]:>5}" if b2 != b else "  -  " for b2 in CONFIGS]
    print(b, " ".join(row))
print("hamming(LLR, LRL) =", hamming("LLR", "LRL"))
