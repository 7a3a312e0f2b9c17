"""
The dip in the three-fold coincidence probability
=================================================

With transverse Gaussian modes the repulsion displaces each branch
differently, which spoils part of the interference. The probability that
all three particles reach the ``+i`` detectors starts at 1/8, dips, and
returns to 1/8 once the branches no longer overlap.
"""
import numpy as np

from pigeonhole import find_minimum, p_all_same_closed, p_all_same_gram

xs = np.linspace(0, 5, 26)
print(f"{'x':>5} {'closed':>12} {'gram':>12}")
for x in xs:
    print(f"{x:5.2f} {p_all_same_closed(x):12.9f} {p_all_same_gram(x):12.9f}")

###############################################################################
# The slope is zero at x = 0: weak interaction changes nothing to first order.

h = 1e-4
print("one-sided slope at 0:", (-3 * p_all_same_closed(0) + 4 * p_all_same_closed(h) - p_all_same_closed(2 * h)) / (2 * h))

###############################################################################
# Locating the minimum numerically and comparing with the analytic location.

rep = find_minimum()
print("x_star:", rep.x_star, "analytic:", 2 * np.sqrt(np.log(5 / 3)))
print("p_star:", rep.p_star, "analytic:", (1 - 0.6 ** 2.5) / 8)

###############################################################################
# Optional plot.

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    grid = np.linspace(0, 6, 300)
    plt.plot(grid, [p_all_same_closed(x) for x in grid])
    plt.axvline(rep.x_star, ls=":")
    plt.xlabel("x = a / sigma")
    plt.ylabel("P(+i, +i, +i)")
    plt.savefig("coincidence_dip.png", dpi=120)
    print("wrote coincidence_dip.png")
