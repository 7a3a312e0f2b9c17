"""
Cross-checking the closed forms by direct integration
=====================================================

The amplitude is rebuilt pointwise from the displaced branch profiles and
``|amplitude|^2`` is integrated over all six transverse coordinates, once by
Gauss-Hermite quadrature and once by importance-sampled Monte Carlo.
"""
import time

from pigeonhole import integrate_mc, integrate_quad, p_all_same_closed, quad_expectation_u, expectation_u

print(f"{'x':>5} {'closed':>12} {'quad-closed':>12} {'mc':>12} {'mc s.e.':>10} {'z':>6}")
for x in [0.0, 0.5, 1.0, 1.43, 2.0, 4.0]:
    t = time.perf_counter()
    exact = p_all_same_closed(x)
    q = integrate_quad(x, order=40)
    m = integrate_mc(x, samples=1_000_000, seed=2024)
    z = (m.value - exact) / m.std_error if m.std_error > 1e-15 else 0.0
    print(f"{x:5.2f} {exact:12.9f} {q.value - exact:12.2e} {m.value:12.9f} {m.std_error:10.2e} {z:6.2f}"
          f"   ({time.perf_counter() - t:.1f}s)")

###############################################################################
# Sampling from the undisplaced profile alone works for weak interaction but
# its weights become heavy-tailed as the branches move apart.

for x in [1.0, 2.0, 4.0]:
    c = integrate_mc(x, samples=200_000, seed=1, proposal="centered")
    m = integrate_mc(x, samples=200_000, seed=1)
    print(f"x={x}: centered {c.value:.6f} +- {c.std_error:.1e}   mixture {m.value:.6f} +- {m.std_error:.1e}"
          f"   exact {p_all_same_closed(x):.6f}")

###############################################################################
# The symmetry overlap by quadrature.

print("<U> at x=1 (eq9):", quad_expectation_u(1.0, "eq9").value, expectation_u(1.0, "eq9"))
