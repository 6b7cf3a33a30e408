"""Compare the integrand maximizer xi_m with the maximizer of the modelled integrand.

No pass/fail threshold; prints both locations for a few k and eta.
"""
from fdzeta.model import compare_maximizers

if __name__ == "__main__":
    print(f"{'k':>2} {'eta':>6} {'xi_m':>10} {'xi_model':>10} {'diff':>10}")
    for k in (1, 3, 5):
        for eta in (-4.0, -2.0, -0.5, 0.5, 1.0, 2.0, 3.0, 5.0):
            xi_m, xi_model = compare_maximizers(k, eta)
            print(f"{k:>2} {eta:>6g} {xi_m:>10.5f} {xi_model:>10.5f} {xi_model - xi_m:>10.2e}")
