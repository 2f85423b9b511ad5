"""Exact wall-and-chamber computations for moduli of parabolic bundles on the projective line."""
