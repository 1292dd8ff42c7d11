"""Fused Kolmogorov filter variable screening."""
