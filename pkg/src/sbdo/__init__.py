"""Exact engine for conformally covariant bi-differential operators on spinor-valued functions."""
