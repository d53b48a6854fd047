"""Closed-form extremal curves, the extremal family and joins of graph limits."""
