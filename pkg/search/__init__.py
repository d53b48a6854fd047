"""Brute-force and heuristic oracles: exact minima, local search, edit distances and growth."""
