"""Exact budgeted threshold increments on trees, oracles and matching-bound checkers."""
