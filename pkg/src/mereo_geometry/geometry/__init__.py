"""Exact rational predicates on closed balls and finite sums of balls."""
