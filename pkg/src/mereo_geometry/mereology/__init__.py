"""Finite powerset models, name denotations and name-forming functors."""
