"""Candidate-restricted mereological definitions checked against the analytic predicates."""
