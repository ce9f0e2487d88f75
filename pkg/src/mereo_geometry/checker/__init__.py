"""Brute-force validity checking, the statement registry and suite reports."""
