"""Shipped registry, formulas, models and scenes."""
