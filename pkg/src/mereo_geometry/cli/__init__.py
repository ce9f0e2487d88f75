"""Command-line front end (`mg`)."""
