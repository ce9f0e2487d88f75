"""Default configuration files bundled with mereo_geometry."""
