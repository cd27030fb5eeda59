"""Version information for rxscaling."""

__version__ = "0.1.0"
