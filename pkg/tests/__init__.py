"""Tests for the rxscaling package."""
