"""Tests for the analytic expressions."""
