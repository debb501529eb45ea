"""Tests for the steerdyn package."""
