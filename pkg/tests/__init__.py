"""Tests for monoval."""
