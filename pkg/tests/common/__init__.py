"""Tests for the common module."""
