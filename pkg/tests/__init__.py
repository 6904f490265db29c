"""Tests for the clawfree library and command-line interface."""
