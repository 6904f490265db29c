"""Utilities that are not specific to graphs."""
