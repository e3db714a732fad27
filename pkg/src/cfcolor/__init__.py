"""Conflict-free coloring toolkit."""
