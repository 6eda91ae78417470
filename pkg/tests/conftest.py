"""Keeps the tests directory importable (`import gen` in test modules)."""
