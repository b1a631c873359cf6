"""Unit tests for datastore layer."""
