"""Test suite for afsa."""
