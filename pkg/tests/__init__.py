"""Test suite for plinear."""
