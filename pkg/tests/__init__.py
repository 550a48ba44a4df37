"""Tests de pellab."""
