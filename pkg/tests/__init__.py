"""Thermotopo Test Suite."""
