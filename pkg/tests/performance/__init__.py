"""Kernel benchmarks package."""
