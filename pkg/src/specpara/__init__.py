"""Neumann eigenvalue bounds for parallelograms."""
