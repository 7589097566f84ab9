"""Lozenge-Lefschetz core: monomials, ideals, schemas and settings."""
