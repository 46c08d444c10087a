"""Exhaustive and seeded checks of the structural results on word complexes."""
