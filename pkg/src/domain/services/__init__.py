"""Domain services: exact arithmetic and the set constructions built on it."""
