"""padic-ds - exact p-adic Duffin-Schaeffer sets, measures and checks."""

__version__ = "1.0.0"
