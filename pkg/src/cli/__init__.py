"""CLI package for the padic-ds command-line interface."""
