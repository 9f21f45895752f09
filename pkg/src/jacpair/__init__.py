"""Computer algebra for real Jacobian pairs in low degree."""

__version__ = "0.1.0"
