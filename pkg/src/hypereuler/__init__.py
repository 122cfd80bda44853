"""hypereuler - Euler families in hypergraphs."""

__version__ = "1.0.0"
