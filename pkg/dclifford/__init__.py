"""Exact discrete Clifford analysis: factorial bases, difference operators,
Fischer decompositions and a verification registry for their identities."""

__version__ = "0.1.0"
