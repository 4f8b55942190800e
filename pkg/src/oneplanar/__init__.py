"""Executable toolkit for locally maximal 1-planar graphs.

Drawings are combinatorial (planarized rotation systems); every pipeline
re-verifies the certificates it emits.
"""

__version__ = "0.1.0"
