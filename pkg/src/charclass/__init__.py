"""
charclass - mod-2 characteristic classes of quadric bundles: graded F2
cohomology rings, primitive classes, Gysin boundaries and degenerating
quadratic triples.
"""

__version__ = "0.1.0"
