"""ncsurf: exact-arithmetic invariants of noncommutative planes and quadrics.

Given a superpotential tensor (3x3x3 or 2x2x2x2 over QQ) or a graded
presentation, the package checks nondegeneracy of the classifying linear
data, builds the finite-dimensional quiver algebra of the canonical
exceptional collection, computes its Hochschild cohomology (dimensions,
Lie bracket on HH^1, cup products), classifies the point scheme (plane
cubic type or Segre symbol of a quadric pencil), and verifies the
reference dimension tables.  All arithmetic is exact; no floating point.
"""

__version__ = "0.1.0"
