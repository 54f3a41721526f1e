"""Exact-arithmetic Clifford algebras over (possibly degenerate) quadratic
forms, with the verification machinery built on top: even Lie structure and
form reconstruction, spinor and half-spin modules, the Clifford-Lipschitz
monoid, flat degenerations of matrix algebras, half-spin branching checks for
G2/F4/C3, and matrix-tuple local models."""

__version__ = "0.1.0"
