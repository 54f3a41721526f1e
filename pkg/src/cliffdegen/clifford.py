"""Clifford algebra of an arbitrary symmetric form on a free module of rank m.

Basis blades are subsets of {1..m} stored as bitmasks (bit i-1 set means the
generator e_i occurs); the empty set is the identity e_0.  The canonical blade
for a subset is the geometric product of its generators in ascending order.
Multivectors are sparse maps blade -> nonzero coefficient; two multivectors
are equal iff their term maps are equal.

The convention throughout: q(x) = x^T Q x and b(x, y) = q(x+y) - q(x) - q(y)
= 2 x^T Q y, so b(e_i, e_i) = 2 q(e_i).  Degenerate Q is a first-class
citizen; nothing below assumes invertibility.

The product rewrites words using exactly the two relations
    e_i^2 = q(e_i) e_0,
    e_i e_j + e_j e_i = b(e_i, e_j) e_0,
i.e. for i > j:  e_i e_j = b(e_i, e_j) e_0 - e_j e_i.
"""

from __future__ import annotations

from fractions import Fraction

from .rings import (
    CoefficientRingMismatch,
    PoleError,
    as_coeff,
    czero,
    eval_coeff,
    regular_at,
    ring_of,
    join_rings,
)


class BladeIndexError(IndexError):
    """A blade references a generator index outside 1..m."""


class QuadraticSpace:
    """Symmetric m x m matrix Q over an exact coefficient ring, with
    q(x) = x^T Q x.  Immutable after construction (the product cache is
    filled lazily but is append-only)."""

    def __init__(self, gram):
        rows = [tuple(as_coeff(v) for v in row) for row in gram]
        m = len(rows)
        if any(len(r) != m for r in rows):
            raise ValueError("gram matrix must be square")
        for i in range(m):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"gram matrix not symmetric at ({i},{j})")
        self.m = m
        self.gram = tuple(rows)
        ring = "rational"
        for row in rows:
            for v in row:
                ring = join_rings(ring, ring_of(v))
        self.ring = ring
        self._gen_cache: dict = {}

    @staticmethod
    def diagonal(qs) -> "QuadraticSpace":
        qs = [as_coeff(v) for v in qs]
        m = len(qs)
        return QuadraticSpace(
            [[qs[i] if i == j else 0 for j in range(m)] for i in range(m)]
        )

    @staticmethod
    def zero(m: int) -> "QuadraticSpace":
        return QuadraticSpace([[0] * m for _ in range(m)])

    def q(self, i: int):
        """q(e_i), 1-based."""
        return self.gram[i - 1][i - 1]

    def b(self, i: int, j: int):
        """b(e_i, e_j) = 2 Q[i][j], 1-based."""
        return 2 * self.gram[i - 1][j - 1]

    def degeneracy_rank(self) -> int:
        """Rank of the matrix 2Q (requires rational entries)."""
        if self.ring != "rational":
            raise CoefficientRingMismatch("rank report requires rational entries")
        from .linalg import rank_dense

        rows = [[2 * v for v in row] for row in self.gram]
        return rank_dense(rows, self.m)

    def __eq__(self, other):
        return isinstance(other, QuadraticSpace) and self.gram == other.gram

    def __hash__(self):
        return hash((self.m,))

    def __repr__(self):
        return f"QuadraticSpace(m={self.m})"


def _check_mask(mask: int, m: int):
    if mask < 0 or mask >> m:
        raise BladeIndexError(f"blade {bin(mask)} exceeds dimension m={m}")


def mask_of(indices) -> int:
    mask = 0
    for i in indices:
        if i < 1:
            raise BladeIndexError(f"blade index {i} < 1")
        bit = 1 << (i - 1)
        if mask & bit:
            raise BladeIndexError(f"repeated blade index {i}")
        mask |= bit
    return mask


def indices_of(mask: int) -> tuple:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


class Multivector:
    """Sparse multivector; terms map blade bitmask -> nonzero coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mask, c in terms.items():
                c = as_coeff(c) if not hasattr(c, "is_zero") else c
                if not czero(c):
                    clean[mask] = c
        self.terms = clean

    # -- constructors -------------------------------------------------
    @staticmethod
    def zero() -> "Multivector":
        return Multivector()

    @staticmethod
    def scalar(c) -> "Multivector":
        return Multivector({0: as_coeff(c)})

    @staticmethod
    def basis_vector(i: int) -> "Multivector":
        return Multivector({1 << (i - 1): Fraction(1)})

    @staticmethod
    def blade(indices, c=1) -> "Multivector":
        return Multivector({mask_of(indices): as_coeff(c)})

    # -- ring plumbing ------------------------------------------------
    def ring(self) -> str:
        r = "rational"
        for c in self.terms.values():
            r = join_rings(r, ring_of(c))
        return r

    def __add__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        out = dict(self.terms)
        for mask, c in other.terms.items():
            s = out.get(mask, 0) + c
            if czero(s):
                out.pop(mask, None)
            else:
                out[mask] = s
        return Multivector(out)

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "Multivector":
        c = as_coeff(c)
        if czero(c):
            return Multivector()
        return Multivector({m: c * v for m, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.keys()))

    def coefficient(self, indices):
        return self.terms.get(mask_of(indices), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "Multivector(0)"
        parts = []
        for mask in sorted(self.terms, key=lambda m: (bin(m).count("1"), m)):
            idx = "".join(str(i) for i in indices_of(mask)) or "0"
            parts.append(f"({self.terms[mask]})*e{idx}")
        return "Multivector(" + " + ".join(parts) + ")"


def _blade_times_gen(space: QuadraticSpace, mask: int, j: int) -> dict:
    """Expansion of (canonical blade) * e_j as {blade: coeff}.

    Rewrites by pulling e_j leftward through larger generators, using
    e_t e_j = b(t,j) e_0 - e_j e_t for t > j and e_j^2 = q(j) e_0.
    """
    key = (mask, j)
    cached = space._gen_cache.get(key)
    if cached is not None:
        return cached
    jbit = 1 << (j - 1)
    if mask == 0:
        out = {jbit: Fraction(1)}
    else:
        t = mask.bit_length()  # largest 1-based index in the blade
        tbit = 1 << (t - 1)
        rest = mask ^ tbit
        if t < j:
            out = {mask | jbit: Fraction(1)}
        elif t == j:
            qj = space.q(j)
            out = {} if czero(qj) else {rest: qj}
        else:
            out = {}
            btj = space.b(t, j)
            if not czero(btj):
                out[rest] = btj
            for m2, c in _blade_times_gen(space, rest, j).items():
                # m2 only involves indices < t, so appending e_t is canonical
                s = out.get(m2 | tbit, 0) - c
                if czero(s):
                    out.pop(m2 | tbit, None)
                else:
                    out[m2 | tbit] = s
    space._gen_cache[key] = out
    return out


def _terms_times_gen(space: QuadraticSpace, terms: dict, j: int) -> dict:
    out: dict = {}
    for mask, c in terms.items():
        for m2, c2 in _blade_times_gen(space, mask, j).items():
            s = out.get(m2, 0) + c * c2
            if czero(s):
                out.pop(m2, None)
            else:
                out[m2] = s
    return out


def geometric_product(x: Multivector, y: Multivector, space: QuadraticSpace) -> Multivector:
    """Associative unital product determined by the rewriting relations."""
    join_rings(x.ring(), y.ring())
    for ma in x.terms:
        _check_mask(ma, space.m)
    out: dict = {}
    for mb, cb in y.terms.items():
        _check_mask(mb, space.m)
        terms = dict(x.terms)
        for j in indices_of(mb):
            terms = _terms_times_gen(space, terms, j)
        for mask, c in terms.items():
            s = out.get(mask, 0) + c * cb
            if czero(s):
                out.pop(mask, None)
            else:
                out[mask] = s
    return Multivector(out)


def reverse(x: Multivector, space: QuadraticSpace) -> Multivector:
    """Principal anti-automorphism: fixes vectors, reverses products.

    Each blade's generator word is reversed and re-canonicalised through the
    product, so non-diagonal forms pick up the correct lower-degree terms.
    """
    out = Multivector()
    for mask, c in x.terms.items():
        _check_mask(mask, space.m)
        terms = {0: Fraction(1)}
        for j in reversed(indices_of(mask)):
            terms = _terms_times_gen(space, terms, j)
        out = out + Multivector(terms).scale(c)
    return out


def grade_involution(x: Multivector) -> Multivector:
    """Algebra automorphism scaling each blade of cardinality k by (-1)^k."""
    return Multivector(
        {m: (-c if bin(m).count("1") % 2 else c) for m, c in x.terms.items()}
    )


def even_part(x: Multivector) -> Multivector:
    return Multivector({m: c for m, c in x.terms.items() if bin(m).count("1") % 2 == 0})


def odd_part(x: Multivector) -> Multivector:
    return Multivector({m: c for m, c in x.terms.items() if bin(m).count("1") % 2 == 1})


def filtration_degree(x: Multivector) -> int:
    """Max blade cardinality; 0 for the zero element."""
    if not x.terms:
        return 0
    return max(bin(m).count("1") for m in x.terms)


def is_even(x: Multivector) -> bool:
    return all(bin(m).count("1") % 2 == 0 for m in x.terms)


def is_odd(x: Multivector) -> bool:
    return all(bin(m).count("1") % 2 == 1 for m in x.terms)


def is_homogeneous(x: Multivector) -> bool:
    return is_even(x) or is_odd(x)


def specialize(x: Multivector, c) -> Multivector:
    """Coefficient-wise substitution t = c; reports the offending blade on a
    pole."""
    c = Fraction(c) if not isinstance(c, Fraction) else c
    out = {}
    for mask, v in x.terms.items():
        if not regular_at(v, c):
            raise PoleError(
                f"pole at t = {c} in coefficient of blade {list(indices_of(mask))}"
            )
        val = eval_coeff(v, c)
        if val != 0:
            out[mask] = val
    return Multivector(out)


def specialize_space(space: QuadraticSpace, c) -> QuadraticSpace:
    c = Fraction(c) if not isinstance(c, Fraction) else c
    rows = []
    for i, row in enumerate(space.gram):
        vals = []
        for j, v in enumerate(row):
            if not regular_at(v, c):
                raise PoleError(f"pole at t = {c} in gram entry ({i + 1},{j + 1})")
            vals.append(eval_coeff(v, c))
        rows.append(vals)
    return QuadraticSpace(rows)
