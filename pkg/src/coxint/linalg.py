"""Exact rational linear and affine algebra.

Vectors are tuples of ``fractions.Fraction``.  Matrices are tuples of row
tuples.  An inner product is always carried explicitly by a :class:`GramForm`
so the same code works in the simple-root coordinate system of any
crystallographic type, where the form is not the standard dot product.

Affine subspaces are kept in a canonical form (reduced row-echelon direction
basis, basepoint reduced against the pivots) so that equality of point-sets
is literal equality of the dataclass, and AffSub values can live in sets and
dict keys.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Scalar = Fraction
Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]

F0 = Fraction(0)
F1 = Fraction(1)


# ---------------------------------------------------------------------------
# vector / matrix helpers


def vec(*xs) -> Vec:
    return tuple(Fraction(x) for x in xs)


def zero_vec(n: int) -> Vec:
    return (F0,) * n


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vneg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def smul(c, u: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * a for a in u)


def is_zero_vec(u: Vec) -> bool:
    return all(a == 0 for a in u)


def mat(*rows) -> Mat:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def identity_mat(n: int) -> Mat:
    return tuple(tuple(F1 if i == j else F0 for j in range(n)) for i in range(n))


def mat_vec(m: Mat, v: Vec) -> Vec:
    return tuple(sum((a * b for a, b in zip(row, v)), F0) for row in m)


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), F0) for col in bt) for row in a
    )


def mat_transpose(a: Mat) -> Mat:
    return tuple(zip(*a))


def mat_sub(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_cols(a: Mat) -> list[Vec]:
    return [tuple(col) for col in zip(*a)]


def mat_inv(a: Mat) -> Mat:
    """Inverse via Gauss-Jordan; raises ValueError on singular input."""
    n = len(a)
    aug = [list(row) + [F1 if i == j else F0 for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def rref(rows: Iterable[Vec]) -> list[Vec]:
    """Reduced row echelon form; zero rows dropped, pivots normalized to 1."""
    work = [list(r) for r in rows if not is_zero_vec(tuple(r))]
    if not work:
        return []
    ncols = len(work[0])
    out: list[list[Fraction]] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        p = work[r][col]
        work[r] = [x / p for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    out = [row for row in work[:r]]
    return [tuple(row) for row in out]


def null_space(rows: Sequence[Vec], n: int) -> list[Vec]:
    """Basis for {x : row . x = 0 for all rows} (standard dot, used for
    turning a direction basis into defining equations and back)."""
    red = rref(rows)
    pivots = []
    for row in red:
        pivots.append(next(j for j, x in enumerate(row) if x != 0))
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for j in free:
        x = [F0] * n
        x[j] = F1
        for row, pc in zip(red, pivots):
            x[pc] = -row[j]
        basis.append(tuple(x))
    return basis


def solve_linear(rows: Sequence[Vec], rhs: Sequence[Fraction], n: int):
    """Solve rows . x = rhs.  Returns (particular, null_basis) or None if
    inconsistent."""
    aug = [list(r) + [Fraction(b)] for r, b in zip(rows, rhs, strict=True)]
    red = rref([tuple(r) for r in aug]) if aug else []
    pivots = []
    for row in red:
        pc = next(j for j, x in enumerate(row) if x != 0)
        if pc == n:
            return None
        pivots.append(pc)
    x = [F0] * n
    for row, pc in zip(red, pivots):
        x[pc] = row[n]
    nb = null_space([r[:n] for r in red], n)
    return tuple(x), nb


# ---------------------------------------------------------------------------
# Gram forms


@dataclass(frozen=True)
class GramForm:
    """Symmetric positive-definite bilinear form, entries exact rationals."""

    entries: Mat

    def __post_init__(self):
        n = len(self.entries)
        ent = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", ent)
        if any(len(row) != n for row in ent):
            raise ValueError("gram form must be square")
        if ent != mat_transpose(ent):
            raise ValueError("gram form must be symmetric")
        # leading principal minors > 0
        work = [list(row) for row in ent]
        for k in range(n):
            minor = [row[: k + 1] for row in work[: k + 1]]
            if _det(minor) <= 0:
                raise ValueError("gram form must be positive definite")

    @property
    def n(self) -> int:
        return len(self.entries)

    def bilin(self, u: Vec, v: Vec) -> Fraction:
        total = F0
        for gi, ui in zip(self.entries, u):
            if ui:
                total += ui * sum((a * b for a, b in zip(gi, v)), F0)
        return total

    def norm2(self, u: Vec) -> Fraction:
        return self.bilin(u, u)

    @staticmethod
    def standard(n: int) -> "GramForm":
        return GramForm(identity_mat(n))


def _det(rows: list[list[Fraction]]) -> Fraction:
    m = [list(r) for r in rows]
    n = len(m)
    det = F1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return F0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = F1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


# ---------------------------------------------------------------------------
# affine subspaces


@dataclass(frozen=True)
class AffSub:
    """Affine subspace in canonical form.

    ``basepoint is None`` encodes the empty subspace.  ``directions`` is a
    reduced row-echelon basis of the direction space; the basepoint has
    zeros in all pivot coordinates, which makes equality of point-sets equal
    to dataclass equality.
    """

    n: int
    basepoint: Optional[Vec]
    directions: tuple[Vec, ...]
    ambient: Optional[str] = field(default=None, compare=False)

    @property
    def is_empty(self) -> bool:
        return self.basepoint is None

    @property
    def dim(self) -> int:
        if self.is_empty:
            return -1
        return len(self.directions)

    @property
    def is_linear(self) -> bool:
        return self.basepoint is not None and is_zero_vec(self.basepoint)

    @property
    def is_full(self) -> bool:
        return self.dim == self.n

    def contains_point(self, p: Vec) -> bool:
        if self.is_empty:
            return False
        return _in_row_space(self.directions, vsub(p, self.basepoint))

    def contains(self, other: "AffSub") -> bool:
        """Point-set containment other ⊆ self."""
        if other.is_empty:
            return True
        if self.is_empty:
            return False
        if not self.contains_point(other.basepoint):
            return False
        return all(_in_row_space(self.directions, d) for d in other.directions)

    def translate(self, v: Vec) -> "AffSub":
        if self.is_empty:
            return self
        return affine_sub(vadd(self.basepoint, v), self.directions, self.ambient, self.n)

    def equations(self) -> tuple[list[Vec], list[Fraction]]:
        """Defining system rows . x = rhs (empty subspace not supported)."""
        if self.is_empty:
            raise ValueError("empty subspace has no defining equations")
        rows = null_space(self.directions, self.n)
        rhs = [sum((a * b for a, b in zip(row, self.basepoint)), F0) for row in rows]
        return rows, rhs


def affine_sub(basepoint: Optional[Sequence], directions: Iterable[Sequence] = (),
               ambient: Optional[str] = None, n: Optional[int] = None) -> AffSub:
    """Build an AffSub in canonical form from any basepoint + spanning set."""
    if basepoint is None:
        if n is None:
            raise ValueError("empty subspace needs explicit ambient dimension")
        return AffSub(n, None, (), ambient)
    bp = tuple(Fraction(x) for x in basepoint)
    dirs = rref([tuple(Fraction(x) for x in d) for d in directions])
    # reduce basepoint against pivots so the representation is canonical
    bp_l = list(bp)
    for row in dirs:
        pc = next(j for j, x in enumerate(row) if x != 0)
        if bp_l[pc] != 0:
            f = bp_l[pc]
            bp_l = [x - f * y for x, y in zip(bp_l, row)]
    return AffSub(len(bp), tuple(bp_l), tuple(dirs), ambient)


def linear_sub(directions: Iterable[Sequence], n: int, ambient: Optional[str] = None) -> AffSub:
    return affine_sub(zero_vec(n), directions, ambient, n)


def empty_sub(n: int, ambient: Optional[str] = None) -> AffSub:
    return AffSub(n, None, (), ambient)


def full_sub(n: int, ambient: Optional[str] = None) -> AffSub:
    return affine_sub(zero_vec(n), identity_mat(n), ambient, n)


def _in_row_space(rows: tuple[Vec, ...], v: Vec) -> bool:
    work = list(v)
    for row in rows:
        pc = next(j for j, x in enumerate(row) if x != 0)
        if work[pc] != 0:
            f = work[pc]
            work = [x - f * y for x, y in zip(work, row)]
    return all(x == 0 for x in work)


# ---------------------------------------------------------------------------
# the four operations


def span_affine(points: Sequence[Sequence], ambient: Optional[str] = None) -> AffSub:
    """Smallest affine subspace containing all the given points."""
    if not points:
        raise ValueError("empty affine hull")
    pts = [tuple(Fraction(x) for x in p) for p in points]
    base = pts[0]
    dirs = [vsub(p, base) for p in pts[1:]]
    return affine_sub(base, dirs, ambient, len(base))


def intersect_affine(a: AffSub, b: AffSub) -> AffSub:
    """Set intersection of two affine subspaces; may be empty."""
    if a.n != b.n:
        raise ValueError("ambient dimension mismatch")
    if a.ambient is not None and b.ambient is not None and a.ambient != b.ambient:
        raise ValueError("ambient space mismatch")
    if a.is_empty or b.is_empty:
        return empty_sub(a.n, a.ambient or b.ambient)
    rows_a, rhs_a = a.equations()
    rows_b, rhs_b = b.equations()
    sol = solve_linear(rows_a + rows_b, rhs_a + rhs_b, a.n)
    if sol is None:
        return empty_sub(a.n, a.ambient or b.ambient)
    point, nb = sol
    return affine_sub(point, nb, a.ambient or b.ambient, a.n)


def b_orth_complement(u: AffSub, g: GramForm) -> AffSub:
    """g-orthogonal complement of a linear subspace."""
    if u.is_empty or not u.is_linear:
        raise ValueError("orthogonal complement needs a linear subspace")
    rows = [mat_vec(g.entries, d) for d in u.directions]
    return linear_sub(null_space(rows, u.n), u.n, u.ambient)


def b_project(v: Sequence, u: AffSub, g: GramForm) -> Vec:
    """g-orthogonal projection of a vector onto a linear subspace."""
    if u.is_empty or not u.is_linear:
        raise ValueError("projection target must be a linear subspace")
    vv = tuple(Fraction(x) for x in v)
    dirs = u.directions
    if not dirs:
        return zero_vec(u.n)
    # solve for coefficients c with g(v - sum c_i d_i, d_j) = 0
    rows = [tuple(g.bilin(di, dj) for di in dirs) for dj in dirs]
    rhs = [g.bilin(vv, dj) for dj in dirs]
    sol = solve_linear(rows, rhs, len(dirs))
    assert sol is not None, "gram matrix of independent vectors is invertible"
    coeffs = sol[0]
    out = zero_vec(u.n)
    for c, d in zip(coeffs, dirs):
        out = vadd(out, smul(c, d))
    return out


def span_of_points(m: AffSub) -> AffSub:
    """Linear span of all points of an affine subspace (dim+1 when nonlinear)."""
    if m.is_empty:
        raise ValueError("empty subspace has no span")
    return linear_sub(m.directions + (m.basepoint,), m.n, m.ambient)
