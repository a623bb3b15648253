"""Exact dense linear algebra over the coefficient field.

Everything reduces to one primitive: reduced row echelon form with
exact arithmetic.  Vectors are plain lists; a Subspace is the canonical
RREF basis of a subspace of a fixed homogeneous component, so two
subspaces are equal iff their stored rows are identical.

Skip-zero guards in the elimination inner loop keep the sparse cases
(diagonal rules, the zero rule) near linear time without a separate
sparse code path.
"""

from __future__ import annotations

from .freealg import NCPoly, index_word


def rref(rows):
    """Reduced row echelon form.

    Takes an iterable of equal-length coefficient lists, returns
    ``(reduced_rows, pivot_columns)`` with zero rows dropped, each pivot
    normalized to one and cleared above and below.  The result is the
    canonical basis of the row space.  Input rows are not modified.
    """
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        pr = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                pr = i
                break
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        prow = rows[rank]
        inv = prow[col]
        if inv != 1:
            for j in range(col, ncols):
                if prow[j]:
                    prow[j] = prow[j] / inv
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                irow = rows[i]
                for j in range(col, ncols):
                    if prow[j]:
                        irow[j] = irow[j] - f * prow[j]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def nullspace(rows, ncols, field):
    """Basis of solutions of the homogeneous system ``rows * v = 0``.

    Returns the canonical basis: one vector per free column, with a one
    in that column, in increasing column order.
    """
    red, pivots = rref(rows)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for t, p in enumerate(pivots):
            if red[t][free]:
                v[p] = -red[t][free]
        basis.append(v)
    return basis


def invert_matrix(rows, field):
    """Exact inverse of a square matrix of scalars; None if singular."""
    m = len(rows)
    aug = []
    for i, r in enumerate(rows):
        if len(r) != m:
            raise ValueError("matrix is not square")
        line = [field.of(c) for c in r]
        line += [field.one if j == i else field.zero for j in range(m)]
        aug.append(line)
    red, pivots = rref(aug)
    if pivots != list(range(m)):
        return None
    return [r[m:] for r in red]


class Subspace:
    """A subspace of the degree-s homogeneous component of F<x1,...,xn>,
    held as its canonical reduced-echelon basis."""

    __slots__ = ("n", "degree", "field", "rows", "pivots")

    def __init__(self, n, degree, field, rows, pivots):
        # internal: rows must already be canonical RREF output
        self.n = n
        self.degree = degree
        self.field = field
        self.rows = [list(r) for r in rows]
        self.pivots = list(pivots)

    # ---- constructors ----

    @classmethod
    def zero(cls, n, degree, field):
        return cls(n, degree, field, [], [])

    @classmethod
    def full(cls, n, degree, field):
        dim = n ** degree
        rows = []
        for i in range(dim):
            v = [field.zero] * dim
            v[i] = field.one
            rows.append(v)
        return cls(n, degree, field, rows, list(range(dim)))

    @classmethod
    def from_vectors(cls, vectors, n, degree, field):
        dim = n ** degree
        for v in vectors:
            if len(v) != dim:
                raise ValueError(f"expected vectors of length {dim}, got {len(v)}")
        rows, pivots = rref(vectors)
        return cls(n, degree, field, rows, pivots)

    @classmethod
    def span(cls, polys, degree, n=None, field=None):
        """Span of homogeneous polynomials of the given degree.

        Zero polynomials are allowed and ignored; any term of the wrong
        degree is an error.  For an empty spanning set, n and field must
        be passed explicitly.
        """
        polys = list(polys)
        for p in polys:
            if n is None:
                n, field = p.n, p.field
            if p.n != n or p.field != field:
                raise ValueError("mixed algebras in spanning set")
            if not p.is_homogeneous(degree):
                raise ValueError(
                    f"spanning polynomial {p} is not homogeneous of degree {degree}")
        if n is None:
            raise ValueError("empty spanning set needs explicit n and field")
        return cls.from_vectors([p.coords(degree) for p in polys], n, degree, field)

    # ---- queries ----

    @property
    def dim(self):
        return len(self.rows)

    @property
    def ambient_dim(self):
        return self.n ** self.degree

    def reduce(self, vec):
        """Residual of vec after subtracting its projection along the basis.

        The residual is zero exactly when vec lies in the subspace.
        """
        vec = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = vec[p]
            if c:
                for j in range(p, len(vec)):
                    if row[j]:
                        vec[j] = vec[j] - c * row[j]
        return vec

    def contains_vector(self, vec):
        return not any(self.reduce(vec))

    def contains(self, poly: NCPoly):
        """Membership test for a homogeneous polynomial of matching degree.

        The zero polynomial belongs to every subspace.
        """
        if not poly:
            return True
        if not poly.is_homogeneous(self.degree):
            raise ValueError(
                f"membership test needs a homogeneous polynomial of degree "
                f"{self.degree}, got {poly}")
        return self.contains_vector(poly.coords(self.degree))

    def contains_subspace(self, other: "Subspace"):
        self._check(other)
        return all(self.contains_vector(r) for r in other.rows)

    def _check(self, other: "Subspace"):
        if (self.n, self.degree) != (other.n, other.degree):
            raise ValueError(
                f"subspace mismatch: degree {self.degree} over n={self.n} vs "
                f"degree {other.degree} over n={other.n}")
        if self.field != other.field:
            raise ValueError("subspace coefficient fields differ")

    def intersect(self, other: "Subspace"):
        """Intersection, via the nullspace of the stacked basis.

        A vector sum(a_i u_i) = sum(b_j v_j) of the two bases is in the
        intersection; solving the concatenated system for (a, b) and
        projecting onto the a-part spans it.
        """
        self._check(other)
        if not self.rows or not other.rows:
            return Subspace.zero(self.n, self.degree, self.field)
        amb = self.ambient_dim
        k1, k2 = self.dim, other.dim
        # columns: a_1..a_k1, b_1..b_k2; rows: one equation per coordinate
        eqs = []
        for c in range(amb):
            eq = [self.rows[i][c] for i in range(k1)]
            eq += [-other.rows[j][c] for j in range(k2)]
            if any(eq):
                eqs.append(eq)
        vectors = []
        for sol in nullspace(eqs, k1 + k2, self.field):
            v = [self.field.zero] * amb
            for i in range(k1):
                if sol[i]:
                    row = self.rows[i]
                    a = sol[i]
                    for c in range(amb):
                        if row[c]:
                            v[c] = v[c] + a * row[c]
            vectors.append(v)
        return Subspace.from_vectors(vectors, self.n, self.degree, self.field)

    def __add__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        self._check(other)
        return Subspace.from_vectors(self.rows + other.rows,
                                     self.n, self.degree, self.field)

    def equal(self, other: "Subspace"):
        """Equality with shape checking: same component, identical RREF rows."""
        self._check(other)
        return self.rows == other.rows

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.n == other.n and self.degree == other.degree
                and self.field == other.field and self.rows == other.rows)

    def __hash__(self):
        return hash((self.n, self.degree, self.field,
                     tuple(tuple(r) for r in self.rows)))

    def basis_polys(self):
        return [NCPoly.from_coords(self.n, self.degree, r, self.field)
                for r in self.rows]

    def __repr__(self):
        return (f"<Subspace dim={self.dim} of degree-{self.degree} "
                f"component, n={self.n}>")


def preimage(images, targets, domain_degree, n, field):
    """Solve ``L(v) in T`` for a linear map given on basis words.

    ``images[j]`` is the image of the j-th canonical degree-s word; it is
    either a single homogeneous NCPoly or a tuple of them (a map into a
    direct sum of homogeneous components).  ``targets`` is a Subspace or a
    matching tuple of Subspaces.  Returns the Subspace of all degree-s
    combinations whose image lies in the target blockwise.
    """
    if isinstance(targets, Subspace):
        targets = (targets,)
        images = [(im,) if isinstance(im, NCPoly) else im for im in images]
    dom = n ** domain_degree
    if len(images) != dom:
        raise ValueError(f"expected {dom} basis images, got {len(images)}")
    blocks = len(targets)
    # residual of each image against the target: membership fails exactly
    # where residuals are nonzero, so the kernel of the residual matrix is
    # the preimage
    residuals = []
    for im in images:
        if len(im) != blocks:
            raise ValueError("image tuple does not match target blocks")
        res = []
        for p, t in zip(im, targets):
            if p and not p.is_homogeneous(t.degree):
                raise ValueError(
                    f"image {p} is not homogeneous of degree {t.degree}")
            if t.dim == t.ambient_dim:
                res.extend([field.zero] * t.ambient_dim)
            else:
                res.extend(t.reduce(p.coords(t.degree)))
        residuals.append(res)
    ncoords = len(residuals[0])
    eqs = []
    for c in range(ncoords):
        eq = [residuals[j][c] for j in range(dom)]
        if any(eq):
            eqs.append(eq)
    sols = nullspace(eqs, dom, field)
    return Subspace.from_vectors(sols, n, domain_degree, field)


def poly_from_index(n, degree, idx, field):
    return NCPoly.from_word(n, index_word(idx, degree, n), field)
