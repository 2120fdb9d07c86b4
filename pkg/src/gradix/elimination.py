"""Gaussian elimination over a graded division ring, with full bookkeeping.

Row operations act by left multiplication with elementary matrices whose
signatures track the degree changes: swapping rows swaps signature
entries, scaling row i by a homogeneous a of degree g replaces alpha_i by
g*alpha_i, and a transvection adding a*row_i to row_j is only coherent
when the coefficient's degree equals alpha_j*alpha_i^{-1} (which is
exactly what elimination produces, since the coefficient comes from a
shared column).

row_reduce drives a deterministic reduced echelon form and accumulates
both the transform U (U*A = echelon) and its inverse V, so ranks,
inverses, solvers and factorizations all fall out of one pass.
"""

from itertools import combinations

from .errors import GradixError
from .matrices import HomMatrix

DEFAULT_RANK_BOUND = 8


class EliminationStep:
    """One recorded row operation."""

    __slots__ = ("kind", "i", "j", "coeff", "new_signature")

    def __init__(self, kind, i, j, coeff, new_signature):
        self.kind = kind  # 'swap' | 'scale' | 'transvect'
        self.i = i
        self.j = j
        self.coeff = coeff
        self.new_signature = new_signature

    def __repr__(self):
        if self.kind == "swap":
            return f"P(r{self.i},r{self.j})"
        if self.kind == "scale":
            return f"D(r{self.i}; {self.coeff!r})"
        return f"T(r{self.i}->r{self.j}; {self.coeff!r})"


def p_swap(ring, sig, i, j):
    """The permutation matrix interchanging rows i and j, in [sig'][sig]."""
    sig = list(sig)
    new_sig = list(sig)
    new_sig[i], new_sig[j] = new_sig[j], new_sig[i]
    out = HomMatrix(ring, new_sig, sig)
    one = ring.field.one()
    for k in range(len(sig)):
        if k == i:
            out._set(i, j, one)
        elif k == j:
            out._set(j, i, one)
        else:
            out._set(k, k, one)
    return out


def d_scale(ring, sig, i, a):
    """The diagonal matrix scaling row i by homogeneous a, in [sig'][sig]."""
    if a.is_zero:
        raise GradixError("row scale coefficient must be nonzero")
    if a.degree.source != sig[i].target:
        raise GradixError("scale coefficient degree does not compose with the row signature")
    g = ring.groupoid
    new_sig = list(sig)
    new_sig[i] = g.compose(a.degree, sig[i])
    out = HomMatrix(ring, new_sig, sig)
    for k in range(len(sig)):
        out._set(k, k, a.coeff if k == i else ring.field.one())
    return out


def t_add(ring, sig, i, j, a):
    """The transvection adding a*row_i to row_j (i != j), in [sig][sig].

    The coefficient degree must equal alpha_j*alpha_i^{-1}, so the row
    signature is unchanged and the retained (j,j) unit stays coherent.
    """
    if i == j:
        raise GradixError("transvection needs two distinct rows")
    if a.is_zero:
        raise GradixError("transvection coefficient must be nonzero")
    g = ring.groupoid
    if a.degree.source != sig[i].target:
        raise GradixError("transvection coefficient degree does not compose with the source row")
    if g.compose(a.degree, sig[i]) != sig[j]:
        raise GradixError("transvection coefficient degree must equal alpha_j * alpha_i^-1")
    out = HomMatrix.identity(ring, sig)
    out.entries[(j, i)] = a.coeff
    return out


class _Worksheet:
    """Mutable elimination state: the matrix M, the transform U, its inverse V.

    Invariants maintained by every operation: U*A = M and V = U^{-1}
    (so A = V*M), with U in [M.row_sig][original row_sig] and V in
    [original row_sig][M.row_sig].
    """

    def __init__(self, matrix):
        self.ring = matrix.ring
        self.field = matrix.ring.field
        self.orig = matrix
        self.row_sig = list(matrix.row_sig)
        self.col_sig = matrix.col_sig
        self.m_entries = dict(matrix.entries)
        self.u_entries = {(i, i): self.field.one() for i in range(len(self.row_sig))}
        self.v_entries = {(i, i): self.field.one() for i in range(len(self.row_sig))}
        self.steps = []

    def _swap_rows(self, entries, i, j, width):
        for k in range(width):
            a, b = entries.pop((i, k), None), entries.pop((j, k), None)
            if b is not None:
                entries[(i, k)] = b
            if a is not None:
                entries[(j, k)] = a

    def _swap_cols(self, entries, i, j, height):
        for k in range(height):
            a, b = entries.pop((k, i), None), entries.pop((k, j), None)
            if b is not None:
                entries[(k, i)] = b
            if a is not None:
                entries[(k, j)] = a

    def swap(self, i, j):
        if i == j:
            return
        m = len(self.row_sig)
        self._swap_rows(self.m_entries, i, j, len(self.col_sig))
        self._swap_rows(self.u_entries, i, j, m)
        self._swap_cols(self.v_entries, i, j, m)
        self.row_sig[i], self.row_sig[j] = self.row_sig[j], self.row_sig[i]
        self.steps.append(EliminationStep("swap", i, j, None, tuple(self.row_sig)))

    def scale(self, i, a):
        """Multiply row i by the invertible homogeneous scalar a."""
        g = self.ring.groupoid
        ring = self.ring
        # M and U rows are left-multiplied by a; V's column i is
        # right-multiplied by a^{-1}.
        a_inv = ring.inv(a)
        for entries, col_sigs in ((self.m_entries, self.col_sig), (self.u_entries, self.orig.row_sig)):
            for (r, k) in list(entries):
                if r != i:
                    continue
                deg = g.compose(self.row_sig[i], g.inverse(col_sigs[k]))
                v = ring.mul(a, ring.scalar(deg, entries[(r, k)]))
                entries[(r, k)] = v.coeff
        for (r, k) in list(self.v_entries):
            if k != i:
                continue
            deg = g.compose(self.orig.row_sig[r], g.inverse(self.row_sig[i]))
            v = ring.mul(ring.scalar(deg, self.v_entries[(r, k)]), a_inv)
            self.v_entries[(r, k)] = v.coeff
        self.row_sig[i] = g.compose(a.degree, self.row_sig[i])
        self.steps.append(EliminationStep("scale", i, None, a, tuple(self.row_sig)))

    def transvect(self, i, j, a):
        """Add a*row_i to row_j; the coefficient degree is alpha_j*alpha_i^{-1}."""
        g = self.ring.groupoid
        ring = self.ring
        assert g.compose(a.degree, self.row_sig[i]) == self.row_sig[j]
        for entries, col_sigs in ((self.m_entries, self.col_sig), (self.u_entries, self.orig.row_sig)):
            for (r, k) in [key for key in entries if key[0] == i]:
                deg = g.compose(self.row_sig[i], g.inverse(col_sigs[k]))
                term = ring.mul(a, ring.scalar(deg, entries[(r, k)]))
                old = entries.get((j, k))
                if old is None:
                    total = term
                else:
                    total = ring.add(ring.scalar(g.compose(self.row_sig[j], g.inverse(col_sigs[k])), old), term)
                if total.is_zero:
                    entries.pop((j, k), None)
                else:
                    entries[(j, k)] = total.coeff
        # V gains the inverse column operation: col_i -= col_j * a.
        a_neg = ring.neg(a)
        for (r, k) in [key for key in self.v_entries if key[1] == j]:
            deg = g.compose(self.orig.row_sig[r], g.inverse(self.row_sig[j]))
            term = ring.mul(ring.scalar(deg, self.v_entries[(r, k)]), a_neg)
            old = self.v_entries.get((r, i))
            if old is None:
                total = term
            else:
                total = ring.add(ring.scalar(g.compose(self.orig.row_sig[r], g.inverse(self.row_sig[i])), old), term)
            if total.is_zero:
                self.v_entries.pop((r, i), None)
            else:
                self.v_entries[(r, i)] = total.coeff
        self.steps.append(EliminationStep("transvect", i, j, a, tuple(self.row_sig)))

    def matrix(self):
        out = HomMatrix(self.ring, self.row_sig, self.col_sig)
        out.entries = dict(self.m_entries)
        return out

    def transform(self):
        out = HomMatrix(self.ring, self.row_sig, self.orig.row_sig)
        out.entries = dict(self.u_entries)
        return out

    def inverse_transform(self):
        out = HomMatrix(self.ring, self.orig.row_sig, self.row_sig)
        out.entries = dict(self.v_entries)
        return out


class Reduction:
    """The result of row_reduce: echelon form, transforms, pivots, steps."""

    def __init__(self, original, echelon, transform, inverse_transform, pivots, steps):
        self.original = original
        self.echelon = echelon
        self.transform = transform
        self.inverse_transform = inverse_transform
        self.pivots = tuple(pivots)  # (row, column) pairs
        self.steps = steps

    @property
    def rank(self):
        return len(self.pivots)


def row_reduce(matrix):
    """Deterministic reduced echelon form over a graded division ring.

    Scans columns left to right, picking in each the topmost unused
    nonzero entry as pivot, normalizes it to the local unit (the pivot
    row's signature becomes the pivot column's), and clears the column
    above and below.  Returns a Reduction with exact transforms.
    """
    ws = _Worksheet(matrix)
    ring = matrix.ring
    g = ring.groupoid
    m, n = matrix.shape
    pivots = []
    r = 0
    for col in range(n):
        pivot_row = None
        for row in range(r, m):
            if (row, col) in ws.m_entries:
                pivot_row = row
                break
        if pivot_row is None:
            continue
        ws.swap(r, pivot_row)
        pivot_deg = g.compose(ws.row_sig[r], g.inverse(ws.col_sig[col]))
        pivot = ring.scalar(pivot_deg, ws.m_entries[(r, col)])
        one = ring.one(ws.col_sig[col].target)
        if not ring.equal(pivot, one):
            ws.scale(r, ring.inv(pivot))
        for row in range(m):
            if row == r or (row, col) not in ws.m_entries:
                continue
            c_deg = g.compose(ws.row_sig[row], g.inverse(ws.col_sig[col]))
            c = ring.neg(ring.scalar(c_deg, ws.m_entries[(row, col)]))
            ws.transvect(r, row, c)
        pivots.append((r, col))
        r += 1
        if r == m:
            break
    return Reduction(matrix, ws.matrix(), ws.transform(), ws.inverse_transform(), pivots, ws.steps)


class RankReport:
    def __init__(self, rho_r, rho_c, rho, rho_i, rho_i_skipped, steps, factorization):
        self.rho_r = rho_r
        self.rho_c = rho_c
        self.rho = rho
        self.rho_i = rho_i
        self.rho_i_skipped = rho_i_skipped
        self.steps = steps
        self.factorization = factorization  # (B, C) with A = B*C of inner size rho

    def all_equal(self):
        vals = {self.rho_r, self.rho_c, self.rho}
        if not self.rho_i_skipped:
            vals.add(self.rho_i)
        return len(vals) == 1


def rank_all(matrix, rank_bound=DEFAULT_RANK_BOUND):
    """All four ranks of a matrix over a graded division ring.

    Row rank by reduction, column rank by reducing the transpose over the
    opposite ring, inner rank from the factorization A = B*C with B the
    pivot columns of the inverse transform and C the pivot rows of the
    echelon form, and the invertible-submatrix rank by bounded minor
    search with early stop (sizes are tried in increasing order, and a
    size with no invertible minor after a successful one ends the search).
    """
    red = row_reduce(matrix)
    rho_r = red.rank
    red_op = row_reduce(matrix.transpose_opposite())
    rho_c = red_op.rank

    pivot_rows = [i for (i, _) in red.pivots]
    b = red.inverse_transform.submatrix(range(matrix.shape[0]), pivot_rows)
    c = red.echelon.submatrix(pivot_rows, range(matrix.shape[1]))
    if not b.mul(c).equal(matrix):
        raise GradixError("internal error: factorization witness failed to reproduce the matrix")
    rho = rho_r

    m, n = matrix.shape
    skipped = max(m, n) > rank_bound
    rho_i = None if skipped else 0
    if not skipped:
        for size in range(1, min(m, n) + 1):
            found = False
            for rows in combinations(range(m), size):
                for cols in combinations(range(n), size):
                    sub = matrix.submatrix(rows, cols)
                    if row_reduce(sub).rank == size:
                        found = True
                        break
                if found:
                    break
            if not found:
                break
            rho_i = size

    report = RankReport(rho_r, rho_c, rho, rho_i, skipped, red.steps, (b, c))
    if not report.all_equal():
        raise GradixError(
            f"rank values disagree: rho_r={rho_r}, rho_c={rho_c}, rho={rho}, "
            f"rho_i={'skipped' if skipped else rho_i}"
        )
    return report


def invert_square(matrix):
    """The two-sided inverse of a square graded matrix, or None.

    Requires a square signature whose targets all lie in gamma0.  When
    the rank is full the reduction's transform is the inverse; both
    AB = I_{r(alpha)} and BA = I_{r(beta)} are verified exactly.
    """
    m, n = matrix.shape
    if m != n:
        raise GradixError(f"inversion needs a square signature, got {m}x{n}")
    gamma0 = set(matrix.ring.gamma0())
    for a in matrix.row_sig + matrix.col_sig:
        if a.target not in gamma0:
            raise GradixError(f"signature target {a.target} is outside gamma0; its local unit is zero")
    red = row_reduce(matrix)
    if red.rank < n:
        return None
    inverse = red.transform
    left = inverse.mul(matrix)
    right = matrix.mul(inverse)
    if not left.equal(HomMatrix.identity(matrix.ring, matrix.col_sig)):
        raise GradixError("internal error: reduction transform is not a left inverse")
    if not right.equal(HomMatrix.identity(matrix.ring, matrix.row_sig)):
        raise GradixError("internal error: left inverse failed to verify on the right")
    return inverse


def solve(matrix, rhs):
    """Solve A*x = b for a homogeneous column b; None when inconsistent.

    ``rhs`` is a single-column HomMatrix in [alpha][(sigma^-1)] (entry i
    of degree alpha_i*sigma).  Returns the coefficient column x in
    [beta][(sigma^-1)], with free coordinates set to zero.  When the
    columns of A are pseudo-independent the solution is unique.
    """
    if rhs.shape[1] != 1:
        raise GradixError("right-hand side must be a single column")
    if rhs.row_sig != matrix.row_sig:
        raise GradixError("right-hand side row signature must match the matrix")
    n = matrix.shape[1]
    red = row_reduce(matrix.hstack(rhs))
    for (_, col) in red.pivots:
        if col == n:
            return None
    x = HomMatrix(matrix.ring, matrix.col_sig, rhs.col_sig)
    for (row, col) in red.pivots:
        c = red.echelon.coeff(row, n)
        if not matrix.ring.field.is_zero(c):
            x.entries[(col, 0)] = c
    if not matrix.mul(x).equal(rhs):
        raise GradixError("internal error: computed solution failed to verify")
    return x
