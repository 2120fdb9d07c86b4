"""Independent oracles and random generators for the acceptance suite.

The invertibility oracle below never touches the elimination module.  A
square graded matrix is invertible exactly when the bilinear system
S*T = I, T*S = I has a solution in the unknown entries of T, and that
system is linear over the ground field.  We build it slot by slot and
solve it with a plain dense Gauss-Jordan written out here, so a bug in
the library's echelon code cannot vouch for itself.
"""

import random
from fractions import Fraction

from gradix.division import GradedDivisionRing
from gradix.fields import PrimeField, Rationals
from gradix.groupoids import ConnectedBlock, FiniteGroup, FiniteGroupoid, Morphism
from gradix.matrices import HomMatrix


def field_solve(field, rows, rhs):
    """Solve rows * x = rhs over the field; a solution list or None.

    Free variables are set to zero.  Plain dense Gauss-Jordan on the
    augmented matrix.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [list(rows[i]) + [rhs[i]] for i in range(m)]
    pivot_of = []
    r = 0
    for c in range(n):
        pivot = None
        for i in range(r, m):
            if not field.is_zero(aug[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = field.inv(aug[r][c])
        aug[r] = [field.mul(inv, v) for v in aug[r]]
        for i in range(m):
            if i != r and not field.is_zero(aug[i][c]):
                f = aug[i][c]
                aug[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(aug[i], aug[r])]
        pivot_of.append(c)
        r += 1
    for i in range(r, m):
        if not field.is_zero(aug[i][n]):
            return None
    x = [field.zero() for _ in range(n)]
    for row, c in enumerate(pivot_of):
        x[c] = aug[row][n]
    return x


def _inverse_shape(matrix):
    """The zero matrix of the shape a two-sided inverse would have."""
    return HomMatrix(matrix.ring, matrix.col_sig, matrix.row_sig)


def _product_equations(matrix, shape, flip):
    """Linear equations stating matrix*T = I (flip=False) or T*matrix = I.

    Unknowns are the live slots of ``shape``; the equation list pairs
    coefficient rows with their right-hand sides.
    """
    ring = matrix.ring
    field = ring.field
    k = matrix.shape[0]
    slots = [
        (a, b)
        for a in range(k)
        for b in range(k)
        if shape.slot_degree(a, b) is not None
    ]
    index = {s: p for p, s in enumerate(slots)}
    rows = []
    rhs = []
    for i in range(k):
        for j in range(k):
            coeffs = [field.zero()] * len(slots)
            for a in range(k):
                if flip:
                    left_deg = shape.slot_degree(i, a)
                    right_deg = matrix.slot_degree(a, j)
                    if left_deg is None or right_deg is None:
                        continue
                    beta = ring.factor_value(left_deg, right_deg)
                    pos = index[(i, a)]
                    term = field.mul(matrix.coeff(a, j), beta)
                else:
                    left_deg = matrix.slot_degree(i, a)
                    right_deg = shape.slot_degree(a, j)
                    if left_deg is None or right_deg is None:
                        continue
                    beta = ring.factor_value(left_deg, right_deg)
                    pos = index[(a, j)]
                    term = field.mul(matrix.coeff(i, a), beta)
                coeffs[pos] = field.add(coeffs[pos], term)
            rows.append(coeffs)
            rhs.append(field.one() if i == j else field.zero())
    return slots, rows, rhs


def right_inverse(matrix):
    """A matrix T with matrix*T = I, via the field-linear system, or None."""
    if matrix.shape[0] != matrix.shape[1]:
        return None
    shape = _inverse_shape(matrix)
    slots, rows, rhs = _product_equations(matrix, shape, flip=False)
    x = field_solve(matrix.ring.field, rows, rhs)
    if x is None:
        return None
    entries = {
        slot: v for slot, v in zip(slots, x) if not matrix.ring.field.is_zero(v)
    }
    return HomMatrix(matrix.ring, matrix.col_sig, matrix.row_sig, entries)


def is_invertible(matrix):
    """Two-sided invertibility decided by one joint linear system."""
    if matrix.shape[0] != matrix.shape[1]:
        return False
    shape = _inverse_shape(matrix)
    slots, rows, rhs = _product_equations(matrix, shape, flip=False)
    _, rows2, rhs2 = _product_equations(matrix, shape, flip=True)
    return field_solve(matrix.ring.field, rows + rows2, rhs + rhs2) is not None


def minor_rank(matrix):
    """Largest size of an invertible square submatrix, by full enumeration."""
    from itertools import combinations

    m, n = matrix.shape
    for size in range(min(m, n), 0, -1):
        for rows in combinations(range(m), size):
            for cols in combinations(range(n), size):
                if is_invertible(matrix.submatrix(rows, cols)):
                    return size
    return 0


# -- the four reference coefficient rings -----------------------------------


def ring_q_trivial():
    return GradedDivisionRing.trivial(Rationals(), object_id=0)


def ring_f5_c2():
    return GradedDivisionRing.group_ring(PrimeField(5), FiniteGroup.cyclic(2))


def ring_f3_twisted_c2():
    def twist(a, b):
        return 2 if a == 1 and b == 1 else 1

    return GradedDivisionRing.twisted_group_ring(PrimeField(3), FiniteGroup.cyclic(2), twist)


def ring_two_object_prime():
    q = Rationals()
    g = FiniteGroupoid.pair([1, 2])
    ident = g.identity(1)
    corner = GradedDivisionRing(q, g, [ident], {(ident, ident): q.one()})
    return GradedDivisionRing.prime_form(corner, [ident, Morphism(0, 1, 0, 2)])


def reference_rings():
    return [ring_q_trivial(), ring_f5_c2(), ring_f3_twisted_c2(), ring_two_object_prime()]


# -- random data -------------------------------------------------------------


def random_scalar(rng, field, nonzero=False):
    if field.kind == "Q":
        num = rng.randint(1, 4) if nonzero else rng.randint(-3, 3)
        if nonzero and rng.random() < 0.5:
            num = -num
        return Fraction(num, rng.randint(1, 3))
    v = rng.randrange(1, field.p) if nonzero else rng.randrange(field.p)
    return v


def random_signature(rng, ring, n):
    g = ring.groupoid
    gamma0 = ring.gamma0()
    pool = [m for m in g.morphisms() if m.target in gamma0]
    wild = list(g.morphisms())
    out = []
    for _ in range(n):
        if rng.random() < 0.1:
            out.append(rng.choice(wild))
        else:
            out.append(rng.choice(pool))
    return out


def random_matrix(rng, ring, m, n, density=0.6):
    rows = random_signature(rng, ring, m)
    cols = random_signature(rng, ring, n)
    out = HomMatrix(ring, rows, cols)
    for i in range(m):
        for j in range(n):
            if out.slot_degree(i, j) is not None and rng.random() < density:
                out._set(i, j, random_scalar(rng, ring.field))
    return out


def random_module(rng, ring, max_pdim=6):
    g = ring.groupoid
    gamma0 = ring.gamma0()
    pool = [m for m in g.morphisms() if m.target in gamma0]
    shifts = [rng.choice(pool) for _ in range(rng.randint(1, max_pdim))]
    from gradix.modules import GradedModule

    return GradedModule(ring, shifts)


def random_vectors(rng, module, count):
    g = module.ring.groupoid
    degrees = list(g.morphisms())
    out = []
    for _ in range(count):
        tau = rng.choice(degrees)
        entries = {}
        for i in range(module.pdim()):
            if module.slot(i, tau) is not None and rng.random() < 0.7:
                entries[i] = random_scalar(rng, module.ring.field)
        out.append(module.vector(tau, entries))
    return out


def seeded(seed):
    return random.Random(seed)
