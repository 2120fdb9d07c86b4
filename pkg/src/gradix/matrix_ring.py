"""Matrix rings over a graded division ring, graded by the same groupoid.

A matrix ring here is determined by a graded division ring D and a list
of signature sets, one per index.  Every signature morphism must target
an object of gamma0(D), and within one set no two morphisms may share a
source or share a target.  The homogeneous component at a degree gamma
consists of matrices whose (i, j) entry lives in the division-ring
component at delta*gamma*sigma^-1, where delta is the unique signature
of index i with source r(gamma) and sigma the unique signature of index
j with source d(gamma); when either selection fails, or the resulting
degree falls outside the support, the slot is dead and the entry must
be zero.

Multiplication routes through the rectangular block form: a homogeneous
element is a hom-space matrix over D, and the product of two elements is
a hom-space matrix product after translating the second block so the
signatures meet.  All twist bookkeeping is inherited from HomMatrix.
"""

from .errors import GradixError, ValidationError
from .matrices import HomMatrix


class MatrixRingElement:
    """A homogeneous element of a matrix ring.

    ``degree`` is a morphism of the grading groupoid, or None for zero.
    ``entries`` maps live index pairs (i, j) to nonzero field elements.
    """

    def __init__(self, parent, degree, entries):
        self.parent = parent
        self.degree = degree
        self.entries = entries

    @property
    def is_zero(self):
        return self.degree is None

    def __repr__(self):
        if self.is_zero:
            return "MatrixRingElement(0)"
        return f"MatrixRingElement(degree={self.degree}, {len(self.entries)} nonzero)"

    def coeff(self, i, j):
        return self.entries.get((i, j), self.parent.ring.field.zero())

    def equal(self, other):
        if self.parent is not other.parent and not self.parent.same_shape(other.parent):
            raise GradixError("cannot compare elements of different matrix rings")
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return self.degree == other.degree and self.entries == other.entries

    def add(self, other):
        p = self.parent
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.degree != other.degree:
            raise GradixError("can only add homogeneous elements of equal degree")
        field = p.ring.field
        out = dict(self.entries)
        for key, c in other.entries.items():
            s = field.add(out.get(key, field.zero()), c)
            if field.is_zero(s):
                out.pop(key, None)
            else:
                out[key] = s
        if not out:
            return p.zero()
        return MatrixRingElement(p, self.degree, out)

    def neg(self):
        if self.is_zero:
            return self
        field = self.parent.ring.field
        return MatrixRingElement(
            self.parent, self.degree, {k: field.neg(c) for k, c in self.entries.items()}
        )

    def sub(self, other):
        return self.add(other.neg())

    def scale(self, c):
        """Multiply every entry by a field scalar."""
        field = self.parent.ring.field
        c = field.coerce(c)
        if self.is_zero or field.is_zero(c):
            return self.parent.zero()
        return MatrixRingElement(
            self.parent, self.degree, {k: field.mul(v, c) for k, v in self.entries.items()}
        )

    def mul(self, other):
        p = self.parent
        if self.parent is not other.parent and not self.parent.same_shape(other.parent):
            raise GradixError("cannot multiply elements of different matrix rings")
        if self.is_zero or other.is_zero:
            return p.zero()
        g = p.ring.groupoid
        if not g.is_composable(self.degree, other.degree):
            return p.zero()
        new_degree = g.compose(self.degree, other.degree)
        a = self.rectangular_block()
        b = p.translate_block(other.rectangular_block(), g.inverse(self.degree))
        return p.from_block(a.mul(b), new_degree)

    def rectangular_block(self):
        """The hom-space matrix carrying this element's entries.

        Rows are indexed by the live row indices of the degree (signature
        morphisms with source r(degree)), columns by the live column
        indices with signatures translated by degree^-1 so the slot
        degrees come out to delta*gamma*sigma^-1.
        """
        if self.is_zero:
            raise GradixError("the zero element has no block form")
        p = self.parent
        g = p.ring.groupoid
        gamma = self.degree
        rows = p.live_indices(gamma.target)
        cols = p.live_indices(gamma.source)
        row_sig = [p.selection(i, gamma.target) for i in rows]
        inv = g.inverse(gamma)
        col_sig = [g.compose(p.selection(j, gamma.source), inv) for j in cols]
        block = HomMatrix(p.ring, row_sig, col_sig)
        pos_r = {i: a for a, i in enumerate(rows)}
        pos_c = {j: b for b, j in enumerate(cols)}
        for (i, j), c in self.entries.items():
            block.entries[(pos_r[i], pos_c[j])] = c
        return block


class MatrixRing:
    """M_I(D)(signatures): square matrices over D with prescribed shifts."""

    def __init__(self, ring, signatures):
        self.ring = ring
        self.signatures = tuple(tuple(sorted(set(sig))) for sig in signatures)
        self._validate()
        self._by_source = []
        for sig in self.signatures:
            self._by_source.append({s.source: s for s in sig})

    def _validate(self):
        g = self.ring.groupoid
        gamma0 = set(self.ring.gamma0())
        if not self.signatures:
            raise ValidationError("signature.nonempty", "a matrix ring needs at least one index")
        for i, sig in enumerate(self.signatures):
            if not sig:
                raise ValidationError("signature.nonempty", f"signature set {i} is empty")
            for s in sig:
                if not g.contains(s):
                    raise ValidationError(
                        "signature.morphism", f"set {i}: {s} is not a morphism of the groupoid"
                    )
                if s.target not in gamma0:
                    raise ValidationError(
                        "signature.r_unique",
                        f"set {i}: target object {s.target} is outside gamma0",
                    )
            sources = [s.source for s in sig]
            if len(set(sources)) != len(sources):
                raise ValidationError(
                    "signature.d_unique",
                    f"set {i} has two morphisms with the same source object",
                )
            targets = [s.target for s in sig]
            if len(set(targets)) != len(targets):
                raise ValidationError(
                    "signature.r_unique",
                    f"set {i} has two morphisms with the same target object",
                )

    @property
    def size(self):
        return len(self.signatures)

    def same_shape(self, other):
        return (
            self.ring.field == other.ring.field
            and self.ring.support == other.ring.support
            and self.ring.factor == other.ring.factor
            and self.signatures == other.signatures
        )

    def selection(self, i, source_obj):
        """The unique signature of index i with the given source, or None."""
        return self._by_source[i].get(source_obj)

    def live_indices(self, source_obj):
        """Indices whose signature set touches the given source object."""
        return tuple(i for i in range(self.size) if source_obj in self._by_source[i])

    def slot_degree(self, i, j, gamma):
        """The division-ring degree of entry (i, j) at element degree gamma."""
        g = self.ring.groupoid
        delta = self.selection(i, gamma.target)
        sigma = self.selection(j, gamma.source)
        if delta is None or sigma is None:
            return None
        out = g.compose(g.compose(delta, gamma), g.inverse(sigma))
        return out if out in self.ring.support else None

    def component_dimension(self, gamma):
        """Dimension over the base field of the component at gamma."""
        rows = self.live_indices(gamma.target)
        cols = self.live_indices(gamma.source)
        return sum(
            1 for i in rows for j in cols if self.slot_degree(i, j, gamma) is not None
        )

    def zero(self):
        return MatrixRingElement(self, None, {})

    def element(self, gamma, entries):
        """Build a homogeneous element, validating every entry slot."""
        g = self.ring.groupoid
        if not g.contains(gamma):
            raise ValidationError("element.degree", f"{gamma} is not a morphism of the groupoid")
        field = self.ring.field
        out = {}
        for (i, j), raw in dict(entries).items():
            if not (0 <= i < self.size and 0 <= j < self.size):
                raise ValidationError("element.entry_slot", f"index pair ({i}, {j}) out of range")
            c = field.coerce(raw)
            if field.is_zero(c):
                continue
            if self.slot_degree(i, j, gamma) is None:
                raise ValidationError(
                    "element.entry_slot",
                    f"entry ({i}, {j}) is dead at degree {gamma} and must be zero",
                )
            out[(i, j)] = c
        if not out:
            return self.zero()
        return MatrixRingElement(self, gamma, out)

    def e_unit(self, i, j):
        """The matrix unit E_ij; needs singleton signatures with a common target."""
        si, sj = self.signatures[i], self.signatures[j]
        if len(si) != 1 or len(sj) != 1:
            raise GradixError("matrix units need singleton signature sets")
        a, b = si[0], sj[0]
        if a.target != b.target:
            raise GradixError(
                f"matrix unit E({i},{j}) needs a common signature target, got {a.target} and {b.target}"
            )
        g = self.ring.groupoid
        degree = g.compose(g.inverse(a), b)
        return self.element(degree, {(i, j): self.ring.field.one()})

    def identity_at(self, e):
        """The local identity at object e: diagonal ones on the live indices."""
        if not self.ring.groupoid.has_object(e):
            raise GradixError(f"no object {e} in the grading groupoid")
        live = self.live_indices(e)
        if not live:
            return self.zero()
        one = self.ring.field.one()
        return self.element(self.ring.groupoid.identity(e), {(i, i): one for i in live})

    def identity_family(self):
        """All nonzero local identities, as (object, element) pairs."""
        out = []
        for e in self.ring.groupoid.objects():
            el = self.identity_at(e)
            if not el.is_zero:
                out.append((e, el))
        return out

    def translate_block(self, block, tau):
        """Right-compose both signatures of a hom matrix with tau.

        Slot degrees are unchanged, so the entries carry over verbatim.
        """
        g = self.ring.groupoid
        rows = [g.compose(a, tau) for a in block.row_sig]
        cols = [g.compose(b, tau) for b in block.col_sig]
        return HomMatrix(self.ring, rows, cols, dict(block.entries))

    def from_block(self, block, gamma):
        """Rebuild an element of degree gamma from its rectangular block."""
        rows = self.live_indices(gamma.target)
        cols = self.live_indices(gamma.source)
        if block.shape != (len(rows), len(cols)):
            raise GradixError(
                f"block shape {block.shape} does not match the live index sets at {gamma}"
            )
        entries = {}
        for (a, b), c in block.entries.items():
            entries[(rows[a], cols[b])] = c
        if not entries:
            return self.zero()
        return self.element(gamma, entries)


class MatrixFormBridge:
    """A degree-preserving isomorphism between a gr-prime division ring
    and a matrix ring over its corner at the smallest base object."""

    def __init__(self, source, base_object, corner, sections, matrix_ring, index_of):
        self.source = source
        self.base_object = base_object
        self.corner = corner
        self.sections = sections
        self.matrix_ring = matrix_ring
        self.index_of = index_of
        self._units = {f: source.unit(s) for f, s in sections.items()}

    def to_matrix(self, a):
        """Carry a homogeneous element of the division ring into the matrix ring."""
        if a.is_zero:
            return self.matrix_ring.zero()
        d = self.source
        gamma = a.degree
        u_r = self._units[gamma.target]
        u_d = self._units[gamma.source]
        conj = d.mul(d.mul(u_r, a), d.inv(u_d))
        i = self.index_of[gamma.target]
        j = self.index_of[gamma.source]
        return self.matrix_ring.element(gamma, {(i, j): conj.coeff})

    def from_matrix(self, x):
        """Carry a homogeneous matrix-ring element back into the division ring."""
        if x.is_zero:
            return self.source.zero()
        d = self.source
        gamma = x.degree
        i = self.index_of[gamma.target]
        j = self.index_of[gamma.source]
        c = x.coeff(i, j)
        loop = self.matrix_ring.slot_degree(i, j, gamma)
        u_r = self._units[gamma.target]
        u_d = self._units[gamma.source]
        return d.mul(d.mul(d.inv(u_r), d.scalar(loop, c)), u_d)


def matrix_form(ring):
    """Present a gr-prime graded division ring as a matrix ring over its corner.

    The base object is the smallest element of gamma0.  For every object
    f of gamma0 the connecting section is the first supported morphism
    f -> base in morphism order; at the base itself this is the identity,
    so the corner embeds verbatim.  Returns a MatrixFormBridge.
    """
    if not ring.is_gr_prime():
        raise GradixError("matrix form needs a gr-prime ring; decompose first")
    gamma0 = ring.gamma0()
    base = gamma0[0]
    sections = {}
    for f in gamma0:
        candidates = sorted(m for m in ring.support if m.source == f and m.target == base)
        if not candidates:
            raise GradixError(f"no supported morphism from {f} to the base object {base}")
        sections[f] = candidates[0]
    corner = ring.corner(base)
    ring_sigs = [[sections[f]] for f in gamma0]
    m_ring = MatrixRing(corner, ring_sigs)
    index_of = {f: k for k, f in enumerate(gamma0)}
    return MatrixFormBridge(ring, base, corner, sections, m_ring, index_of)
