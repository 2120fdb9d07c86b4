"""Rings of small preadditive categories over the pair groupoid.

Two entry points.  A category in matrix form carries, per block, a scalar
field and a multiplicity for every object; hom groups are block-diagonal
spaces of rectangular matrices and everything about the category is
numeric.  A raw category carries hom-space dimensions, composition
structure constants and identity vectors; it is validated exhaustively
and turned into a structure-constant graded ring for inspection, but the
classification predicates refuse it.

The grading is by the pair groupoid on the object list: the component at
the pair (A, B) is the hom group of morphisms B -> A, and the ring
product is composition when the middle object matches, zero otherwise.
"""

from .errors import GradixError, ValidationError
from .groupoids import FiniteGroupoid, Morphism
from .division import GradedDivisionRing
from .matrix_ring import MatrixRing
from .structure import SemisimpleRingSpec


class MatrixFormCategory:
    """Per-block fields and per-object multiplicities n(j, A)."""

    def __init__(self, objects, fields, dims):
        names = list(objects)
        if len(set(names)) != len(names):
            raise ValidationError("category.objects", f"duplicate object names in {names}")
        if not names:
            raise ValidationError("category.objects", "a category needs at least one object")
        self.objects = tuple(names)
        self.fields = tuple(fields)
        if not self.fields:
            raise ValidationError("category.dims", "at least one division ring is required")
        table = {}
        for name in names:
            if name not in dims:
                raise ValidationError("category.dims", f"object {name!r} has no multiplicity row")
            row = list(dims[name])
            if len(row) != len(self.fields):
                raise ValidationError(
                    "category.dims",
                    f"object {name!r} lists {len(row)} multiplicities for {len(self.fields)} blocks",
                )
            for n in row:
                if not isinstance(n, int) or isinstance(n, bool) or n < 0:
                    raise ValidationError(
                        "category.dims", f"multiplicity {n!r} at object {name!r} is not a count"
                    )
            table[name] = tuple(row)
        extra = set(dims) - set(names)
        if extra:
            raise ValidationError("category.dims", f"multiplicities for unknown objects {sorted(extra, key=repr)}")
        self.dims = table

    def multiplicity(self, j, name):
        return self.dims[name][j]

    def active_blocks(self):
        """Blocks with at least one index somewhere."""
        return [
            j
            for j in range(len(self.fields))
            if any(self.dims[name][j] for name in self.objects)
        ]

    def total_multiplicity(self, name):
        return sum(self.dims[name])

    def hom_dimension(self, a, b):
        """dim Hom(B, A), the component at the pair (A, B)."""
        return sum(self.dims[a][j] * self.dims[b][j] for j in range(len(self.fields)))


class CategoryFlags:
    def __init__(self, semisimple, simple_artinian, all_functors_free, division, witnesses):
        self.semisimple = semisimple
        self.simple_artinian = simple_artinian
        self.all_functors_free = all_functors_free
        self.division = division
        self.simple_division = division and simple_artinian
        self.witnesses = witnesses


def classify_category(cat):
    """Numeric classification of a matrix-form category.

    Raw categories are refused: their semisimplicity is not decided here.
    """
    if isinstance(cat, (RawCategory, CategoryRing)):
        raise GradixError(
            "raw categories only get validation and a ring; classification "
            "needs the matrix form with explicit per-object multiplicities"
        )
    witnesses = {}
    active = cat.active_blocks()
    simple_artinian = len(active) == 1
    witnesses["simple_artinian"] = f"{len(active)} nonzero blocks"

    all_free = True
    free_objects = {}
    for j in active:
        pick = None
        for name in cat.objects:
            if cat.multiplicity(j, name) != 1:
                continue
            if any(
                cat.multiplicity(jp, name)
                for jp in range(len(cat.fields))
                if jp != j
            ):
                continue
            pick = name
            break
        if pick is None:
            all_free = False
            witnesses["all_functors_free"] = (
                f"block {j} has no object of multiplicity one to itself"
            )
            break
        free_objects[j] = pick
    if all_free:
        witnesses["all_functors_free"] = free_objects

    division = True
    for name in cat.objects:
        if cat.total_multiplicity(name) > 1:
            division = False
            witnesses["division"] = f"object {name!r} has total multiplicity {cat.total_multiplicity(name)}"
            break
    if division:
        witnesses["division"] = "every object has total multiplicity at most one"

    return CategoryFlags(True, simple_artinian, all_free, division, witnesses)


def category_to_semisimple_spec(cat):
    """The block family of matrix rings realizing the category's ring.

    One block per active j, over the field at the block's first populated
    object, with one singleton signature per copy of every object.
    """
    active = cat.active_blocks()
    if not active:
        raise GradixError("the zero category has no semisimple block form")
    fields = {cat.fields[j] for j in active}
    if len(fields) > 1:
        raise GradixError("blocks over different scalar fields cannot share one graded ring")
    groupoid = FiniteGroupoid.pair(list(range(len(cat.objects))))
    index = {name: k for k, name in enumerate(cat.objects)}
    blocks = []
    for j in active:
        base = next(name for name in cat.objects if cat.multiplicity(j, name))
        ident = groupoid.identity(index[base])
        ring = GradedDivisionRing(
            cat.fields[j], groupoid, [ident], {(ident, ident): cat.fields[j].one()}
        )
        sigs = []
        for name in cat.objects:
            for _ in range(cat.multiplicity(j, name)):
                sigs.append([Morphism(0, index[base], 0, index[name])])
        blocks.append(MatrixRing(ring, sigs))
    spec = SemisimpleRingSpec(blocks)
    spec.object_names = cat.objects
    return spec


# -- raw categories and their rings ------------------------------------------


class RawCategory:
    """Hom dimensions, composition structure constants, identity vectors.

    ``hom_dims`` maps a pair (A, B) to dim Hom(B, A); missing pairs are
    zero.  ``compose`` maps a basis pair ((A, B, i), (B, C, j)) to the
    coefficient dict {k: scalar} of the composite in the (A, C) basis;
    missing entries are zero composites.  ``identities`` maps each object
    to its coefficient dict over the (A, A) basis.  All axioms are
    checked exhaustively at construction.
    """

    def __init__(self, objects, field, hom_dims, compose, identities):
        names = list(objects)
        if len(set(names)) != len(names) or not names:
            raise ValidationError("category.objects", f"bad object list {names}")
        self.objects = tuple(names)
        self.field = field
        dims = {}
        for key, dim in dict(hom_dims).items():
            a, b = key
            if a not in self.objects or b not in self.objects:
                raise ValidationError("category.hom", f"hom pair {key!r} names unknown objects")
            if not isinstance(dim, int) or dim < 0:
                raise ValidationError("category.hom", f"hom dimension {dim!r} at {key!r}")
            if dim:
                dims[(a, b)] = dim
        self.hom_dims = dims
        self.compose_table = {}
        for (left, right), coeffs in dict(compose).items():
            la, lb, li = left
            ra, rb, rj = right
            if lb != ra:
                raise ValidationError(
                    "category.hom", f"composite {left!r} after {right!r} has mismatched middle objects"
                )
            if not (0 <= li < self.dim(la, lb)) or not (0 <= rj < self.dim(ra, rb)):
                raise ValidationError("category.hom", f"basis index out of range in {left!r} o {right!r}")
            clean = {}
            for k, raw in dict(coeffs).items():
                if not (0 <= k < self.dim(la, rb)):
                    raise ValidationError(
                        "category.hom", f"composite of {left!r} and {right!r} hits bad index {k}"
                    )
                v = field.coerce(raw)
                if not field.is_zero(v):
                    clean[k] = v
            if clean:
                self.compose_table[(left, right)] = clean
        self.identities = {}
        for name in self.objects:
            raw = identities.get(name)
            if raw is None:
                raise ValidationError("category.identity", f"object {name!r} has no identity vector")
            clean = {}
            for k, val in dict(raw).items():
                if not (0 <= k < self.dim(name, name)):
                    raise ValidationError(
                        "category.identity", f"identity of {name!r} uses bad basis index {k}"
                    )
                v = field.coerce(val)
                if not field.is_zero(v):
                    clean[k] = v
            self.identities[name] = clean
        self._validate()

    def dim(self, a, b):
        return self.hom_dims.get((a, b), 0)

    def _basis_compose(self, left, right):
        return self.compose_table.get((left, right), {})

    def _compose_vectors(self, a, b, c, x, y):
        """Composite of x over the (a, b) basis with y over the (b, c) basis."""
        field = self.field
        out = {}
        for i, xi in x.items():
            for j, yj in y.items():
                for k, ck in self._basis_compose((a, b, i), (b, c, j)).items():
                    s = field.add(out.get(k, field.zero()), field.mul(field.mul(xi, yj), ck))
                    if field.is_zero(s):
                        out.pop(k, None)
                    else:
                        out[k] = s
        return out

    def _validate(self):
        field = self.field
        pairs = list(self.hom_dims)
        for (a, b) in pairs:
            for i in range(self.dim(a, b)):
                got = self._compose_vectors(a, a, b, self.identities[a], {i: field.one()})
                if got != {i: field.one()}:
                    raise ValidationError(
                        "category.identity", f"I_{a!r} does not fix basis morphism {(a, b, i)}"
                    )
                got = self._compose_vectors(a, b, b, {i: field.one()}, self.identities[b])
                if got != {i: field.one()}:
                    raise ValidationError(
                        "category.identity", f"basis morphism {(a, b, i)} is not fixed by I_{b!r}"
                    )
        for (a, b) in pairs:
            for (b2, c) in pairs:
                if b2 != b:
                    continue
                for (c2, d) in pairs:
                    if c2 != c:
                        continue
                    for i in range(self.dim(a, b)):
                        for j in range(self.dim(b, c)):
                            for k in range(self.dim(c, d)):
                                uv = self._basis_compose((a, b, i), (b, c, j))
                                vw = self._basis_compose((b, c, j), (c, d, k))
                                left = self._compose_vectors(a, c, d, uv, {k: field.one()})
                                right = self._compose_vectors(a, b, d, {i: field.one()}, vw)
                                if left != right:
                                    raise ValidationError(
                                        "category.associativity",
                                        f"({(a,b,i)} o {(b,c,j)}) o {(c,d,k)} differs from the right-bracketing",
                                    )


class CategoryRingElement:
    """Homogeneous element: a pair degree and hom-basis coefficients."""

    def __init__(self, ring, degree, coeffs):
        self.ring = ring
        self.degree = degree
        self.coeffs = dict(coeffs)

    @property
    def is_zero(self):
        return self.degree is None

    def add(self, other):
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.degree != other.degree:
            raise GradixError("can only add elements of equal degree")
        field = self.ring.field
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = field.add(out.get(k, field.zero()), v)
            if field.is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        if not out:
            return self.ring.zero()
        return CategoryRingElement(self.ring, self.degree, out)

    def mul(self, other):
        ring = self.ring
        if self.is_zero or other.is_zero:
            return ring.zero()
        a, b = self.degree
        b2, c = other.degree
        if b != b2:
            return ring.zero()
        out = ring.raw._compose_vectors(a, b, c, self.coeffs, other.coeffs)
        if not out:
            return ring.zero()
        return CategoryRingElement(ring, (a, c), out)

    def equal(self, other):
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return self.degree == other.degree and self.coeffs == other.coeffs


class CategoryRing:
    """The structure-constant graded ring of a validated raw category.

    Degrees are object pairs (A, B); the groupoid view grades by the pair
    groupoid on object positions.
    """

    def __init__(self, raw):
        self.raw = raw
        self.field = raw.field
        self.object_names = raw.objects
        self.groupoid = FiniteGroupoid.pair(list(range(len(raw.objects))))
        self._index = {name: k for k, name in enumerate(raw.objects)}

    def pair_morphism(self, a, b):
        """The groupoid degree under the pair (A, B)."""
        return Morphism(0, self._index[a], 0, self._index[b])

    def component_dimension(self, a, b):
        return self.raw.dim(a, b)

    def support(self):
        """Object pairs with nonzero components, sorted."""
        return sorted(self.raw.hom_dims)

    def zero(self):
        return CategoryRingElement(self, None, {})

    def element(self, a, b, coeffs):
        field = self.field
        out = {}
        for k, raw in dict(coeffs).items():
            if not (0 <= k < self.raw.dim(a, b)):
                raise GradixError(f"no basis index {k} in the ({a!r}, {b!r}) component")
            v = field.coerce(raw)
            if not field.is_zero(v):
                out[k] = v
        if not out:
            return self.zero()
        return CategoryRingElement(self, (a, b), out)

    def basis_element(self, a, b, k):
        return self.element(a, b, {k: self.field.one()})

    def identity(self, a):
        coeffs = self.raw.identities[a]
        if not coeffs:
            return self.zero()
        return CategoryRingElement(self, (a, a), dict(coeffs))


def ring_of_category(raw):
    """The graded ring of a raw category; validation happened at construction."""
    if not isinstance(raw, RawCategory):
        raise GradixError("ring construction needs a RawCategory")
    return CategoryRing(raw)


def raw_from_matrix_form(cat):
    """Spell out a matrix-form category as structure constants.

    Hom bases are matrix units (j, p, q); composition contracts the inner
    index within a block.  Used to cross-check the ring's per-degree
    dimensions against the product formula.
    """
    active = cat.active_blocks()
    fields = {cat.fields[j] for j in active} or {cat.fields[0]}
    if len(fields) > 1:
        raise GradixError("structure constants need a single scalar field")
    field = fields.pop()

    basis = {}
    hom_dims = {}
    for a in cat.objects:
        for b in cat.objects:
            units = [
                (j, p, q)
                for j in range(len(cat.fields))
                for p in range(cat.multiplicity(j, a))
                for q in range(cat.multiplicity(j, b))
            ]
            if units:
                basis[(a, b)] = units
                hom_dims[(a, b)] = len(units)

    position = {
        (pair, unit): k for pair, units in basis.items() for k, unit in enumerate(units)
    }
    compose = {}
    for (a, b), left_units in basis.items():
        for (b2, c), right_units in basis.items():
            if b2 != b:
                continue
            for i, (j, p, q) in enumerate(left_units):
                for jj, (j2, r, s) in enumerate(right_units):
                    if j2 != j or r != q:
                        continue
                    k = position[((a, c), (j, p, s))]
                    compose[((a, b, i), (b, c, jj))] = {k: field.one()}
    identities = {}
    for a in cat.objects:
        coeffs = {}
        for j in range(len(cat.fields)):
            for p in range(cat.multiplicity(j, a)):
                coeffs[position[((a, a), (j, p, p))]] = field.one()
        identities[a] = coeffs
    return RawCategory(cat.objects, field, hom_dims, compose, identities)
