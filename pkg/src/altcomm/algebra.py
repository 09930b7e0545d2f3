"""Finite-dimensional algebras given by structure constants.

An algebra is a free module over an exact field with a distinguished basis
and a bilinear product stored sparsely: entry (i, j, k, c) says that the
product of basis vectors i and j contains basis vector k with coefficient
c.  Omitted entries are zero.  Nothing about the product is assumed, not
even associativity; alternativity, units and the like are checked, never
trusted.
"""

from __future__ import annotations

import json

from .fields import field_from_dict
from .linalg import Matrix

_UNSET = object()


class Algebra:
    """A structure-constant algebra over an exact field.

    Immutable after construction apart from internal memo caches.  If unit
    coordinates are supplied they are verified against every basis vector
    before being accepted.
    """

    def __init__(self, name, field, dim, basis_labels, structure,
                 unit=None, comment=None):
        if dim < 1:
            raise ValueError("algebra dimension must be at least 1")
        basis_labels = [str(l) for l in basis_labels]
        if len(basis_labels) != dim:
            raise ValueError(f"expected {dim} basis labels, got {len(basis_labels)}")
        if len(set(basis_labels)) != dim:
            raise ValueError("basis labels must be distinct")
        self.name = str(name)
        self.field = field
        self.dim = dim
        self.basis_labels = tuple(basis_labels)
        self.comment = comment

        # _rows[i][j] and _cols[j][i] both map to the terms of b_i b_j.
        rows = [dict() for _ in range(dim)]
        cols = [dict() for _ in range(dim)]
        merged = {}
        for entry in structure:
            i, j, k, c = entry
            for idx in (i, j, k):
                if not 0 <= idx < dim:
                    raise ValueError(f"structure index {idx} out of range for dim {dim}")
            if not c:
                continue
            key = (i, j, k)
            if key in merged:
                merged[key] = field.add(merged[key], c)
            else:
                merged[key] = c
        for (i, j, k), c in merged.items():
            if not c:
                continue
            rows[i].setdefault(j, []).append((k, c))
            cols[j].setdefault(i, []).append((k, c))
        for d in rows:
            for terms in d.values():
                terms.sort()
        for d in cols:
            for terms in d.values():
                terms.sort()
        self._rows = rows
        self._cols = cols

        self._basis_elements = None
        self._basis_coords = [tuple(field.one if t == i else field.zero for t in range(dim))
                              for i in range(dim)]
        self._basis_products = None
        self._left_mats = [None] * dim
        self._right_mats = [None] * dim
        self._center = None
        self._center_rows = None
        self._center_wmats = None
        self._nucleus = None

        if unit is not None:
            u = Element(self, unit)
            self._check_unit(u)
            self._unit = u
        else:
            self._unit = _UNSET

    # ------------------------------------------------------------------
    # elements

    def element(self, coords) -> "Element":
        return Element(self, coords)

    def element_from_ints(self, ints) -> "Element":
        f = self.field
        return Element(self, [f.from_int(n) for n in ints])

    def zero_element(self) -> "Element":
        return Element(self, [self.field.zero] * self.dim)

    def basis_element(self, i: int) -> "Element":
        if self._basis_elements is None:
            self._basis_elements = [Element(self, c) for c in self._basis_coords]
        return self._basis_elements[i]

    def basis_coords(self, i: int) -> tuple:
        return self._basis_coords[i]

    @property
    def unit(self) -> "Element | None":
        """The two-sided unit, solved for lazily and cached; None if absent."""
        if self._unit is _UNSET:
            self._unit = self._solve_unit()
        return self._unit

    def _check_unit(self, u: "Element") -> None:
        for i in range(self.dim):
            b = self.basis_element(i)
            if u * b != b or b * u != b:
                raise ValueError(
                    f"claimed unit fails on basis vector {self.basis_labels[i]}")

    def _solve_unit(self) -> "Element | None":
        blocks = []
        rhs = []
        for j in range(self.dim):
            bj = self._basis_coords[j]
            blocks.append(self.right_mult_matrix(bj))   # u . b_j = b_j
            rhs.extend(bj)
            blocks.append(self.left_mult_matrix(bj))    # b_j . u = b_j
            rhs.extend(bj)
        system = Matrix.stack(self.field, blocks, cols=self.dim)
        sol = system.solve(rhs)
        if sol is None:
            return None
        u = Element(self, sol)
        self._check_unit(u)
        return u

    # ------------------------------------------------------------------
    # the product

    def mul_coords(self, a, b) -> list:
        """Coordinates of the product of two coordinate vectors."""
        f = self.field
        out = [f.zero] * self.dim
        rows = self._rows
        for i, ai in enumerate(a):
            if not ai:
                continue
            row = rows[i]
            for j, bj in enumerate(b):
                if not bj:
                    continue
                terms = row.get(j)
                if not terms:
                    continue
                s = f.mul(ai, bj)
                for k, c in terms:
                    out[k] = f.add(out[k], f.mul(s, c))
        return out

    def basis_product(self, i: int, j: int) -> tuple:
        """Cached coordinates of b_i b_j."""
        if self._basis_products is None:
            self._basis_products = [[None] * self.dim for _ in range(self.dim)]
        cached = self._basis_products[i][j]
        if cached is None:
            f = self.field
            out = [f.zero] * self.dim
            for k, c in self._rows[i].get(j, ()):
                out[k] = c
            cached = tuple(out)
            self._basis_products[i][j] = cached
        return cached

    def left_mult_matrix(self, coords) -> Matrix:
        """Matrix of x -> a . x in the chosen basis."""
        f = self.field
        m = [[f.zero] * self.dim for _ in range(self.dim)]
        for i, ai in enumerate(coords):
            if not ai:
                continue
            for j, terms in self._rows[i].items():
                for k, c in terms:
                    m[k][j] = f.add(m[k][j], f.mul(ai, c))
        return Matrix(f, m, cols=self.dim)

    def right_mult_matrix(self, coords) -> Matrix:
        """Matrix of x -> x . a in the chosen basis."""
        f = self.field
        m = [[f.zero] * self.dim for _ in range(self.dim)]
        for j, aj in enumerate(coords):
            if not aj:
                continue
            for i, terms in self._cols[j].items():
                for k, c in terms:
                    m[k][i] = f.add(m[k][i], f.mul(aj, c))
        return Matrix(f, m, cols=self.dim)

    def basis_left_matrix(self, i: int) -> Matrix:
        if self._left_mats[i] is None:
            self._left_mats[i] = self.left_mult_matrix(self._basis_coords[i])
        return self._left_mats[i]

    def basis_right_matrix(self, i: int) -> Matrix:
        if self._right_mats[i] is None:
            self._right_mats[i] = self.right_mult_matrix(self._basis_coords[i])
        return self._right_mats[i]

    # ------------------------------------------------------------------
    # serialization

    def structure_entries(self) -> list[tuple]:
        entries = []
        for i, row in enumerate(self._rows):
            for j, terms in row.items():
                for k, c in terms:
                    entries.append((i, j, k, c))
        entries.sort(key=lambda e: (e[0], e[1], e[2]))
        return entries

    def to_dict(self) -> dict:
        f = self.field
        d = {
            "name": self.name,
            "field": f.to_dict(),
            "dim": self.dim,
            "basis": list(self.basis_labels),
        }
        if self._unit is not _UNSET and self._unit is not None:
            d["unit"] = [f.fmt(c) for c in self._unit.coords]
        d["structure"] = [[i, j, k, f.fmt(c)] for i, j, k, c in self.structure_entries()]
        if self.comment is not None:
            d["comment"] = self.comment
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Algebra":
        for key in ("name", "field", "dim", "basis", "structure"):
            if key not in d:
                raise ValueError(f"algebra file is missing {key!r}")
        field = field_from_dict(d["field"])
        dim = d["dim"]
        if not isinstance(dim, int) or dim < 1:
            raise ValueError(f"bad dimension {dim!r}")
        structure = []
        for entry in d["structure"]:
            if len(entry) != 4:
                raise ValueError(f"bad structure entry {entry!r}")
            i, j, k, c = entry
            structure.append((i, j, k, field.parse(str(c))))
        unit = None
        if "unit" in d and d["unit"] is not None:
            unit = [field.parse(str(s)) for s in d["unit"]]
        return cls(d["name"], field, dim, d["basis"], structure,
                   unit=unit, comment=d.get("comment"))

    def label_index(self, label: str) -> int:
        try:
            return self.basis_labels.index(label)
        except ValueError:
            raise ValueError(f"no basis vector labelled {label!r} in {self.name}") from None

    def __repr__(self) -> str:
        return f"Algebra({self.name}, dim={self.dim}, field={self.field.label})"


class Element:
    """An algebra element as an immutable coordinate vector."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords):
        coords = tuple(coords)
        if len(coords) != algebra.dim:
            raise ValueError(f"expected {algebra.dim} coordinates, got {len(coords)}")
        self.algebra = algebra
        self.coords = coords

    def _require_same(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected an Element, got {type(other).__name__}")
        if self.algebra is not other.algebra:
            raise ValueError("elements belong to different algebras")

    def __add__(self, other: "Element") -> "Element":
        self._require_same(other)
        f = self.algebra.field
        return Element(self.algebra, [f.add(a, b) for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "Element") -> "Element":
        self._require_same(other)
        f = self.algebra.field
        return Element(self.algebra, [f.sub(a, b) for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "Element":
        f = self.algebra.field
        return Element(self.algebra, [f.neg(a) for a in self.coords])

    def __mul__(self, other: "Element") -> "Element":
        self._require_same(other)
        return Element(self.algebra, self.algebra.mul_coords(self.coords, other.coords))

    def scale(self, s) -> "Element":
        f = self.algebra.field
        if isinstance(s, int):
            s = f.from_int(s)
        return Element(self.algebra, [f.mul(s, a) for a in self.coords])

    def __rmul__(self, s) -> "Element":
        if isinstance(s, Element):
            return NotImplemented
        return self.scale(s)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def to_strings(self) -> list[str]:
        f = self.algebra.field
        return [f.fmt(c) for c in self.coords]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Element) and self.algebra is other.algebra
                and self.coords == other.coords)

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.coords))

    def __repr__(self) -> str:
        return f"Element({self.algebra.name}, [{', '.join(self.to_strings())}])"


class Subspace:
    """A subspace given by a linearly independent list of elements.

    The echelonized coordinate matrix is cached; membership reduces a
    vector against it and subspace equality compares canonical forms.
    """

    __slots__ = ("algebra", "basis", "_echelon")

    def __init__(self, algebra: Algebra, basis, _echelon=None):
        self.algebra = algebra
        self.basis = tuple(basis)
        for el in self.basis:
            if el.algebra is not algebra:
                raise ValueError("basis element from a different algebra")
        self._echelon = _echelon
        if _echelon is None and self.basis:
            rows, pivots = self._compute_echelon()
            if len(pivots) != len(self.basis):
                raise ValueError("subspace basis is linearly dependent")
            self._echelon = (rows, pivots)
        elif _echelon is None:
            self._echelon = ([], [])

    def _compute_echelon(self):
        m = Matrix(self.algebra.field, [list(el.coords) for el in self.basis],
                   cols=self.algebra.dim)
        reduced, pivots = m.rref()
        return reduced.data[: len(pivots)], pivots

    @classmethod
    def from_spanning(cls, algebra: Algebra, elements) -> "Subspace":
        """The span of arbitrary elements, with a canonical echelon basis."""
        coords = [list(el.coords) for el in elements]
        if not coords:
            return cls(algebra, [], _echelon=([], []))
        reduced, pivots = Matrix(algebra.field, coords, cols=algebra.dim).rref()
        rows = reduced.data[: len(pivots)]
        basis = [Element(algebra, r) for r in rows]
        return cls(algebra, basis, _echelon=([list(r) for r in rows], pivots))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce_coords(self, coords) -> list:
        """Remainder of a coordinate vector after reduction against the echelon basis."""
        f = self.algebra.field
        v = list(coords)
        rows, pivots = self._echelon
        for row, pc in zip(rows, pivots):
            factor = v[pc]
            if factor:
                for j in range(len(v)):
                    if row[j]:
                        v[j] = f.sub(v[j], f.mul(factor, row[j]))
        return v

    def contains(self, el: Element) -> bool:
        if el.algebra is not self.algebra:
            raise ValueError("element from a different algebra")
        return not any(self.reduce_coords(el.coords))

    def echelon_rows(self) -> list[list]:
        return [list(r) for r in self._echelon[0]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        if self.algebra is not other.algebra:
            return False
        return self._echelon[0] == other._echelon[0] and self._echelon[1] == other._echelon[1]

    __hash__ = None

    def __repr__(self) -> str:
        return f"Subspace({self.algebra.name}, dim={self.dim})"


# ----------------------------------------------------------------------
# products, brackets and structural checks


def multiply(a: Element, b: Element) -> Element:
    """The algebra product; a convenience alias for a * b."""
    return a * b


def commutator(a: Element, b: Element) -> Element:
    return a * b - b * a


def associator(a: Element, b: Element, c: Element) -> Element:
    return (a * b) * c - a * (b * c)


def is_alternative(algebra: Algebra):
    """Whether the product satisfies both alternative laws.

    Both laws are quadratic in one variable, so checking basis pairs plus
    the mixed linearizations is exhaustive when the characteristic is not
    2 (guaranteed by the field types).  Returns (True, None) or
    (False, (x, y, z)) where the triple has a nonzero associator of the
    shape (x, x, y) or (y, x, x).
    """
    n = algebra.dim
    basis = [algebra.basis_element(i) for i in range(n)]
    for i in range(n):
        bi = basis[i]
        for j in range(n):
            bj = basis[j]
            if not associator(bi, bi, bj).is_zero():
                return False, (bi, bi, bj)
            if not associator(bj, bi, bi).is_zero():
                return False, (bj, bi, bi)
    for i in range(n):
        for j in range(i + 1, n):
            x = basis[i] + basis[j]
            for k in range(n):
                bk = basis[k]
                if not associator(x, x, bk).is_zero():
                    return False, (x, x, bk)
                if not associator(bk, x, x).is_zero():
                    return False, (bk, x, x)
    return True, None


def is_associative(algebra: Algebra):
    """Exhaustive associativity check over basis triples (sufficient by trilinearity)."""
    n = algebra.dim
    basis = [algebra.basis_element(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if not associator(basis[i], basis[j], basis[k]).is_zero():
                    return False, (basis[i], basis[j], basis[k])
    return True, None


def find_unit(algebra: Algebra) -> Element | None:
    """The two-sided unit if one exists; the result is cached on the algebra."""
    return algebra.unit


def direct_sum(a: Algebra, b: Algebra) -> Algebra:
    """The direct sum with componentwise product.

    Useful mainly for building counterexamples: the summand units are
    idempotents that fail the regularity condition the decomposition
    machinery needs.
    """
    if a.field != b.field:
        raise ValueError("direct summands must share a field")
    labels = [f"{l}.1" for l in a.basis_labels] + [f"{l}.2" for l in b.basis_labels]
    shift = a.dim
    entries = list(a.structure_entries())
    entries.extend((i + shift, j + shift, k + shift, c) for i, j, k, c in b.structure_entries())
    unit = None
    ua, ub = a.unit, b.unit
    if ua is not None and ub is not None:
        unit = list(ua.coords) + list(ub.coords)
    return Algebra(f"{a.name}(+){b.name}", a.field, a.dim + b.dim, labels, entries,
                   unit=unit)


# ----------------------------------------------------------------------
# file I/O


def save_algebra(algebra: Algebra, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(algebra.to_dict(), fh, indent=2)
        fh.write("\n")


def load_algebra(path) -> Algebra:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            d = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"not valid JSON: {path} ({exc})") from exc
    return Algebra.from_dict(d)


def coords_to_strings(field, coords) -> list[str]:
    return [field.fmt(c) for c in coords]


def coords_from_strings(field, strings) -> list:
    return [field.parse(s) for s in strings]
