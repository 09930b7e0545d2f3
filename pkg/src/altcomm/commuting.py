"""Additive maps that commute with their argument, and their normal form.

The main result this module makes executable: when the algebra splits
along a nontrivial idempotent satisfying the regularity condition, every
commuting additive map phi decomposes as phi(x) = z x + xi(x) with z
central and xi taking values in the center.  decompose() builds the pair
constructively from the Peirce projections of phi at the idempotents;
decompose_oracle() finds it by solving a linear system instead, so the two
routes check each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, Element, commutator
from .errors import DecompositionError, HypothesisError, NotCommutingError
from .linalg import Matrix
from .peirce import PeirceData, center, center_rows, is_central


class LinearMap:
    """A linear self-map stored as a matrix acting on coordinate columns."""

    __slots__ = ("algebra", "matrix")

    def __init__(self, algebra: Algebra, matrix: Matrix):
        if matrix.rows != algebra.dim or matrix.cols != algebra.dim:
            raise ValueError("map matrix must be square of the algebra dimension")
        if matrix.field != algebra.field:
            raise ValueError("map matrix over the wrong field")
        self.algebra = algebra
        self.matrix = matrix

    @classmethod
    def identity(cls, algebra: Algebra) -> "LinearMap":
        return cls(algebra, Matrix.identity(algebra.field, algebra.dim))

    @classmethod
    def zero(cls, algebra: Algebra) -> "LinearMap":
        return cls(algebra, Matrix.zeros(algebra.field, algebra.dim, algebra.dim))

    @classmethod
    def left_multiplication(cls, algebra: Algebra, z: Element) -> "LinearMap":
        return cls(algebra, algebra.left_mult_matrix(z.coords))

    def __call__(self, x: Element) -> Element:
        if x.algebra is not self.algebra:
            raise ValueError("element from a different algebra")
        return Element(self.algebra, self.matrix.matvec(list(x.coords)))

    def __add__(self, other: "LinearMap") -> "LinearMap":
        if other.algebra is not self.algebra:
            raise ValueError("maps on different algebras")
        return LinearMap(self.algebra, self.matrix + other.matrix)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        if other.algebra is not self.algebra:
            raise ValueError("maps on different algebras")
        return LinearMap(self.algebra, self.matrix - other.matrix)

    def __eq__(self, other) -> bool:
        return (isinstance(other, LinearMap) and other.algebra is self.algebra
                and other.matrix == self.matrix)

    __hash__ = None

    def __repr__(self) -> str:
        return f"LinearMap(dim={self.algebra.dim})"


@dataclass
class Decomposition:
    """Certified output of decompose(): phi = L_z + xi, with the lifts that built z."""

    z: Element
    xi: LinearMap
    verified: bool
    z1: Element | None = None
    z2: Element | None = None

    def to_dict(self) -> dict:
        def ser(el):
            return None if el is None else el.to_strings()
        return {
            "z": ser(self.z),
            "z1": ser(self.z1),
            "z2": ser(self.z2),
            "xi": map_to_dict(self.xi),
            "verified": self.verified,
        }


def is_commuting(algebra: Algebra, phi: LinearMap):
    """Whether [phi(x), x] = 0 identically, via the polarized basis conditions.

    Returns (True, None) or (False, (b_i, b_j)) naming a basis pair where
    [phi(b_i), b_j] + [phi(b_j), b_i] != 0.  Over fields of characteristic
    not 2 the pair conditions are equivalent to the identity.
    """
    n = algebra.dim
    images = [phi(algebra.basis_element(i)) for i in range(n)]
    for i in range(n):
        for j in range(i, n):
            s = commutator(images[i], algebra.basis_element(j)) \
                + commutator(images[j], algebra.basis_element(i))
            if not s.is_zero():
                return False, (algebra.basis_element(i), algebra.basis_element(j))
    return True, None


def is_anti_commuting(algebra: Algebra, phi: LinearMap):
    """Whether [phi(x), y] = -[x, phi(y)] for all x, y, checked on basis pairs."""
    n = algebra.dim
    images = [phi(algebra.basis_element(i)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            s = commutator(images[i], algebra.basis_element(j)) \
                + commutator(algebra.basis_element(i), images[j])
            if not s.is_zero():
                return False, (algebra.basis_element(i), algebra.basis_element(j))
    return True, None


def check_decomposition(algebra: Algebra, phi: LinearMap, z: Element,
                        xi: LinearMap) -> bool:
    """Independent verification that phi(x) = z x + xi(x) with the right ranges."""
    if not is_central(algebra, z):
        return False
    for k in range(algebra.dim):
        b = algebra.basis_element(k)
        xk = xi(b)
        if not is_central(algebra, xk):
            return False
        if phi(b) != z * b + xk:
            return False
    return True


def decompose(pd: PeirceData, phi: LinearMap) -> Decomposition:
    """Split a commuting map as phi = L_z + xi with z central, xi center-valued.

    The construction: project phi(e1) and phi(e2) onto the opposite
    diagonal components, lift those projections to central elements z1 and
    z2, and combine with the same-side projections.  Raises when phi is
    not commuting, when the regularity condition fails, or when a lift
    that the theory promises does not exist (each error carries the
    offending element).
    """
    algebra = pd.algebra
    if phi.algebra is not algebra:
        raise ValueError("map on a different algebra")
    ok, witness = is_commuting(algebra, phi)
    if not ok:
        raise NotCommutingError(
            "the map does not commute with its argument", witness=witness)
    (ok1, w1), (ok2, w2) = pd.hypothesis()
    if not ok1:
        raise HypothesisError("the regularity condition fails at e1", witness=w1)
    if not ok2:
        raise HypothesisError("the regularity condition fails at e2", witness=w2)

    c1 = pd.project(2, 2, phi(pd.e1))
    z1 = _lift_or_fail(pd, c1, 2, "the (2,2) projection of phi(e1)")
    c2 = pd.project(1, 1, phi(pd.e2))
    z2 = _lift_or_fail(pd, c2, 1, "the (1,1) projection of phi(e2)")

    z = pd.project(1, 1, phi(pd.e1)) + pd.project(2, 2, phi(pd.e2)) \
        - (z1 * pd.e1 + z2 * pd.e2)
    xi = phi - LinearMap.left_multiplication(algebra, z)
    for k in range(algebra.dim):
        xk = xi(algebra.basis_element(k))
        if not is_central(algebra, xk):
            raise DecompositionError(
                "the residual map is not center-valued", witness=xk)
    if not is_central(algebra, z):
        raise DecompositionError("the combined multiplier is not central", witness=z)
    return Decomposition(z=z, xi=xi, verified=True, z1=z1, z2=z2)


def _lift_or_fail(pd: PeirceData, x: Element, i: int, what: str) -> Element:
    from .peirce import lift_central
    z = lift_central(pd, x, i)
    if z is None:
        raise DecompositionError(f"no central lift exists for {what}", witness=x)
    return z


def decompose_oracle(algebra: Algebra, phi: LinearMap) -> Decomposition | None:
    """Find phi = L_z + xi by linear feasibility, independent of the construction.

    Writes z = sum alpha_c z_c over the central basis and asks that
    phi(b_k) - z b_k be central for every k, which is one linear system in
    the alpha_c.  Returns a verified Decomposition or None when the system
    is infeasible (z1, z2 are left unset: this route never builds lifts).
    """
    if phi.algebra is not algebra:
        raise ValueError("map on a different algebra")
    f = algebra.field
    zb = center(algebra).basis
    M = center_rows(algebra)
    if not zb:
        return None
    if algebra._center_wmats is None:
        algebra._center_wmats = [M @ algebra.left_mult_matrix(z.coords) for z in zb]
    wmats = algebra._center_wmats

    c = len(zb)
    rows = []
    rhs = []
    for k in range(algebra.dim):
        bk = list(algebra.basis_coords(k))
        target = M.matvec(phi.matrix.column(k))
        cols = [w.matvec(bk) for w in wmats]
        for r in range(M.rows):
            rows.append([cols[t][r] for t in range(c)])
            rhs.append(target[r])
    alpha = Matrix(f, rows, cols=c).solve(rhs)
    if alpha is None:
        return None
    coords = [f.zero] * algebra.dim
    for a, zc in zip(alpha, zb):
        if a:
            for k, v in enumerate(zc.coords):
                if v:
                    coords[k] = f.add(coords[k], f.mul(a, v))
    z = Element(algebra, coords)
    xi = phi - LinearMap.left_multiplication(algebra, z)
    if not check_decomposition(algebra, phi, z, xi):
        return None
    return Decomposition(z=z, xi=xi, verified=True)


def random_map_parts(algebra: Algebra, seed: int):
    """A random map phi = L_z + xi in certified form, plus the z and xi used.

    z is an integer combination of the central basis and xi sends each
    basis vector to an integer combination of the central basis, with
    coefficients drawn uniformly from -3..3 by a local random.Random(seed).
    Same seed, same map.
    """
    import random

    rng = random.Random(seed)
    f = algebra.field
    n = algebra.dim
    zb = center(algebra).basis
    zero = [f.zero] * n

    def combo():
        coords = list(zero)
        for zc in zb:
            a = f.from_int(rng.randint(-3, 3))
            if a:
                for k, v in enumerate(zc.coords):
                    if v:
                        coords[k] = f.add(coords[k], f.mul(a, v))
        return coords

    z = Element(algebra, combo())
    xi_cols = [combo() for _ in range(n)]
    xi = LinearMap(algebra, Matrix.from_columns(f, xi_cols, rows=n))
    phi = LinearMap.left_multiplication(algebra, z) + xi
    return phi, z, xi


def random_commuting_map(algebra: Algebra, seed: int) -> LinearMap:
    """A seeded random commuting map (see random_map_parts for the recipe)."""
    return random_map_parts(algebra, seed)[0]


def exhaustive_commuting_check(algebra: Algebra, phi: LinearMap,
                               budget: int = 10 ** 6):
    """Check [phi(x), x] = 0 on every element of a finite-field algebra.

    Complements is_commuting, which trusts the polarization argument; this
    one enumerates every x.  Returns (True, None) or (False, x) with the
    first violating element in enumeration order.
    """
    if phi.algebra is not algebra:
        raise ValueError("map on a different algebra")
    field = algebra.field
    if field.kind != "prime":
        raise ValueError("the exhaustive commutation check needs a finite field")
    import numpy as np

    from . import _modscan
    from .errors import BudgetExceededError

    p, n = field.p, algebra.dim
    if p ** n > budget:
        raise BudgetExceededError(
            f"p^dim = {p ** n} exceeds the enumeration budget {budget}")
    C = _modscan.structure_tensor(algebra)
    F = np.array([[int(v) for v in row] for row in phi.matrix.data], dtype=np.int64)

    for start, X in _modscan.element_chunks(p, n):
        Y = (X @ F.T) % p                                   # rows phi(x)
        com = (np.einsum("mi,mj,ijk->mk", Y, X, C)
               - np.einsum("mi,mj,ijk->mk", X, Y, C)) % p
        bad = np.nonzero(com.any(axis=1))[0]
        if bad.size:
            x = algebra.element([int(v) % p for v in X[bad[0]]])
            if commutator(phi(x), x).is_zero():
                raise AssertionError("inconsistent commutation witness")
            return False, x
    return True, None


def map_to_dict(phi: LinearMap) -> dict:
    return {
        "dim": phi.algebra.dim,
        "matrix": [[phi.algebra.field.fmt(v) for v in row] for row in phi.matrix.data],
    }


def map_from_dict(algebra: Algebra, d: dict) -> LinearMap:
    if d.get("dim") != algebra.dim:
        raise ValueError("map dimension does not match the algebra")
    raw = d.get("matrix")
    if not isinstance(raw, list) or len(raw) != algebra.dim:
        raise ValueError("map matrix must have one row per dimension")
    f = algebra.field
    data = []
    for row in raw:
        if not isinstance(row, list) or len(row) != algebra.dim:
            raise ValueError("map matrix rows must have one entry per dimension")
        data.append([f.parse(str(v)) for v in row])
    return LinearMap(algebra, Matrix(f, data, cols=algebra.dim))


def save_map(phi: LinearMap, path) -> None:
    import json

    with open(path, "w") as fh:
        json.dump(map_to_dict(phi), fh, indent=2)
        fh.write("\n")


def load_map(algebra: Algebra, path) -> LinearMap:
    import json

    with open(path) as fh:
        return map_from_dict(algebra, json.load(fh))
