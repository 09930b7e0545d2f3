"""Idempotent geometry: Peirce decompositions, centers, nuclei and the
regularity conditions that make central lifting work.

A nontrivial idempotent e1 in a unital algebra splits the space into the
four components e_i (x e_j).  Everything this module claims about those
components is computed, not assumed: the projectors are checked to be a
complete orthogonal system, the two bracketings e_i (x e_j) and
(e_i x) e_j are compared before either is trusted, and the multiplication
rules between components are verified relation by relation with witnesses
on failure.
"""

from __future__ import annotations

from .algebra import Algebra, Element, Subspace, commutator, find_unit
from .errors import BudgetExceededError, PreconditionError
from .linalg import Matrix, kernel_from_rref

DEFAULT_BUDGET = 10 ** 6


def verify_idempotent(algebra: Algebra, e: Element) -> bool:
    """True iff e * e = e and e is neither 0 nor the unit (algebra must be unital)."""
    unit = find_unit(algebra)
    if unit is None:
        raise PreconditionError("idempotent checks need a unital algebra")
    if e.algebra is not algebra:
        raise ValueError("idempotent from a different algebra")
    return e * e == e and not e.is_zero() and e != unit


class PeirceData:
    """The four projectors and components attached to an idempotent pair.

    Carries memo caches for the derived data that gets reused heavily:
    the regularity check, the centers of the diagonal components, and the
    central-lift solve matrices.
    """

    def __init__(self, algebra, e1, e2, projectors, components):
        self.algebra = algebra
        self.e1 = e1
        self.e2 = e2
        self.projectors = projectors    # {(i, j): Matrix}
        self.components = components    # {(i, j): Subspace}
        self._hypothesis = None
        self._diag_center = {}
        self._lift_cols = {}
        self._center_via_peirce = None

    def idempotent(self, i: int) -> Element:
        return self.e1 if i == 1 else self.e2

    def project(self, i: int, j: int, x: Element) -> Element:
        return Element(self.algebra, self.projectors[(i, j)].matvec(list(x.coords)))

    def dims(self) -> tuple[int, int, int, int]:
        c = self.components
        return (c[(1, 1)].dim, c[(1, 2)].dim, c[(2, 1)].dim, c[(2, 2)].dim)

    def hypothesis(self):
        """Cached result of hypothesis_check for this idempotent pair."""
        if self._hypothesis is None:
            self._hypothesis = hypothesis_check(self.algebra, self.e1)
        return self._hypothesis

    def diagonal_center(self, i: int) -> Subspace:
        """The center of the (i, i) component as a subalgebra."""
        if i not in self._diag_center:
            comp = self.components[(i, i)]
            cols = [list(el.coords) for el in comp.basis]
            if not cols:
                self._diag_center[i] = Subspace(self.algebra, [])
            else:
                B = Matrix.from_columns(self.algebra.field, cols)
                blocks = []
                for t in comp.basis:
                    Rt = self.algebra.right_mult_matrix(t.coords)
                    Lt = self.algebra.left_mult_matrix(t.coords)
                    blocks.append((Rt - Lt) @ B)
                system = Matrix.stack(self.algebra.field, blocks, cols=comp.dim)
                kernel = system.kernel_basis()
                elems = []
                for gamma in kernel:
                    coords = B.matvec(gamma)
                    elems.append(Element(self.algebra, coords))
                self._diag_center[i] = Subspace.from_spanning(self.algebra, elems)
        return self._diag_center[i]

    def lift_columns(self, i: int) -> Matrix:
        """Columns z_c . e_i for the central basis, the solve matrix for lifting."""
        if i not in self._lift_cols:
            zb = center(self.algebra).basis
            e_i = self.idempotent(i)
            cols = [list((z * e_i).coords) for z in zb]
            self._lift_cols[i] = Matrix.from_columns(self.algebra.field, cols,
                                                     rows=self.algebra.dim)
        return self._lift_cols[i]


def peirce_decompose(algebra: Algebra, e1: Element) -> PeirceData:
    """Split the algebra along a verified nontrivial idempotent.

    Raises PreconditionError if the algebra is not unital, e1 is not a
    nontrivial idempotent, or the two bracketings e_i (x e_j) and
    (e_i x) e_j disagree (which flags a non-alternative input).
    """
    unit = find_unit(algebra)
    if unit is None:
        raise PreconditionError("Peirce decomposition needs a unital algebra")
    if not verify_idempotent(algebra, e1):
        raise PreconditionError("e1 is not a nontrivial idempotent", witness=e1)
    e2 = unit - e1
    f = algebra.field
    n = algebra.dim

    L = {1: algebra.left_mult_matrix(e1.coords), 2: algebra.left_mult_matrix(e2.coords)}
    R = {1: algebra.right_mult_matrix(e1.coords), 2: algebra.right_mult_matrix(e2.coords)}
    projectors = {}
    for i in (1, 2):
        for j in (1, 2):
            P = L[i] @ R[j]
            if P != R[j] @ L[i]:
                raise PreconditionError(
                    "e_i (x e_j) and (e_i x) e_j disagree; "
                    "the algebra is not alternative enough to split")
            projectors[(i, j)] = P

    total = projectors[(1, 1)] + projectors[(1, 2)] + projectors[(2, 1)] + projectors[(2, 2)]
    if total != Matrix.identity(f, n):
        raise PreconditionError("Peirce projectors do not sum to the identity")
    keys = list(projectors)
    for a in keys:
        for b in keys:
            prod = projectors[a] @ projectors[b]
            expected = projectors[a] if a == b else Matrix.zeros(f, n, n)
            if prod != expected:
                raise PreconditionError(f"Peirce projectors {a} and {b} are not orthogonal")

    components = {}
    for key, P in projectors.items():
        reduced, pivots = P.transpose().rref()
        rows = reduced.data[: len(pivots)]
        basis = [Element(algebra, r) for r in rows]
        components[key] = Subspace(algebra, basis,
                                   _echelon=([list(r) for r in rows], pivots))
    if sum(components[k].dim for k in components) != n:
        raise PreconditionError("Peirce component dimensions do not sum to the dimension")
    return PeirceData(algebra, e1, e2, projectors, components)


def check_peirce_relations(pd: PeirceData) -> list[dict]:
    """Verify the multiplication rules between components, with witnesses.

    Checks, for all index choices: (i) r_ij r_jl inside r_il, (ii)
    r_ij r_ij inside r_ji, (iii) r_ij r_kl = 0 when j != k and
    (i, j) != (k, l), and (iv) squares vanish in the off-diagonal
    components, via x^2 = 0 on basis vectors plus the linearized form
    xy + yx = 0 on basis pairs.
    """
    comp = pd.components
    report = []

    def fail(entry, **kw):
        entry["pass"] = False
        if "witness" not in entry:
            entry["witness"] = kw

    for i in (1, 2):
        for j in (1, 2):
            for l in (1, 2):
                entry = {"check": f"(i) r{i}{j}.r{j}{l} in r{i}{l}", "pass": True}
                for x in comp[(i, j)].basis:
                    for y in comp[(j, l)].basis:
                        if not comp[(i, l)].contains(x * y):
                            fail(entry, x=x.to_strings(), y=y.to_strings(),
                                 product=(x * y).to_strings())
                report.append(entry)

    for i in (1, 2):
        for j in (1, 2):
            entry = {"check": f"(ii) r{i}{j}.r{i}{j} in r{j}{i}", "pass": True}
            for x in comp[(i, j)].basis:
                for y in comp[(i, j)].basis:
                    if not comp[(j, i)].contains(x * y):
                        fail(entry, x=x.to_strings(), y=y.to_strings(),
                             product=(x * y).to_strings())
            report.append(entry)

    for i in (1, 2):
        for j in (1, 2):
            for k in (1, 2):
                for l in (1, 2):
                    if j == k or (i, j) == (k, l):
                        continue
                    entry = {"check": f"(iii) r{i}{j}.r{k}{l} = 0", "pass": True}
                    for x in comp[(i, j)].basis:
                        for y in comp[(k, l)].basis:
                            if not (x * y).is_zero():
                                fail(entry, x=x.to_strings(), y=y.to_strings(),
                                     product=(x * y).to_strings())
                    report.append(entry)

    for (i, j) in ((1, 2), (2, 1)):
        entry = {"check": f"(iv) squares vanish in r{i}{j}", "pass": True}
        basis = comp[(i, j)].basis
        for x in basis:
            if not (x * x).is_zero():
                fail(entry, x=x.to_strings(), square=(x * x).to_strings())
        for a in range(len(basis)):
            for b in range(a + 1, len(basis)):
                s = basis[a] * basis[b] + basis[b] * basis[a]
                if not s.is_zero():
                    fail(entry, x=basis[a].to_strings(), y=basis[b].to_strings(),
                         anticommutator=s.to_strings())
        report.append(entry)
    return report


# ----------------------------------------------------------------------
# center and nucleus


def center(algebra: Algebra) -> Subspace:
    """Elements commuting with the whole algebra; cached on the algebra.

    Also caches the reduced row system used for fast membership tests.
    """
    if algebra._center is None:
        f = algebra.field
        n = algebra.dim
        blocks = []
        for t in range(n):
            block = [[f.zero] * n for _ in range(n)]
            for u in range(n):
                ut = algebra.basis_product(u, t)
                tu = algebra.basis_product(t, u)
                for k in range(n):
                    block[k][u] = f.sub(ut[k], tu[k])
            blocks.append(block)
        system = Matrix.stack(f, blocks, cols=n)
        reduced, pivots = system.rref()
        kernel = kernel_from_rref(f, reduced, pivots)
        algebra._center_rows = Matrix(f, reduced.data[: len(pivots)], cols=n)
        algebra._center = Subspace(algebra, [Element(algebra, v) for v in kernel])
    return algebra._center


def center_rows(algebra: Algebra) -> Matrix:
    """Reduced membership system for the center: x is central iff rows @ x = 0."""
    center(algebra)
    return algebra._center_rows


def is_central(algebra: Algebra, x: Element) -> bool:
    return not any(center_rows(algebra).matvec(list(x.coords)))


def nucleus(algebra: Algebra) -> Subspace:
    """Elements associating with everything, computed from basis associator conditions."""
    if algebra._nucleus is None:
        f = algebra.field
        n = algebra.dim
        bp = algebra.basis_product
        bc = algebra.basis_coords
        mul = algebra.mul_coords

        def assoc(s, t, u):
            left = mul(bp(s, t), bc(u))
            right = mul(bc(s), bp(t, u))
            return [f.sub(a, b) for a, b in zip(left, right)]

        blocks = []
        for s in range(n):
            for t in range(n):
                b1 = [[f.zero] * n for _ in range(n)]
                b2 = [[f.zero] * n for _ in range(n)]
                b3 = [[f.zero] * n for _ in range(n)]
                for u in range(n):
                    for k, val in enumerate(assoc(s, t, u)):
                        b1[k][u] = val           # (b_s, b_t, r)
                    for k, val in enumerate(assoc(s, u, t)):
                        b2[k][u] = val           # (b_s, r, b_t)
                    for k, val in enumerate(assoc(u, s, t)):
                        b3[k][u] = val           # (r, b_s, b_t)
                blocks.extend((b1, b2, b3))
        system = Matrix.stack(f, blocks, cols=n)
        kernel = system.kernel_basis()
        algebra._nucleus = Subspace(algebra, [Element(algebra, v) for v in kernel])
    return algebra._nucleus


def center_via_peirce(pd: PeirceData) -> Subspace:
    """The center recomputed from the idempotent splitting.

    Takes the diagonal part r11 + r22 and keeps what commutes with both
    off-diagonal components.  Requires the regularity condition; without
    it the characterization is not valid, so this raises.
    """
    (ok1, _), (ok2, _) = pd.hypothesis()
    if not (ok1 and ok2):
        raise PreconditionError(
            "the Peirce characterization of the center needs the regularity "
            "condition for both idempotents")
    algebra = pd.algebra
    if pd._center_via_peirce is not None:
        return pd._center_via_peirce
    f = algebra.field
    diag = list(pd.components[(1, 1)].basis) + list(pd.components[(2, 2)].basis)
    off = list(pd.components[(1, 2)].basis) + list(pd.components[(2, 1)].basis)
    if not diag:
        result = Subspace(algebra, [])
    elif not off:
        result = Subspace.from_spanning(algebra, diag)
    else:
        blocks = []
        for u in off:
            block = [[f.zero] * len(diag) for _ in range(algebra.dim)]
            for t, bt in enumerate(diag):
                com = commutator(bt, u)
                for k, val in enumerate(com.coords):
                    block[k][t] = val
            blocks.append(block)
        system = Matrix.stack(f, blocks, cols=len(diag))
        elems = []
        for gamma in system.kernel_basis():
            coords = [f.zero] * algebra.dim
            for t, g in enumerate(gamma):
                if g:
                    for k, c in enumerate(diag[t].coords):
                        if c:
                            coords[k] = f.add(coords[k], f.mul(g, c))
            elems.append(Element(algebra, coords))
        result = Subspace.from_spanning(algebra, elems)
    pd._center_via_peirce = result
    return result


# ----------------------------------------------------------------------
# regularity and lifting


def hypothesis_check(algebra: Algebra, e1: Element):
    """The regularity condition: only 0 multiplies the algebra into each annihilator.

    For each of e1 and e2 = 1 - e1, computes the kernel
    {x : (x . b_k) . e_i = 0 for every basis vector b_k} and reports
    ((ok1, witness1), (ok2, witness2)), where the witness is a nonzero
    kernel element when the check fails.
    """
    unit = find_unit(algebra)
    if unit is None:
        raise PreconditionError("the regularity check needs a unital algebra")
    if not verify_idempotent(algebra, e1):
        raise PreconditionError("e1 is not a nontrivial idempotent", witness=e1)
    f = algebra.field
    n = algebra.dim
    results = []
    for e in (e1, unit - e1):
        e_coords = e.coords
        blocks = []
        for k in range(n):
            block = [[f.zero] * n for _ in range(n)]
            for u in range(n):
                prod = algebra.mul_coords(algebra.basis_product(u, k), e_coords)
                for r, val in enumerate(prod):
                    block[r][u] = val
            blocks.append(block)
        kernel = Matrix.stack(f, blocks, cols=n).kernel_basis()
        if kernel:
            results.append((False, Element(algebra, kernel[0])))
        else:
            results.append((True, None))
    return tuple(results)


def lift_central(pd: PeirceData, x: Element, i: int) -> Element | None:
    """A central z with z . e_i = x, or None when no such lift exists.

    x must lie in the (i, i) component and commute with it; both
    preconditions are verified.  The solve is deterministic, so equal
    inputs produce the identical lift.
    """
    if i not in (1, 2):
        raise ValueError("component index must be 1 or 2")
    comp = pd.components[(i, i)]
    if not comp.contains(x):
        raise PreconditionError("element to lift is not in the diagonal component",
                                witness=x)
    for t in comp.basis:
        c = commutator(x, t)
        if not c.is_zero():
            raise PreconditionError(
                "element to lift is not central in its component", witness=(x, t))
    zb = center(pd.algebra).basis
    if not zb:
        return None
    alpha = pd.lift_columns(i).solve(list(x.coords))
    if alpha is None:
        return None
    f = pd.algebra.field
    coords = [f.zero] * pd.algebra.dim
    for a, z in zip(alpha, zb):
        if a:
            for k, c in enumerate(z.coords):
                if c:
                    coords[k] = f.add(coords[k], f.mul(a, c))
    return Element(pd.algebra, coords)


# ----------------------------------------------------------------------
# exhaustive primeness scan


def prime_check_exhaustive(algebra: Algebra, budget: int = DEFAULT_BUDGET):
    """Search for a pair of nonzero a, b with (a x) b = 0 for every x.

    Finite fields only.  The outer scan runs over projective
    representatives of a (the condition is homogeneous in a); for each,
    the inner condition is linear in b, so it is a kernel computation,
    not an enumeration.  Returns (True, None) when no pair exists, or
    (False, (a, b)) with the first pair in enumeration order.

    For unital algebras, a candidate a with invertible left multiplication
    cannot work (taking x = 1 forces a b = 0), which lets a cheap batched
    rank test discard most candidates before the full kernel is formed.
    """
    field = algebra.field
    if field.kind != "prime":
        raise ValueError("the exhaustive primeness scan needs a finite field")
    import numpy as np

    from . import _modscan

    p, n = field.p, algebra.dim
    if p ** n > budget:
        raise BudgetExceededError(
            f"p^dim = {p ** n} exceeds the enumeration budget {budget}")
    C = _modscan.structure_tensor(algebra)
    inv_table = _modscan.inverse_table(p)
    unital = find_unit(algebra) is not None

    for block in _modscan.projective_chunks(p, n):
        if unital:
            LA = np.einsum("mi,ijk->mkj", block, C) % p
            ranks = _modscan.batched_rank(LA, p, inv_table)
            cand = block[ranks < n]
        else:
            cand = block
        if cand.shape[0] == 0:
            continue
        P = np.einsum("mi,ikl->mkl", cand, C) % p          # rows of a . b_k
        T = np.einsum("mki,ijl->mklj", P, C) % p           # stacked left-mult blocks
        T = T.reshape(cand.shape[0], n * n, n)
        ranks2 = _modscan.batched_rank(T, p, inv_table)
        bad = np.nonzero(ranks2 < n)[0]
        if bad.size:
            a = algebra.element([int(v) % p for v in cand[bad[0]]])
            blocks = []
            for k in range(n):
                prod = algebra.mul_coords(a.coords, algebra.basis_coords(k))
                blocks.append(algebra.left_mult_matrix(prod))
            kernel = Matrix.stack(field, blocks, cols=n).kernel_basis()
            b = Element(algebra, kernel[0])
            for k in range(n):
                prod = algebra.mul_coords(a.coords, algebra.basis_coords(k))
                if any(algebra.mul_coords(prod, b.coords)):
                    raise AssertionError("inconsistent primeness witness")
            return False, (a, b)
    return True, None
