"""The step-by-step facts behind the decomposition, each run as a check.

Every lemma function evaluates its equations exactly on the relevant
basis vectors of the Peirce components and reports pass/fail with a
witness on failure.  Existence statements ("there is a central z with
...") become linear feasibility problems over the central basis, so an
infeasible system is a failure, not an exception.

All nine checks assume a commuting map and the regularity condition;
run_lemma and run_all verify both and report not-applicable when either
fails, so a lemma is never asserted outside its hypotheses.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Element, commutator, find_unit
from .commuting import LinearMap, is_commuting
from .errors import PreconditionError
from .linalg import Matrix
from .peirce import PeirceData, center, center_rows, center_via_peirce, is_central, lift_central

LEMMA_IDS = ("L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8", "L9")


@dataclass
class LemmaReport:
    lemma_id: str
    status: str                 # "pass" | "fail" | "not-applicable"
    witness: dict | None
    notes: str

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "status": self.status,
            "witness": self.witness,
            "notes": self.notes,
        }


def _gate(pd: PeirceData, phi: LinearMap):
    """Reason the suite does not apply, or None when it does."""
    ok, pair = is_commuting(pd.algebra, phi)
    if not ok:
        return ("the map is not commuting",
                {"x": pair[0].to_strings(), "y": pair[1].to_strings(),
                 "equation": "[phi(x), y] + [phi(y), x] = 0"})
    (ok1, w1), (ok2, w2) = pd.hypothesis()
    if not ok1:
        return ("the regularity condition fails at e1",
                {"kernel_element": w1.to_strings()})
    if not ok2:
        return ("the regularity condition fails at e2",
                {"kernel_element": w2.to_strings()})
    return None


def run_lemma(lemma_id: str, pd: PeirceData, phi: LinearMap) -> LemmaReport:
    if lemma_id not in LEMMA_IDS:
        raise ValueError(f"unknown lemma id {lemma_id!r}")
    blocked = _gate(pd, phi)
    if blocked is not None:
        reason, witness = blocked
        return LemmaReport(lemma_id, "not-applicable", witness,
                           f"not applicable: {reason}")
    ok, witness, notes = _EVALS[lemma_id](pd, phi)
    return LemmaReport(lemma_id, "pass" if ok else "fail", witness, notes)


def run_all(pd: PeirceData, phi: LinearMap) -> list[LemmaReport]:
    """All nine reports in order; every lemma is evaluated even after failures."""
    blocked = _gate(pd, phi)
    if blocked is not None:
        reason, witness = blocked
        return [LemmaReport(lid, "not-applicable", witness,
                            f"not applicable: {reason}")
                for lid in LEMMA_IDS]
    reports = []
    for lid in LEMMA_IDS:
        ok, witness, notes = _EVALS[lid](pd, phi)
        reports.append(LemmaReport(lid, "pass" if ok else "fail", witness, notes))
    return reports


# ----------------------------------------------------------------------
# helpers


def _n(count: int, noun: str) -> str:
    return f"{count} {noun}" + ("" if count == 1 else "s")


def _try_lift(pd: PeirceData, x: Element, i: int):
    """lift_central with preconditions reported instead of raised."""
    try:
        z = lift_central(pd, x, i)
    except PreconditionError as exc:
        return None, str(exc)
    if z is None:
        return None, "no central lift exists"
    return z, None


def _lift_failure(x: Element, i: int, problem: str) -> dict:
    return {"equation": f"z . e{i} = x for central z",
            "x": x.to_strings(), "problem": problem}


def _off_diagonal_zero(pd: PeirceData, y: Element):
    """The off-diagonal projections of y, when nonzero."""
    for (i, j) in ((1, 2), (2, 1)):
        part = pd.project(i, j, y)
        if not part.is_zero():
            return (i, j), part
    return None, None


def _center_combination(pd: PeirceData, alpha) -> Element:
    f = pd.algebra.field
    coords = [f.zero] * pd.algebra.dim
    for a, zc in zip(alpha, center(pd.algebra).basis):
        if a:
            for k, v in enumerate(zc.coords):
                if v:
                    coords[k] = f.add(coords[k], f.mul(a, v))
    return Element(pd.algebra, coords)


# ----------------------------------------------------------------------
# the nine checks


def _eval_l1(pd: PeirceData, phi: LinearMap):
    """The center equals its description through the idempotent splitting."""
    direct = center(pd.algebra)
    via = center_via_peirce(pd)
    if via == direct:
        return True, None, (f"center dimension {direct.dim} agrees between the "
                            "direct computation and the Peirce description")
    witness = {
        "equation": "center == diagonal elements commuting with r12 + r21",
        "direct_basis": [z.to_strings() for z in direct.basis],
        "peirce_basis": [z.to_strings() for z in via.basis],
    }
    return False, witness, "the two center computations disagree"


def _eval_l2(pd: PeirceData, phi: LinearMap):
    """Every central element of a diagonal component lifts to a central element."""
    counts = []
    for i in (1, 2):
        zc = pd.diagonal_center(i)
        counts.append(_n(zc.dim, "central vector") + f" of r{i}{i}")
        for x in zc.basis:
            z, problem = _try_lift(pd, x, i)
            if z is None:
                return False, _lift_failure(x, i, problem), \
                    f"lift failed in component ({i},{i})"
    return True, None, "lifted " + " and ".join(counts)


def _eval_l3(pd: PeirceData, phi: LinearMap):
    """phi fixes the diagonal at the unit and idempotents, and phi(1) lifts there."""
    unit = find_unit(pd.algebra)
    for name, y in (("1", unit), ("e1", pd.e1), ("e2", pd.e2)):
        key, part = _off_diagonal_zero(pd, phi(y))
        if key is not None:
            witness = {"equation": f"P{key[0]}{key[1]}(phi({name})) = 0",
                       "projection": part.to_strings()}
            return False, witness, f"phi({name}) has an off-diagonal part"
    f1 = phi(unit)
    for i in (1, 2):
        x = pd.project(i, i, f1)
        z, problem = _try_lift(pd, x, i)
        if z is None:
            return False, _lift_failure(x, i, problem), \
                f"the ({i},{i}) part of phi(1) does not lift"
    return True, None, "evaluated phi at 1, e1, e2; lifted both diagonal parts of phi(1)"


def _eval_l4(pd: PeirceData, phi: LinearMap):
    """On diagonal components phi stays diagonal and the opposite part lifts."""
    evaluated = []
    for i in (1, 2):
        j = 3 - i
        basis = pd.components[(i, i)].basis
        evaluated.append(_n(len(basis), "basis vector") + f" of r{i}{i}")
        for x in basis:
            fx = phi(x)
            key, part = _off_diagonal_zero(pd, fx)
            if key is not None:
                witness = {"equation": f"P{key[0]}{key[1]}(phi(x)) = 0 for x in r{i}{i}",
                           "x": x.to_strings(), "projection": part.to_strings()}
                return False, witness, f"phi of a vector in r{i}{i} leaves the diagonal"
            part = pd.project(j, j, fx)
            z, problem = _try_lift(pd, part, j)
            if z is None:
                witness = _lift_failure(part, j, problem)
                witness["x"] = x.to_strings()
                return False, witness, \
                    f"the ({j},{j}) part of phi(x), x in r{i}{i}, does not lift"
    return True, None, "evaluated " + " and ".join(evaluated)


def _eval_l5(pd: PeirceData, phi: LinearMap):
    """The four off-diagonal facts: where phi(x) lives and how it is controlled."""
    evaluated = []
    for (i, j) in ((1, 2), (2, 1)):
        basis = pd.components[(i, j)].basis
        evaluated.append(_n(len(basis), "basis vector") + f" of r{i}{j}")
        ei, ej = pd.idempotent(i), pd.idempotent(j)
        di = pd.project(i, i, phi(ei)) + pd.project(j, j, phi(ei))
        dj = pd.project(j, j, phi(ej)) + pd.project(i, i, phi(ej))
        for x in basis:
            fx = phi(x)
            part = pd.project(j, i, fx)
            if not part.is_zero():
                witness = {"equation": f"P{j}{i}(phi(x)) = 0 for x in r{i}{j}",
                           "x": x.to_strings(), "projection": part.to_strings()}
                return False, witness, "(i) fails"
            expected = commutator(di, x)
            got = pd.project(i, j, fx)
            if got != expected:
                witness = {"equation": f"P{i}{j}(phi(x)) = [P{i}{i}(phi(e{i})) + "
                                       f"P{j}{j}(phi(e{i})), x]",
                           "x": x.to_strings(), "left": got.to_strings(),
                           "right": expected.to_strings()}
                return False, witness, "(ii) fails"
            if got != -commutator(dj, x):
                witness = {"equation": f"P{i}{j}(phi(x)) = -[P{j}{j}(phi(e{j})) + "
                                       f"P{i}{i}(phi(e{j})), x]",
                           "x": x.to_strings(), "left": got.to_strings(),
                           "right": (-commutator(dj, x)).to_strings()}
                return False, witness, "(ii) fails"
            diag = pd.project(i, i, fx) + pd.project(j, j, fx)
            c = commutator(diag, x)
            if not c.is_zero():
                witness = {"equation": f"[P{i}{i}(phi(x)) + P{j}{j}(phi(x)), x] = 0",
                           "x": x.to_strings(), "commutator": c.to_strings()}
                return False, witness, "(iii) fails"
            for (idx, part) in ((i, pd.project(i, i, fx)), (j, pd.project(j, j, fx))):
                z, problem = _try_lift(pd, part, idx)
                if z is None:
                    witness = _lift_failure(part, idx, problem)
                    witness["x"] = x.to_strings()
                    return False, witness, "(iv) fails"
    return True, None, "evaluated (i)-(iv) on " + " and ".join(evaluated)


def _eval_l6(pd: PeirceData, phi: LinearMap):
    """The unit's image is central."""
    unit = find_unit(pd.algebra)
    f1 = phi(unit)
    if is_central(pd.algebra, f1):
        return True, None, "phi(1) lies in the center"
    return False, {"equation": "phi(1) in Z", "phi(1)": f1.to_strings()}, \
        "phi(1) is not central"


def _eval_l7(pd: PeirceData, phi: LinearMap):
    """Central z, z' exist making P11(phi(e1)) + P22(phi(e2)) - (z e1 + z' e2) central."""
    algebra = pd.algebra
    f = algebra.field
    M = center_rows(algebra)
    zb = center(algebra).basis
    v = pd.project(1, 1, phi(pd.e1)) + pd.project(2, 2, phi(pd.e2))
    rhs = M.matvec(list(v.coords))
    cols = []
    for e in (pd.e1, pd.e2):
        for zc in zb:
            cols.append(M.matvec(list((zc * e).coords)))
    system = Matrix.from_columns(f, cols, rows=M.rows)
    solution = system.solve(rhs)
    if solution is None:
        witness = {"equation": "P11(phi(e1)) + P22(phi(e2)) - (z e1 + z' e2) in Z"
                               " for central z, z'",
                   "target": v.to_strings(), "problem": "the linear system is infeasible"}
        return False, witness, f"no solution over {2 * len(zb)} central coefficients"
    return True, None, "solved for z, z' over " + _n(len(zb), "central basis vector") + " each"


def _eval_l8(pd: PeirceData, phi: LinearMap):
    """Diagonal parts of phi on r_ij commute with the opposite component."""
    pairs = 0
    for (i, j) in ((1, 2), (2, 1)):
        for x in pd.components[(i, j)].basis:
            fx = phi(x)
            diag = pd.project(1, 1, fx) + pd.project(2, 2, fx)
            for y in pd.components[(j, i)].basis:
                pairs += 1
                c = commutator(diag, y)
                if not c.is_zero():
                    witness = {"equation": f"[P11(phi(x)) + P22(phi(x)), y] = 0, "
                                           f"x in r{i}{j}, y in r{j}{i}",
                               "x": x.to_strings(), "y": y.to_strings(),
                               "commutator": c.to_strings()}
                    return False, witness, "a diagonal part fails to commute"
    return True, None, "evaluated " + _n(pairs, "basis pair") + " across both off-diagonal components"


def _eval_l9(pd: PeirceData, phi: LinearMap):
    """Diagonal parts of phi on r_ij are central; on r_ii phi is affine in x."""
    algebra = pd.algebra
    f = algebra.field
    instances = []
    for (i, j) in ((1, 2), (2, 1)):
        basis = pd.components[(i, j)].basis
        instances.append(_n(len(basis), "vector") + f" of r{i}{j}")
        for x in basis:
            fx = phi(x)
            diag = pd.project(1, 1, fx) + pd.project(2, 2, fx)
            for r in range(algebra.dim):
                br = algebra.basis_element(r)
                c = commutator(diag, br)
                if not c.is_zero():
                    witness = {"equation": f"[P11(phi(x)) + P22(phi(x)), b] = 0, "
                                           f"x in r{i}{j}",
                               "x": x.to_strings(), "b": br.to_strings(),
                               "commutator": c.to_strings()}
                    return False, witness, "a diagonal part is not central"

    zb = center(algebra).basis
    for i in (1, 2):
        e_i = pd.idempotent(i)
        pe = pd.project(i, i, phi(e_i))
        basis = pd.components[(i, i)].basis
        instances.append(_n(len(basis), "vector") + f" of r{i}{i}")
        for x in basis:
            px = pd.project(i, i, phi(x))
            rhs_el = px - pe * x
            cols = [list((zc * e_i).coords) for zc in zb]
            cols += [[f.neg(c) for c in ((zc * e_i) * x).coords] for zc in zb]
            system = Matrix.from_columns(f, cols, rows=algebra.dim)
            if system.solve(list(rhs_el.coords)) is None:
                witness = {"equation": f"P{i}{i}(phi(x)) = z e{i} + "
                                       f"(P{i}{i}(phi(e{i})) - z' e{i}) x "
                                       "for central z, z'",
                           "x": x.to_strings(),
                           "problem": "the linear system is infeasible"}
                return False, witness, f"no affine form in component ({i},{i})"
    return True, None, "evaluated " + ", ".join(instances)


_EVALS = {
    "L1": _eval_l1,
    "L2": _eval_l2,
    "L3": _eval_l3,
    "L4": _eval_l4,
    "L5": _eval_l5,
    "L6": _eval_l6,
    "L7": _eval_l7,
    "L8": _eval_l8,
    "L9": _eval_l9,
}
