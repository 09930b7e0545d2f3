"""Commuting maps: detection, decomposition, the solver oracle, serialization."""

import json
from fractions import Fraction

import pytest

from altcomm import (LinearMap, Matrix, NotCommutingError, PrimeField, RationalField,
                     check_decomposition, decompose, decompose_oracle,
                     exhaustive_commuting_check, find_unit, is_anti_commuting,
                     is_central, is_commuting, load_map, map_from_dict, map_to_dict,
                     random_commuting_map, random_map_parts, save_map)

Q = RationalField()
F5 = PrimeField(5)
ZERO = Fraction(0)
ONE = Fraction(1)


def trace_map(algebra):
    """x -> tr(x) 1 on a matrix algebra given in the E_ij basis order."""
    import math
    n = math.isqrt(algebra.dim)
    assert n * n == algebra.dim
    unit = find_unit(algebra)
    cols = []
    for i in range(n):
        for j in range(n):
            cols.append(list(unit.coords) if i == j
                        else [ZERO] * algebra.dim)
    return LinearMap(algebra, Matrix.from_columns(Q, cols))


def transpose_map(algebra):
    import math
    n = math.isqrt(algebra.dim)
    cols = []
    for i in range(n):
        for j in range(n):
            c = [ZERO] * algebra.dim
            c[j * n + i] = ONE
            cols.append(c)
    return LinearMap(algebra, Matrix.from_columns(algebra.field, cols))


# ----------------------------------------------------------------------
# LinearMap basics


def test_linear_map_arithmetic(m2q):
    algebra, e11 = m2q
    ident = LinearMap.identity(algebra)
    zero = LinearMap.zero(algebra)
    assert ident + zero == ident
    assert ident - ident == zero
    assert ident(e11) == e11
    left = LinearMap.left_multiplication(algebra, e11)
    e12 = algebra.basis_element(1)
    assert left(e12) == e11 * e12


def test_linear_map_validation(m2q, zornq):
    algebra, e11 = m2q
    other, _ = zornq
    with pytest.raises(ValueError):
        LinearMap(algebra, Matrix.identity(Q, 3))
    with pytest.raises(ValueError):
        LinearMap(algebra, Matrix.identity(F5, 4))
    with pytest.raises(ValueError):
        LinearMap.identity(algebra) + LinearMap.identity(other)
    with pytest.raises(ValueError):
        LinearMap.identity(algebra)(find_unit(other))


# ----------------------------------------------------------------------
# detection


def test_identity_and_trace_commute(m2q):
    algebra, _ = m2q
    for phi in (LinearMap.identity(algebra), trace_map(algebra),
                LinearMap.zero(algebra)):
        ok, witness = is_commuting(algebra, phi)
        assert ok and witness is None


def test_transpose_does_not_commute(m2q):
    algebra, _ = m2q
    ok, (x, y) = is_commuting(algebra, transpose_map(algebra))
    assert not ok
    assert x.to_strings() == ["1", "0", "0", "0"]
    assert y.to_strings() == ["0", "1", "0", "0"]
    # the witness is genuine: phi([x, y]) differs from [phi(x), y]
    phi = transpose_map(algebra)
    assert phi(x) * y - y * phi(x) != phi(x * y - y * x)


def test_anti_commuting_detection(m2q):
    algebra, _ = m2q
    zero = LinearMap.zero(algebra)
    ok, witness = is_anti_commuting(algebra, zero)
    assert ok and witness is None
    ok, witness = is_anti_commuting(algebra, LinearMap.identity(algebra))
    assert not ok and witness is not None


def test_left_multiplication_by_central_commutes(zornq):
    algebra, _ = zornq
    z = find_unit(algebra).scale(Fraction(7, 2))
    ok, _ = is_commuting(algebra, LinearMap.left_multiplication(algebra, z))
    assert ok


# ----------------------------------------------------------------------
# frozen decompositions on the 2x2 matrix algebra


def test_decompose_identity(m2q_pd):
    pd = m2q_pd
    algebra = pd.algebra
    dec = decompose(pd, LinearMap.identity(algebra))
    assert dec.verified
    assert dec.z == find_unit(algebra)
    assert dec.z.to_strings() == ["1", "0", "0", "1"]
    assert dec.z1.is_zero() and dec.z2.is_zero()
    assert dec.xi == LinearMap.zero(algebra)


def test_decompose_trace(m2q_pd):
    pd = m2q_pd
    algebra = pd.algebra
    tr = trace_map(algebra)
    dec = decompose(pd, tr)
    assert dec.verified
    assert dec.z.is_zero()
    assert dec.z1 == find_unit(algebra)
    assert dec.z2 == find_unit(algebra)
    assert dec.xi == tr


def test_decompose_identity_plus_trace(m2q_pd):
    pd = m2q_pd
    algebra = pd.algebra
    tr = trace_map(algebra)
    phi = LinearMap.identity(algebra) + LinearMap.identity(algebra) + tr
    dec = decompose(pd, phi)
    assert dec.verified
    assert dec.z.to_strings() == ["2", "0", "0", "2"]
    assert dec.xi == tr
    # reconstruction by hand
    for k in range(algebra.dim):
        b = algebra.basis_element(k)
        assert phi(b) == dec.z * b + dec.xi(b)


def test_decompose_rejects_non_commuting(m2q_pd):
    with pytest.raises(NotCommutingError) as exc:
        decompose(m2q_pd, transpose_map(m2q_pd.algebra))
    x, y = exc.value.witness
    assert x.to_strings() == ["1", "0", "0", "0"]
    assert y.to_strings() == ["0", "1", "0", "0"]


def test_oracle_rejects_non_commuting(m2q):
    algebra, _ = m2q
    assert decompose_oracle(algebra, transpose_map(algebra)) is None


def test_check_decomposition(m2q):
    algebra, e11 = m2q
    unit = find_unit(algebra)
    tr = trace_map(algebra)
    phi = LinearMap.left_multiplication(algebra, unit.scale(2)) + tr
    assert check_decomposition(algebra, phi, unit.scale(2), tr)
    assert not check_decomposition(algebra, phi, unit, tr)  # wrong z
    assert not check_decomposition(algebra, phi, e11.scale(2), tr)  # non-central z
    assert not check_decomposition(
        algebra, phi, unit.scale(2), LinearMap.identity(algebra))  # non-central range


# ----------------------------------------------------------------------
# random generators and oracle agreement


def test_random_map_is_deterministic(zornq):
    algebra, _ = zornq
    a = random_commuting_map(algebra, seed=11)
    b = random_commuting_map(algebra, seed=11)
    c = random_commuting_map(algebra, seed=12)
    assert a == b
    assert a != c


def test_random_parts_are_central(m3q):
    algebra, _ = m3q
    for seed in range(6):
        phi, z, xi = random_map_parts(algebra, seed)
        assert is_central(algebra, z)
        for k in range(algebra.dim):
            assert is_central(algebra, xi(algebra.basis_element(k)))
        assert phi == LinearMap.left_multiplication(algebra, z) + xi
        ok, _ = is_commuting(algebra, phi)
        assert ok


def test_construction_agrees_with_oracle(m2q_pd, m3q_pd, zornq_pd, m2f5_pd, zornf5_pd):
    """Two independent routes to z and xi must describe the same map."""
    for pd in (m2q_pd, m3q_pd, zornq_pd, m2f5_pd, zornf5_pd):
        algebra = pd.algebra
        for seed in range(8):
            phi = random_commuting_map(algebra, seed)
            built = decompose(pd, phi)
            solved = decompose_oracle(algebra, phi)
            assert built.verified
            assert solved is not None and solved.verified
            # z may differ by a central summand only when xi absorbs it;
            # both must reconstruct phi exactly
            for k in range(algebra.dim):
                b = algebra.basis_element(k)
                assert built.z * b + built.xi(b) == phi(b)
                assert solved.z * b + solved.xi(b) == phi(b)
            assert is_central(algebra, built.z - solved.z)


def test_decomposition_to_dict(m2q_pd):
    dec = decompose(m2q_pd, LinearMap.identity(m2q_pd.algebra))
    d = dec.to_dict()
    assert d["verified"] is True
    assert d["z"] == ["1", "0", "0", "1"]
    assert d["z1"] == ["0", "0", "0", "0"]
    assert len(d["xi"]["matrix"]) == 4


# ----------------------------------------------------------------------
# exhaustive check over a finite field


def test_exhaustive_agrees_with_bilinear_check(m2f5):
    algebra, e11 = m2f5
    maps = [random_commuting_map(algebra, s) for s in range(4)]
    maps += [LinearMap.identity(algebra), transpose_map(algebra),
             LinearMap.left_multiplication(algebra, e11)]
    for phi in maps:
        fast, _ = is_commuting(algebra, phi)
        full, full_w = exhaustive_commuting_check(algebra, phi)
        assert fast == full
        if not full:
            assert not (phi(full_w) * full_w - full_w * phi(full_w)).is_zero()


def test_exhaustive_budget_and_field_guards(zornf5, zornq):
    algebra, _ = zornf5
    from altcomm import BudgetExceededError
    with pytest.raises(BudgetExceededError):
        exhaustive_commuting_check(algebra, LinearMap.identity(algebra), budget=100)
    rational, _ = zornq
    with pytest.raises(ValueError):
        exhaustive_commuting_check(rational, LinearMap.identity(rational))


# ----------------------------------------------------------------------
# serialization


def test_map_round_trip(tmp_path, zornq):
    algebra, _ = zornq
    phi = random_commuting_map(algebra, seed=3)
    path = tmp_path / "phi.json"
    save_map(phi, path)
    assert load_map(algebra, path) == phi
    d = json.loads(path.read_text())
    assert d["dim"] == 8
    assert all(isinstance(v, str) for row in d["matrix"] for v in row)


def test_map_dict_round_trip(m2f5):
    algebra, _ = m2f5
    phi = random_commuting_map(algebra, seed=9)
    assert map_from_dict(algebra, map_to_dict(phi)) == phi


def test_map_from_dict_validation(m2q):
    algebra, _ = m2q
    with pytest.raises(ValueError):
        map_from_dict(algebra, {"dim": 3, "matrix": [["1"] * 3] * 3})
    with pytest.raises(ValueError):
        map_from_dict(algebra, {"dim": 4, "matrix": [["1"] * 4] * 3})
    with pytest.raises(ValueError):
        map_from_dict(algebra, {"dim": 4})
