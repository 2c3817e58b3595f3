import cmath
import math

import numpy as np
import pytest

from paley_etf.characters import (
    additive_character,
    additive_character_table,
    gauss_sign,
    gauss_sum,
    quadratic_character,
    quadratic_character_table,
    residues,
    sigma,
    sigma_table,
)
from paley_etf.errors import EvenCharacteristic
from paley_etf.finite_field import make_field, prime_power

OMEGA3 = cmath.exp(2j * math.pi / 3)
ODD_UP_TO_343 = [q for q in range(3, 344, 2) if prime_power(q)]
THREE_MOD_FOUR = [3, 7, 11, 19, 23, 27]


def field_of(q):
    return make_field(*prime_power(q))


def test_chi_gf7_from_squares():
    F = make_field(7)
    squares = {x * x % 7 for x in range(1, 7)}
    for a in range(1, 7):
        assert quadratic_character(F, F(a)) == (1 if a in squares else -1)
    assert [quadratic_character(F, F(a)) for a in (1, 2, 4)] == [1, 1, 1]
    assert [quadratic_character(F, F(a)) for a in (3, 5, 6)] == [-1, -1, -1]
    assert quadratic_character(F, F.zero) == 0


@pytest.mark.parametrize("q", THREE_MOD_FOUR)
def test_chi_minus_one(q):
    F = field_of(q)
    assert quadratic_character(F, -F.one) == -1


@pytest.mark.parametrize("q", ODD_UP_TO_343)
def test_chi_table_matches_euler_and_squares(q):
    F = field_of(q)
    table = quadratic_character_table(F)
    squares = {(b * b).value for b in F.elements()[1:]}
    for a in F.elements():
        chi = quadratic_character(F, a)
        assert chi == table[a.value]
        if a:
            assert chi == (1 if a.value in squares else -1)


def test_chi_multiplicative():
    F = make_field(3, 3)
    for a in F.elements():
        for b in F.elements():
            assert quadratic_character(F, a * b) == (
                quadratic_character(F, a) * quadratic_character(F, b))


def test_even_characteristic_rejected():
    F = make_field(2, 3)
    with pytest.raises(EvenCharacteristic):
        quadratic_character(F, F.one)
    with pytest.raises(EvenCharacteristic):
        residues(F)
    with pytest.raises(EvenCharacteristic):
        sigma(F, F.one)
    with pytest.raises(EvenCharacteristic):
        gauss_sum(F)


def test_residues_small():
    assert [b.value for b in residues(make_field(7))] == [1, 2, 4]
    assert [b.value for b in residues(make_field(3))] == [1]


@pytest.mark.parametrize("q", ODD_UP_TO_343)
def test_residue_count(q):
    res = residues(field_of(q))
    assert len(res) == (q - 1) // 2
    assert [b.value for b in res] == sorted(b.value for b in res)


def test_additive_character_values():
    F3 = make_field(3)
    assert additive_character(F3, 1, F3(1)) == pytest.approx(OMEGA3, abs=1e-15)
    F7 = make_field(7)
    assert abs(sum(additive_character(F7, 1, a) for a in F7.elements())) < 1e-12
    assert all(additive_character(F7, 0, a) == 1 for a in F7.elements())


def test_additive_character_power_gf27():
    F = make_field(3, 3)
    for a in F.elements():
        assert additive_character(F, 1, a) ** 3 == pytest.approx(
            additive_character(F, 1, 3 * a), abs=1e-12)
        # 3a = 0 in characteristic 3
        assert additive_character(F, 1, 3 * a) == 1


@pytest.mark.parametrize("q", [5, 9, 27, 25, 49])
def test_additive_character_homomorphism(q):
    F = field_of(q)
    for c in (F.one, F(q - 1)):
        table = additive_character_table(F, c)
        for a in F.elements():
            assert abs(abs(table[a.value]) - 1) < 1e-14
            assert table[a.value] == pytest.approx(additive_character(F, c, a), abs=1e-13)
            for b in F.elements()[::3]:
                lhs = additive_character(F, c, a + b)
                rhs = additive_character(F, c, a) * additive_character(F, c, b)
                assert abs(lhs - rhs) < 1e-12


def test_sigma_gf3_by_hand():
    F = make_field(3)
    expected = 1 + 2 * OMEGA3
    assert sigma(F, F.one) == pytest.approx(expected, abs=1e-14)
    assert sigma(F, F.one) == pytest.approx(1j * math.sqrt(3), abs=1e-14)
    assert gauss_sum(F) == pytest.approx(1j * math.sqrt(3), abs=1e-14)


def test_sigma_gf7_modulus():
    F = make_field(7)
    for a in F.elements()[1:]:
        assert abs(sigma(F, a)) == pytest.approx(math.sqrt(7), abs=1e-12)
    assert abs(gauss_sum(F)) == pytest.approx(math.sqrt(7), abs=1e-12)


@pytest.mark.parametrize("q", [3, 5, 9, 27])
def test_sigma_at_zero(q):
    F = field_of(q)
    assert sigma(F, F.zero) == pytest.approx(q)


@pytest.mark.parametrize("q", [3, 7, 9, 25, 27, 49])
def test_sigma_table_matches_literal_sum(q):
    F = field_of(q)
    table = sigma_table(F)
    for a in F.elements():
        assert abs(table[a.value] - sigma(F, a)) < 1e-10


@pytest.mark.parametrize("q", ODD_UP_TO_343)
def test_sigma_is_chi_times_gauss_sum(q):
    F = field_of(q)
    chi = quadratic_character_table(F)
    for c in {1, q - 1, 2 % q}:
        g = gauss_sum(F, c)
        s = sigma_table(F, c)
        assert np.max(np.abs(s[1:] - chi[1:] * g)) < 1e-10
        assert np.max(np.abs(np.abs(s[1:]) ** 2 - q)) < 1e-9
        # Gauss sum of psi_c is chi(c) times that of psi_1
        assert abs(g - chi[c] * gauss_sum(F)) < 1e-10


@pytest.mark.parametrize("q", THREE_MOD_FOUR)
def test_gauss_sum_purely_imaginary_with_constant_sign(q):
    F = field_of(q)
    g = gauss_sum(F)
    assert abs(g.real) < 1e-10
    chi = quadratic_character_table(F)
    s = sigma_table(F)
    ratios = s[1:] / (1j * chi[1:] * math.sqrt(q))
    sign = gauss_sign(F)
    assert np.max(np.abs(ratios - sign)) < 1e-10


def test_measured_gauss_signs():
    # prime fields give +i sqrt(q); GF(27) gives -i sqrt(27)
    assert [gauss_sign(field_of(q)) for q in THREE_MOD_FOUR] == [1, 1, 1, 1, 1, -1]


@pytest.mark.parametrize("q", ODD_UP_TO_343)
def test_chi_autocorrelation_exact(q):
    F = field_of(q)
    chi = quadratic_character_table(F)
    idx = np.arange(q)
    diff = F.sub_vec(idx[:, None], idx[None, :])
    sums = (chi[:, None] * chi[diff]).sum(axis=0)
    assert sums.dtype.kind == "i"
    assert np.all(sums[1:] == -1)
