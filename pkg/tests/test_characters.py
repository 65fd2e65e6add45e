import math

import pytest

from kroncoef import (
    IntegralityViolation,
    SizeMismatch,
    character,
    conjugate,
    dimension,
    enumerate_partitions,
    kron_oracle,
    make_partition,
)


def test_trivial_character_is_one():
    for n in range(1, 11):
        top = make_partition([n])
        assert all(character(top, rho) == 1 for rho in enumerate_partitions(n))


def test_sign_character():
    for n in range(1, 11):
        col = make_partition([1] * n)
        for rho in enumerate_partitions(n):
            assert character(col, rho) == (-1) ** (n - len(rho))


def test_standard_character_of_s3():
    lam = make_partition([2, 1])
    assert character(lam, make_partition([1, 1, 1])) == 2
    assert character(lam, make_partition([2, 1])) == 0
    assert character(lam, make_partition([3])) == -1


def test_size_mismatch_rejected():
    with pytest.raises(SizeMismatch):
        character(make_partition([2, 1]), make_partition([2, 2]))
    with pytest.raises(SizeMismatch):
        kron_oracle(make_partition([2]), make_partition([2]), make_partition([3]))


def test_conjugate_twists_by_sign():
    for n in range(1, 9):
        for lam in enumerate_partitions(n):
            lam_c = conjugate(lam)
            for rho in enumerate_partitions(n):
                sign = (-1) ** (n - len(rho))
                assert character(lam_c, rho) == sign * character(lam, rho)


def test_dimensions():
    assert dimension(make_partition([5])) == 1
    assert dimension(make_partition([2, 1])) == 2
    # regular representation: sum of squared dimensions is n!
    for n in range(1, 9):
        assert sum(dimension(lam) ** 2 for lam in enumerate_partitions(n)) == math.factorial(n)
        assert all(dimension(lam) > 0 for lam in enumerate_partitions(n))


def test_column_orthogonality():
    # rows of the character table are orthonormal under the class weighting
    from kroncoef import z_of

    for n in range(1, 9):
        shapes = list(enumerate_partitions(n))
        rows = {lam.parts: [character(lam, rho) for rho in shapes] for lam in shapes}
        weights = [math.factorial(n) // z_of(rho) for rho in shapes]
        for i, lam in enumerate(shapes):
            for mu in shapes[i:]:
                dot = sum(w * a * b for w, a, b in zip(weights, rows[lam.parts], rows[mu.parts]))
                assert dot == (math.factorial(n) if lam == mu else 0)


def test_oracle_small_values():
    two_one = make_partition([2, 1])
    assert kron_oracle(two_one, two_one, two_one).gamma == 1
    assert kron_oracle(make_partition([1, 1, 1]), two_one, two_one).gamma == 1
    result = kron_oracle(two_one, two_one, two_one)
    assert result.provenance == "Oracle" and result.moves == ()


def test_oracle_delta_rule_one_row():
    for n in range(1, 9):
        top = make_partition([n])
        for mu in enumerate_partitions(n):
            for nu in enumerate_partitions(n):
                assert kron_oracle(top, mu, nu).gamma == (1 if mu == nu else 0)


def test_oracle_sign_twist():
    # gamma^lam_{(1^n), nu} = [lam == nu']
    for n in range(1, 11):
        col = make_partition([1] * n)
        for lam in enumerate_partitions(n):
            for nu in enumerate_partitions(n):
                expected = 1 if lam == conjugate(nu) else 0
                assert kron_oracle(lam, col, nu).gamma == expected


def test_oracle_full_symmetry_small():
    for n in range(1, 6):
        shapes = list(enumerate_partitions(n))
        for lam in shapes:
            for mu in shapes:
                for nu in shapes:
                    base = kron_oracle(lam, mu, nu).gamma
                    assert base >= 0
                    assert kron_oracle(mu, lam, nu).gamma == base
                    assert kron_oracle(nu, mu, lam).gamma == base
                    assert kron_oracle(conjugate(lam), conjugate(mu), nu).gamma == base


def test_empty_triple():
    empty = make_partition([])
    assert kron_oracle(empty, empty, empty).gamma == 1


def test_integrality_violation_unreachable_from_valid_input():
    # spot check: the weighted sum is divisible by n! across all of S_6
    for lam in enumerate_partitions(6):
        for mu in enumerate_partitions(6):
            kron_oracle(lam, mu, mu)  # would raise IntegralityViolation on a bug
    assert issubclass(IntegralityViolation, ArithmeticError)
