import pytest

from errors import DomainError
from partitions import (
    EMPTY,
    Partition,
    balanced_partition,
    boxes,
    conjugate,
    content_sum,
    dim_irrep,
    enumerate_partitions,
    eta_contents,
    eta_rows,
    hook_lengths,
    is_subpartition,
    weyl_dim,
)


def P(*parts):
    return Partition(parts)


def test_partition_rejects_increasing_parts():
    with pytest.raises(DomainError):
        P(1, 2)


def test_partition_rejects_zero_part():
    with pytest.raises(DomainError):
        P(2, 0)


def test_from_parts_strips_zeros():
    assert Partition.from_parts([3, 0]) == P(3)
    assert Partition.from_parts([0]) == EMPTY
    assert P(3, 2).part(3) == 0
    assert str(P(3, 2)) == "(3,2)"


@pytest.mark.parametrize("n, h, expected", [
    (3, 2, [(3,), (2, 1)]),
    (4, 4, [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]),
    (0, 3, [()]),
    (5, 1, [(5,)]),
])
def test_enumerate_partitions(n, h, expected):
    assert [lam.parts for lam in enumerate_partitions(n, h)] == expected


@pytest.mark.parametrize("n, count", [(1, 1), (5, 7), (10, 42), (15, 176)])
def test_enumerate_partitions_counts(n, count):
    partitions = enumerate_partitions(n, n)
    assert len(partitions) == count
    assert len(set(partitions)) == count
    assert all(lam.size == n for lam in partitions)


def test_enumerate_partitions_rejects_negative():
    with pytest.raises(DomainError):
        enumerate_partitions(-1, 2)


@pytest.mark.parametrize("sigma, expected", [
    (P(2, 1), 0),
    (P(3), 3),
    (P(1, 1, 1), -3),
    (EMPTY, 0),
    (P(2, 2), 0),
])
def test_content_sum(sigma, expected):
    assert content_sum(sigma) == expected


def test_content_sum_matches_box_contents():
    for lam in enumerate_partitions(8, 8):
        assert content_sum(lam) == sum(col - row for row, col in boxes(lam))


@pytest.mark.parametrize("sigma, expected", [
    (P(2, 1), 6),
    (P(1, 1, 1), 12),
    (P(7), 0),
    (P(2, 2), 12),
])
def test_eta_contents(sigma, expected):
    assert eta_contents(sigma) == expected


def test_eta_rows_example():
    assert eta_rows(P(2, 1), 2) == 6
    assert eta_rows(P(1, 1, 1), 3) == 12


def test_eta_rows_height_violation():
    with pytest.raises(DomainError):
        eta_rows(P(1, 1, 1), 2)


def test_eta_formulas_agree_exhaustively():
    for d in range(1, 7):
        for n in range(26):
            for lam in enumerate_partitions(n, d):
                assert eta_rows(lam, d) == eta_contents(lam), (lam, d)


def test_eta_is_even():
    for lam in enumerate_partitions(9, 9):
        assert eta_contents(lam) % 2 == 0


@pytest.mark.parametrize("sigma, expected", [
    (P(1), 1),
    (P(2, 1), 2),
    (P(2, 2), 2),
    (P(3, 2), 5),
    (P(3, 2, 1), 16),
    (P(4), 1),
])
def test_dim_irrep(sigma, expected):
    assert dim_irrep(sigma) == expected


def test_dim_irrep_sum_of_squares():
    # Σ (f^λ)² = n!
    assert sum(dim_irrep(lam) ** 2 for lam in enumerate_partitions(6, 6)) == 720


@pytest.mark.parametrize("sigma, d, expected", [
    (P(1, 1, 1), 2, 0),
    (P(1), 4, 4),
    (P(2), 2, 3),
    (P(1, 1), 3, 3),
    (P(2, 1), 2, 2),
])
def test_weyl_dim(sigma, d, expected):
    assert weyl_dim(sigma, d) == expected


def test_schur_weyl_dimension_count():
    for d in range(1, 4):
        for n in range(1, 9):
            total = sum(dim_irrep(lam) * weyl_dim(lam, d) for lam in enumerate_partitions(n, d))
            assert total == d ** n, (n, d)


def test_hook_lengths_and_conjugate():
    assert hook_lengths(P(2, 1)) == [[3, 1], [1]]
    assert conjugate(P(3, 1)) == P(2, 1, 1)
    assert conjugate(EMPTY) == EMPTY
    for lam in enumerate_partitions(7, 7):
        assert conjugate(conjugate(lam)) == lam


def test_is_subpartition():
    assert is_subpartition(P(2, 1), P(3, 3, 2))
    assert is_subpartition(EMPTY, P(1))
    assert not is_subpartition(P(1, 1, 1), P(3, 3))
    assert not is_subpartition(P(4), P(3, 3))


@pytest.mark.parametrize("n, h, expected", [
    (5, 2, (3, 2)),
    (6, 2, (3, 3)),
    (7, 3, (3, 2, 2)),
    (3, 3, (1, 1, 1)),
])
def test_balanced_partition(n, h, expected):
    sigma = balanced_partition(n, h)
    assert sigma.parts == expected
    assert sigma.size == n and sigma.height == h
    assert sigma.parts[0] - sigma.parts[-1] <= 1


def test_balanced_partition_too_few_boxes():
    with pytest.raises(DomainError):
        balanced_partition(2, 3)
