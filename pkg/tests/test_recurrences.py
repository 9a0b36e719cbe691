from fractions import Fraction

import pytest

from convex_census.recurrences import (alpha, alpha_seq, argmax_split, ccx_table, lambda_seq,
                                       p_table, product_bound, tail_sum)

TABLE1_P = (1, 2, 3, 5, 7, 11, 16, 26, 36, 56, 81, 131, 183, 287, 417, 677, 937)
P_19_32 = (1457, 2107, 3407, 4759, 7463, 10843, 17603, 24373, 37913, 54838, 88688,
           123892, 194300, 282310)


def test_p_table_values():
    assert p_table(18).values == TABLE1_P
    assert p_table(32).values[17:] == P_19_32
    P = p_table(32)
    assert (P[9], P[17], P[32]) == (26, 677, 282310)


def test_ccx_table_values():
    assert ccx_table(9).values == (0, 1, 3, 6, 11, 18, 29, 45)
    C = ccx_table(9)
    assert (C[3], C[4], C[9]) == (1, 3, 45)


def test_lambda_values():
    lam = lambda_seq(6)
    assert lam.values[:6] == (1, 2, 5, 26, 677, 458330)
    assert lam[0] == 1
    with pytest.raises(ValueError):
        lambda_seq(13)
    assert lambda_seq(13, cap=13)[13] > 0


def test_lambda_equals_p_at_powers_of_two():
    P = p_table(2 ** 4 + 1)
    lam = lambda_seq(4)
    assert all(lam[k] == P[2 ** k + 1] for k in range(5))


def test_argmax_split_examples():
    assert (3, 5) in argmax_split(7) and (4, 4) not in argmax_split(7)
    assert (3, 3) in argmax_split(5)
    assert (2, 3) in argmax_split(4)


def test_alpha():
    assert alpha_seq(4).values == (4, 7, 12, 21)
    assert alpha(5) == 38
    with pytest.raises(ValueError):
        alpha(0)


def test_p_monotone_and_cx_bounds():
    N = 40
    P, C = p_table(N), ccx_table(N)
    assert all(P[k] <= P[k + 1] for k in range(2, N))
    for n in range(3, N + 1):
        assert C[n] <= sum(P[k] for k in range(2, n))
        assert C[n] <= n * P[n]


def test_lambda_growth_floor_and_product_bound():
    lam = lambda_seq(8)
    for k in range(1, 9):
        assert lam[k] >= 2 ** (2 ** (k - 1))
        assert lam[k] <= product_bound(k)


def test_tail_sum_exact():
    assert tail_sum(1, 2) == Fraction(1, 16) + Fraction(1, 128)
    assert tail_sum(5, 4) == 0
    # the infinite tail from i is dominated by twice its first term
    assert tail_sum(4, 9) < Fraction(2, 2 ** alpha(4))


def test_bad_arguments():
    with pytest.raises(ValueError):
        p_table(1)
    with pytest.raises(ValueError):
        argmax_split(2)
    with pytest.raises(IndexError):
        p_table(10)[11]
