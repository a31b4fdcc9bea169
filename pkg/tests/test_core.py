import random
from fractions import Fraction

import pytest

from plates.combinatorics import Permutation, parse_permutation
from plates.core import (
    Plate,
    PlateParseError,
    all_plates,
    apply_permutation,
    evaluate,
    is_standard,
    lumpings,
    parse_plate,
    print_plate,
    rotate,
    standard_basis,
)


def test_parse_examples():
    p = parse_plate("[[{3,5}_1 {1,2,4}_1 {6}_1]]")
    assert p == Plate(6, ((3, 5), (1, 2, 4), (6,)), (1, 1, 1))
    assert parse_plate("[[12_2]]") == Plate(2, ((1, 2),), (2,))
    with pytest.raises(PlateParseError, match="zero position"):
        parse_plate("[[{1}_1 {2}_0]]")


def test_parse_errors():
    with pytest.raises(PlateParseError):
        parse_plate("[[{1}_1 {2}_1")
    with pytest.raises(ValueError, match="overlap"):
        parse_plate("[[{1,2}_1 {2,3}_1]]")
    with pytest.raises(ValueError, match="partition"):
        parse_plate("[[{1}_1 {3}_1]]")
    with pytest.raises(ValueError, match="partition"):
        parse_plate("[[{1,2}_2]]", n=3)
    with pytest.raises(PlateParseError):
        parse_plate("{1}_1")


def test_print_is_canonical_brace_form():
    assert print_plate(parse_plate("[[35_1 124_1 6_1]]")) == "[[{3,5}_1 {1,2,4}_1 {6}_1]]"


def test_compact_digits_limited_to_single_digit_elements():
    # brace form works at any n
    big = parse_plate("[[{1,2,3,4,5,6,7,8,9,10}_1]]")
    assert big.n == 10
    # compact shorthand is ambiguous once elements pass 9
    with pytest.raises(PlateParseError, match="n <= 9"):
        parse_plate("[[123456789_1 {10}_1]]")


def rand_plate(rng, n, r):
    return rng.choice(list(all_plates(n, r)))


def test_parse_print_round_trip_randomized():
    rng = random.Random(21)
    for _ in range(150):
        n, r = rng.randint(1, 6), rng.randint(1, 5)
        p = rand_plate(rng, n, r)
        assert parse_plate(print_plate(p)) == p


def test_evaluate_examples():
    p = parse_plate("[[{1}_1 {2}_1]]")
    assert evaluate(p, [Fraction(2), Fraction(0)]) == 1
    assert evaluate(p, [Fraction(1, 2), Fraction(3, 2)]) == 0
    assert evaluate(parse_plate("[[{1,2}_2]]"), [Fraction(1, 2), Fraction(3, 2)]) == 1
    with pytest.raises(ValueError):
        evaluate(p, [Fraction(1)])


def test_evaluate_needs_nonnegative_and_total():
    p = parse_plate("[[{1,2}_2]]")
    assert evaluate(p, [Fraction(3), Fraction(-1)]) == 0
    assert evaluate(p, [Fraction(1), Fraction(2)]) == 0  # total 3 != 2


def test_lumpings():
    p = parse_plate("[[{1}_1 {2}_1 {4}_1 {3}_1]]")
    merged = lumpings(p)
    assert parse_plate("[[{1}_1 {2,4}_2 {3}_1]]") in merged
    assert p in merged
    assert len(merged) == len(set(merged)) == 2 ** (p.k - 1)
    single = parse_plate("[[{1,2}_2]]")
    assert lumpings(single) == [single]
    assert len(lumpings(parse_plate("[[{1}_1 {2}_1 {3}_1]]"))) == 4


def test_lumping_regions_contain_original():
    rng = random.Random(31)
    for _ in range(300):
        n, r = rng.randint(1, 5), rng.randint(1, 4)
        p = rand_plate(rng, n, r)
        x = [Fraction(rng.randint(0, 2 * r), 2) for _ in range(n)]
        if evaluate(p, x):
            for lumped in lumpings(p):
                assert evaluate(lumped, x) == 1


def test_rotate():
    p = parse_plate("[[{1}_1 {2}_1]]")
    assert rotate(p, 1) == parse_plate("[[{2}_1 {1}_1]]")
    q = parse_plate("[[{1}_1 {2}_2 {3}_3]]")
    assert rotate(q, 1) == parse_plate("[[{3}_3 {1}_1 {2}_2]]")
    assert rotate(q, q.k) == q


def test_standard_basis_small():
    assert [print_plate(p) for p in standard_basis(2, 2)] == [
        "[[{1,2}_2]]",
        "[[{1}_1 {2}_1]]",
    ]
    assert len(standard_basis(3, 2)) == 4
    assert len(standard_basis(3, 3)) == 9
    assert all(is_standard(p) for p in standard_basis(4, 3))


def test_standard_basis_count_is_power():
    for n in range(1, 6):
        for r in range(1, 6):
            basis = standard_basis(n, r)
            assert len(basis) == r ** (n - 1)
            assert len(set(basis)) == len(basis)


def test_apply_permutation_examples():
    p = parse_plate("[[{1}_1 {2}_1]]")
    assert apply_permutation(parse_permutation("(1 2)"), p) == parse_plate("[[{2}_1 {1}_1]]")
    assert apply_permutation(Permutation.identity(2), p) == p
    assert apply_permutation(
        parse_permutation("(1 2 3)"), parse_plate("[[{1,2}_1 {3}_1]]")
    ) == parse_plate("[[{2,3}_1 {1}_1]]")


def test_indicator_equivariance_randomized():
    rng = random.Random(41)
    for _ in range(250):
        n, r = rng.randint(1, 5), rng.randint(1, 4)
        p = rand_plate(rng, n, r)
        sigma = Permutation(tuple(rng.sample(range(1, n + 1), n)))
        x = [Fraction(rng.randint(0, 3 * r), 3) for _ in range(n)]
        moved = [x[sigma(i) - 1] for i in range(1, n + 1)]  # sigma^{-1} . x
        assert evaluate(apply_permutation(sigma, p), x) == evaluate(p, moved)
