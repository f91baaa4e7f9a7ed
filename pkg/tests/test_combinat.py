from itertools import permutations, product
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hecke_osp.combinat import (
    SYTableau,
    TPoly,
    artin_monomials,
    class_representative,
    cycle_type,
    des_maj,
    enumerate_syt,
    gs_monomial,
    gs_monomials,
    osp_count,
    partitions,
    perm_compose,
    perm_from_word,
    perm_inverse,
    perm_inversions,
    q_binomial,
    reduced_word,
    staircases,
    stirling2,
    syt_of_shape,
    t_factorial,
)


def brute_stirling(n, k):
    # surjections [n] -> [k] counted up to relabelling of the target
    return sum(1 for f in product(range(k), repeat=n) if len(set(f)) == k) // factorial(k)


def is_shuffle(c, a, b):
    # c interleaves a and b preserving the order of each
    if not a:
        return list(c) == list(b)
    if not b:
        return list(c) == list(a)
    return (c[0] == a[0] and is_shuffle(c[1:], a[1:], b)) or (c[0] == b[0] and is_shuffle(c[1:], a, b[1:]))


def test_tpoly_text():
    assert str(t_factorial(3)) == "1 + 2t + 2t^2 + t^3"
    assert TPoly.parse("1 + 2t + 2t^2 + t^3") == t_factorial(3)
    assert str(TPoly()) == "0"


def test_q_binomial_examples():
    assert q_binomial(3, 2) == TPoly([1, 1, 1])
    assert q_binomial(4, 2) == TPoly([1, 1, 2, 1, 1])
    assert q_binomial(2, 3) == TPoly()
    assert q_binomial(5, -1) == TPoly()


@given(st.integers(0, 8), st.integers(0, 8))
def test_q_binomial_product_formula(a, b):
    if b > a:
        return
    assert q_binomial(a, b) * t_factorial(b) * t_factorial(a - b) == t_factorial(a)
    assert q_binomial(a, b)(1) == factorial(a) // (factorial(b) * factorial(a - b))


@pytest.mark.parametrize("n", range(1, 8))
def test_stirling_against_brute_force(n):
    for k in range(1, n + 1):
        assert stirling2(n, k) == brute_stirling(n, k)
        assert osp_count(n, k) == factorial(k) * stirling2(n, k)


def test_partitions():
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [len(partitions(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


def test_syt_counts():
    assert len(enumerate_syt(4)) == 10
    assert [len(enumerate_syt(n)) for n in range(1, 8)] == [1, 2, 4, 10, 26, 76, 232]
    assert len(syt_of_shape((3, 2))) == 5


def test_syt_validation():
    with pytest.raises(ValueError):
        SYTableau(((1, 3), (2, 4), (5,), (6, 7)))
    with pytest.raises(ValueError):
        SYTableau(((2, 1),))


def test_descents_and_maj():
    T = SYTableau(((1, 2, 4), (3,)))
    D, des, maj = des_maj(T)
    assert D == frozenset({2}) and des == 1 and maj == 2


@pytest.mark.parametrize("n", range(1, 7))
def test_maj_generating_function_is_factorial(n):
    # Σ_T f^{sh T} t^maj(T) = [n]!_t
    total = TPoly()
    for T in enumerate_syt(n):
        total = total + TPoly.monomial(des_maj(T)[2]) * len(syt_of_shape(T.shape))
    assert total == t_factorial(n)


def test_staircases_5_3():
    st53 = staircases(5, 3)
    assert len(st53) == 6
    for c in st53:
        assert is_shuffle(c, (2, 1, 0), (2, 2))
    assert sorted(st53, reverse=True) == st53


@pytest.mark.parametrize("n", range(1, 7))
def test_artin_and_gs_counts(n):
    for k in range(1, n + 1):
        assert len(artin_monomials(n, k)) == osp_count(n, k)
        assert len(gs_monomials(n, k)) == osp_count(n, k)


def test_artin_is_an_order_ideal():
    A = set(artin_monomials(4, 2))
    for m in A:
        for j in range(4):
            if m[j]:
                d = list(m)
                d[j] -= 1
                assert tuple(d) in A


def test_gs_monomial_examples():
    assert gs_monomial((1, 2, 3)) == (0, 0, 0)
    assert gs_monomial((3, 2, 1)) == (0, 1, 2)
    assert gs_monomial((2, 1, 3)) == (0, 1, 0)


def test_gs_k_equals_n_is_classical():
    assert sorted(gs_monomials(3, 3)) == sorted({gs_monomial(w) for w in permutations((1, 2, 3))})


perms = st.integers(1, 6).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(tuple)


@given(perms)
def test_reduced_word_round_trip(w):
    word = reduced_word(w)
    assert len(word) == perm_inversions(w)
    assert perm_from_word(word, len(w)) == w


@given(perms)
def test_inverse_and_cycle_type(w):
    e = tuple(range(1, len(w) + 1))
    assert perm_compose(w, perm_inverse(w)) == e
    assert cycle_type(class_representative(cycle_type(w))) == cycle_type(w)


def test_class_representative():
    assert class_representative((3, 1)) == (2, 3, 1, 4)
    assert class_representative((2, 2)) == (2, 1, 4, 3)
