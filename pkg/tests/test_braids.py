import random

import pytest

from braidsys import (
    BraidWord,
    braids_equal,
    canonical_word,
    conjugate,
    exponent_sum,
    free_reduce,
    inverse,
    iota,
    is_identity,
    normal_form,
    parse_word,
    permutation,
    permutation_order,
    power,
    product,
)
from braidsys.braids import NormalForm, Permutation, _bubble_normalize, _normalize_tuples, _strip

from oracles import random_word


def test_parse_word_basics():
    w = parse_word("1, 1, -2", 3)
    assert w.letters == (1, 1, -2)
    assert parse_word("", 3).letters == ()
    assert parse_word("1, -2, 3", 4).letters == (1, -2, 3)


@pytest.mark.parametrize("text", ["0", "3", "-3", "1, x"])
def test_parse_word_rejects_bad_tokens(text):
    with pytest.raises(ValueError):
        parse_word(text, 3)


def test_braid_word_validation():
    with pytest.raises(ValueError):
        BraidWord(0)
    with pytest.raises(ValueError):
        BraidWord(3, (3,))
    assert BraidWord(1).letters == ()


def test_permutation_examples():
    assert permutation(parse_word("1,1,-2", 3)).images == (1, 3, 2)
    assert permutation(parse_word("", 5)).is_identity()
    assert permutation(parse_word("1,2,-3", 4)).images == (4, 1, 2, 3)


def test_permutation_is_homomorphism():
    rng = random.Random(5)
    for _ in range(50):
        m = rng.randint(2, 6)
        a, b = random_word(rng, m, 8), random_word(rng, m, 8)
        assert permutation(product(a, b)) == permutation(a).then(permutation(b))
    assert permutation(parse_word("2", 4)).images == (1, 3, 2, 4)


def test_permutation_order_examples():
    assert permutation_order(parse_word("1", 5)) == 2
    assert permutation_order(parse_word("1,2,-3", 4)) == 4
    assert permutation_order(parse_word("3,-1,4", 5)) == 6
    assert permutation_order(parse_word("", 3)) == 1


def test_group_operations():
    a = parse_word("1", 2)
    assert is_identity(product(a, inverse(a)))
    b = parse_word("1,2,-3", 4)
    p4 = power(b, 4)
    assert len(p4) == 12
    assert permutation(p4).is_identity()
    assert power(b, -2).letters == inverse(b).letters * 2


def test_conjugate_is_literal():
    b = parse_word("3,-1,4", 5)
    a = parse_word("2,2", 5)
    assert conjugate(b, a).letters == (-2, -2, 3, -1, 4, 2, 2)
    with pytest.raises(ValueError):
        conjugate(b, parse_word("1", 3))


def test_conjugate_example_pair():
    # the documented conjugate pair; a one-letter conjugator relates them
    b = parse_word("3,-1,4", 5)
    bp = parse_word("4,3,-1", 5)
    assert braids_equal(conjugate(b, parse_word("-4", 5)), bp)


def test_iota():
    w = parse_word("1,1,-2", 3)
    up = iota(w)
    assert up.degree == 4 and up.letters == w.letters
    assert iota(BraidWord(2)).degree == 3
    rng = random.Random(9)
    for _ in range(20):
        b = random_word(rng, rng.randint(2, 5), 8)
        assert permutation(iota(b))(b.degree + 1) == b.degree + 1


def test_braid_relations():
    assert braids_equal(parse_word("1,2,1", 3), parse_word("2,1,2", 3))
    assert braids_equal(parse_word("1,3", 4), parse_word("3,1", 4))
    assert is_identity(parse_word("1,-1", 3))
    assert not braids_equal(parse_word("1", 3), parse_word("2", 3))


def test_exponent_sum():
    assert exponent_sum(parse_word("1,2,-3", 4)) == 1
    assert exponent_sum(parse_word("", 4)) == 0
    assert exponent_sum(parse_word("-3,2,-1", 4)) == -1
    rng = random.Random(3)
    for _ in range(30):
        m = rng.randint(2, 5)
        a, b = random_word(rng, m, 8), random_word(rng, m, 8)
        assert exponent_sum(product(a, b)) == exponent_sum(a) + exponent_sum(b)
        assert exponent_sum(conjugate(a, b)) == exponent_sum(a)


def test_normal_form_group_laws():
    rng = random.Random(0)
    for _ in range(150):
        m = rng.randint(1, 6)
        w = random_word(rng, m, 12)
        nf = normal_form(w)
        assert (nf * nf.inverse()).is_identity()
        assert normal_form(nf.to_word()) == nf
        assert nf.permutation() == permutation(w)
        v = random_word(rng, m, 10)
        assert normal_form(product(w, v)) == normal_form(w) * normal_form(v)
        k = rng.randint(-3, 3)
        assert normal_form(power(w, k)) == nf.power(k)


def test_free_insertion_does_not_change_normal_form():
    rng = random.Random(1)
    for _ in range(100):
        m = rng.randint(2, 6)
        w = random_word(rng, m, 10)
        pos = rng.randint(0, len(w.letters))
        g = rng.randint(1, m - 1)
        padded = BraidWord(m, w.letters[:pos] + (g, -g) + w.letters[pos:])
        assert normal_form(padded) == normal_form(w)


def test_braid_relation_rewrites_preserve_normal_form():
    rng = random.Random(2)
    for _ in range(100):
        m = rng.randint(3, 6)
        w = random_word(rng, m, 8)
        i = rng.randint(1, m - 2)
        left = BraidWord(m, w.letters + (i, i + 1, i))
        right = BraidWord(m, w.letters + (i + 1, i, i + 1))
        assert normal_form(left) == normal_form(right)


def test_normal_form_factors_are_left_weighted():
    # no factor is trivial or the half twist, and each pair is left-greedy
    from braidsys.braids import _tup_inverse

    rng = random.Random(4)
    for _ in range(80):
        m = rng.randint(2, 6)
        nf = normal_form(random_word(rng, m, 12))
        w0 = tuple(range(m, 0, -1))
        for f in nf.factors:
            assert not f.is_identity() and f.images != w0
        for a, b in zip(nf.factors, nf.factors[1:]):
            ai = _tup_inverse(a.images)
            bm = b.images
            assert not any(
                bm[i - 1] > bm[i] and ai[i - 1] < ai[i] for i in range(1, m)
            )


def test_incremental_normalization_matches_bubble_fixpoint():
    rng = random.Random(6)
    for _ in range(800):
        m = rng.randint(2, 6)
        facs = []
        for _ in range(rng.randint(0, 7)):
            im = list(range(1, m + 1))
            rng.shuffle(im)
            facs.append(tuple(im))
        fast = _normalize_tuples(m, list(facs))
        slow = list(facs)
        _bubble_normalize(slow)
        assert fast == _strip(m, slow)


def test_pure_power_has_trivial_permutation():
    rng = random.Random(7)
    for _ in range(40):
        b = random_word(rng, rng.randint(2, 6), 10)
        assert permutation(power(b, permutation_order(b))).is_identity()


def test_free_reduce():
    assert free_reduce(parse_word("1,2,-2,-1", 3)).letters == ()
    assert free_reduce(parse_word("1,-2,2,1", 3)).letters == (1, 1)


def test_canonical_word_represents_same_braid():
    rng = random.Random(8)
    for _ in range(40):
        w = random_word(rng, rng.randint(2, 5), 10)
        assert braids_equal(canonical_word(w), w)


def test_degree_one_group_is_trivial():
    w = BraidWord(1)
    assert is_identity(w)
    assert normal_form(w) == NormalForm(1, 0, ())
    assert permutation(w).images == (1,)
    assert tuple(power(w, 5).letters) == ()


def test_normal_form_json_roundtrip():
    nf = normal_form(parse_word("1,-2,3,3", 4))
    assert NormalForm.from_json(nf.to_json()) == nf


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))
