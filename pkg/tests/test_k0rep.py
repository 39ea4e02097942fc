from hypothesis import given
from hypothesis import strategies as st

from slkcheck.blocks import enumerate_compositions, partitions, raise_at
from slkcheck.k0rep import (
    apply_e,
    apply_f,
    content_moves,
    quotient_to_simples,
    vec_add,
    vec_scale,
    verify_quotient_intertwines,
    verify_serre_and_commute,
    verify_sl2_block_relation,
)


def test_apply_e_examples():
    assert apply_e(1, {(2,): 1}) == {(1,): 1}
    assert apply_e(1, {(2, 2): 1}) == {(1, 2): 1, (2, 1): 1}
    assert apply_e(1, {(1, 1): 1}) == {}


def test_apply_f_examples():
    assert apply_f(1, {(1,): 1}) == {(2,): 1}
    assert apply_f(1, {(1, 2): 1}) == {(2, 2): 1}
    assert apply_f(1, {(2, 2): 1}) == {}


def test_linearity():
    v = {(1, 2): 2, (2, 1): -1}
    assert apply_e(1, v) == vec_add(vec_scale(2, apply_e(1, {(1, 2): 1})),
                                   vec_scale(-1, apply_e(1, {(2, 1): 1})))


def test_content_bookkeeping():
    assert content_moves(3, 3)
    assert content_moves(2, 4)


def test_sl2_block_relation_smallest():
    # a=(0,1): E1F1 = 0 and F1E1 = Id, so 0 + 1*Id = Id + 0*Id
    rep = verify_sl2_block_relation(2, 1, (0, 1), 1)
    assert rep["status"] == "pass"
    assert apply_e(1, apply_f(1, {(2,): 1})) == {}
    assert apply_f(1, apply_e(1, {(2,): 1})) == {(2,): 1}


def test_sl2_block_relation_sweep():
    for n in range(1, 6):
        for k in (2, 3):
            for a in enumerate_compositions(n, k):
                for i in range(1, k):
                    assert verify_sl2_block_relation(k, n, a, i)["status"] == "pass"


def test_commutator_is_weight():
    # e_i f_i - f_i e_i = (a_i - a_{i+1}) Id on every block
    for n in range(1, 5):
        for k in (2, 3):
            for a in enumerate_compositions(n, k):
                from slkcheck.blocks import tuples_in_block
                for r in tuples_in_block(a):
                    for i in range(1, k):
                        lhs = vec_add(apply_e(i, apply_f(i, {r: 1})),
                                      vec_scale(-1, apply_f(i, apply_e(i, {r: 1}))))
                        assert lhs == vec_scale(a[i - 1] - a[i], {r: 1})


def test_serre_and_commute():
    for n in (2, 3):
        rep = verify_serre_and_commute(3, n)
        assert rep["status"] == "pass"
        assert rep["checks"] > 0
    assert verify_serre_and_commute(2, 3)["status"] == "pass"  # vacuous cubic part


def test_serre_and_commute_perturbed_fails():
    assert verify_serre_and_commute(3, 2, perturb=True)["status"] == "fail"


def test_quotient_examples():
    assert quotient_to_simples((2,), {(1, 2): 1, (2, 1): -1}) == {}
    assert quotient_to_simples((2,), {(1, 2): 1, (2, 1): 1}) == {((1, 2),): 2}
    # lam = (1,...,1) is a bijection on basis keys
    q = quotient_to_simples((1, 1), {(1, 2): 3})
    assert list(q.values()) == [3]


def test_quotient_intertwines():
    for n in range(1, 5):
        for k in (2, 3):
            for lam in partitions(n):
                rep = verify_quotient_intertwines(lam, k, n)
                assert rep["status"] == "pass", rep


@given(st.integers(min_value=1, max_value=4), st.integers(min_value=2, max_value=3),
       st.data())
def test_e_image_lives_in_raised_block(n, k, data):
    a = data.draw(st.sampled_from(enumerate_compositions(n, k)))
    i = data.draw(st.integers(min_value=1, max_value=k - 1))
    from slkcheck.blocks import content, tuples_in_block
    r = data.draw(st.sampled_from(tuples_in_block(a)))
    up = raise_at(a, i)
    img = apply_e(i, {r: 1})
    if up is None:
        assert img == {}
    else:
        assert all(content(r2, k) == up for r2 in img)
