import numpy as np
import pytest

from algebra.gf import (
    SubfieldEmbedding,
    build_extension,
    build_field,
    find_primitive_modulus,
    from_digits,
    hermitian_field,
    subfield_embed,
    subfield_project,
    to_digits,
)
from algebra.polyring import big_field_context
from utils.errors import DivisionByZero, FieldTooLarge, NoConjugationDefined, NotInSubfield, NotPrime


def test_gf4_encoding(gf4):
    # 2 = w, 3 = w^2 = w + 1
    assert gf4.modulus == (1, 1, 1)
    assert gf4.add(2, 3) == 1
    assert gf4.mul(2, 2) == 3
    assert gf4.mul(2, 3) == 1
    assert gf4.inv(2) == 3
    assert gf4.q == 2


def test_gf4_conjugation_swaps_w(gf4):
    assert gf4.conjugate(2) == 3
    assert gf4.conjugate(3) == 2
    assert gf4.conjugate(1) == 1
    assert gf4.conjugate(0) == 0


def test_field_axioms_gf9(gf9):
    elems = list(gf9.elements())
    assert gf9.order == 9 and gf9.q == 3
    for a in elems:
        assert gf9.add(a, gf9.neg(a)) == 0
        if a:
            assert gf9.mul(a, gf9.inv(a)) == 1
        for b in elems:
            assert gf9.mul(a, b) == gf9.mul(b, a)
            assert gf9.sub(gf9.add(a, b), b) == a


def test_generator_is_primitive(gf9):
    powers = {gf9.pow(gf9.generator, i) for i in range(8)}
    assert powers == set(range(1, 9))


def test_norm_lies_in_prime_subfield(gf9):
    for a in gf9.elements():
        norm = gf9.mul(a, gf9.conjugate(a))
        assert gf9.conjugate(norm) == norm
        assert norm < 3


def test_conjugation_is_an_involution(gf9):
    for a in gf9.elements():
        assert gf9.conjugate(gf9.conjugate(a)) == a


def test_frobenius_exponent_wraps(gf9):
    for a in gf9.elements():
        assert gf9.frobenius(a, 2) == a
        assert gf9.frobenius(a, 3) == gf9.frobenius(a, 1)


def test_zero_has_no_inverse(gf4):
    with pytest.raises(DivisionByZero):
        gf4.inv(0)
    with pytest.raises(DivisionByZero):
        gf4.log(0)


def test_build_field_errors():
    with pytest.raises(NotPrime):
        build_field(4, 1)
    with pytest.raises(FieldTooLarge):
        build_field(2, 30)
    with pytest.raises(NotPrime):
        hermitian_field(6)


def test_odd_degree_field_has_no_conjugation():
    f = build_field(2, 3)
    with pytest.raises(NoConjugationDefined):
        f.conjugate(2)


def test_primitive_modulus_is_smallest():
    assert find_primitive_modulus(2, 2) == (1, 1, 1)
    assert find_primitive_modulus(2, 4) == (1, 1, 0, 0, 1)
    assert find_primitive_modulus(3, 2) == (2, 1, 1)


def test_dense_tables_agree_with_scalar_ops(gf9):
    for a in gf9.elements():
        for b in gf9.elements():
            assert gf9.mul_table[a, b] == gf9.mul(a, b)
            assert gf9.add_table[a, b] == gf9.add(a, b)
        assert gf9.conj_table[a] == gf9.conjugate(a)


def test_table_free_field_matches_inverse():
    big = build_extension(2, 28, 1 << 20)
    assert not big.has_tables
    for a in (1, 2, 3, 12345, (1 << 27) + 5):
        assert big.mul(a, big.inv(a)) == 1
    assert big.pow(big.generator, big.order - 1) == 1


def test_subfield_embedding_is_a_homomorphism(gf4):
    big = build_field(2, 6)
    emb = SubfieldEmbedding(gf4, big)
    for a in gf4.elements():
        assert emb.project(emb.embed(a)) == a
        assert emb.is_in_subfield(emb.embed(a))
        for b in gf4.elements():
            assert emb.embed(gf4.mul(a, b)) == big.mul(emb.embed(a), emb.embed(b))
            assert emb.embed(gf4.add(a, b)) == big.add(emb.embed(a), emb.embed(b))


def test_projection_rejects_outside_elements(gf4):
    big = build_field(2, 6)
    emb = SubfieldEmbedding(gf4, big)
    outside = next(x for x in big.elements() if not emb.is_in_subfield(x))
    with pytest.raises(NotInSubfield):
        emb.project(outside)


FIELDS = [(2, 2), (3, 2), (2, 6)]


@pytest.fixture(params=FIELDS, ids=lambda pk: f'GF({pk[0]}^{pk[1]})')
def field(request):
    return build_field(*request.param)


def _triples(field, count=300):
    rng = np.random.default_rng(field.order)
    return rng.integers(0, field.order, size=(count, 3)).tolist()


def test_associativity_and_distributivity(field):
    for a, b, c in _triples(field):
        assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
        assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
        assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))


def test_frobenius_is_a_ring_homomorphism(field):
    for a, b, _ in _triples(field):
        assert field.frobenius(field.add(a, b)) == field.add(field.frobenius(a), field.frobenius(b))
        assert field.frobenius(field.mul(a, b)) == field.mul(field.frobenius(a), field.frobenius(b))


def test_exp_and_log_are_inverse_bijections(field):
    exp, log = field.table.exp, field.table.log
    assert len(exp) == field.order - 1
    assert sorted(exp.tolist()) == list(range(1, field.order))
    for i in range(field.order - 1):
        assert log[exp[i]] == i
    for a in range(1, field.order):
        assert exp[log[a]] == a
        assert field.log(a) == int(log[a])


def test_embedding_image_is_the_fixed_field(gf4):
    big = build_field(2, 6)
    emb = SubfieldEmbedding(gf4, big)
    fixed = {x for x in big.elements() if big.pow(x, 4) == x}
    assert {emb.embed(a) for a in gf4.elements()} == fixed
    assert len(fixed) == 4


def test_w_embeds_as_alpha_21(gf4):
    big = build_field(2, 6)
    alpha_21 = big.pow(big.generator, 21)
    assert SubfieldEmbedding(gf4, big).embed(2) == alpha_21
    assert big.pow(alpha_21, 3) == 1


def test_context_projection_inverts_embedding(gf4):
    ctx = big_field_context(9, gf4)
    for a in gf4.elements():
        assert subfield_project(ctx, subfield_embed(ctx, a)) == a
    with pytest.raises(NotInSubfield):
        subfield_project(ctx, ctx.beta)


def test_digit_encoding():
    assert to_digits(7, 3, 2) == [1, 2]
    assert from_digits([1, 2], 3) == 7
    assert to_digits(5, 2, 4) == [1, 0, 1, 0]
