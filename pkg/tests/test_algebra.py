import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradex.algebra import (
    AlgebraSpec,
    BaseAlgebraSpec,
    Element,
    ExtensionAlgebra,
    Letter,
    Monomial,
    ParseError,
    base_monomials,
    base_multiply,
    degree,
    format_element,
    multiply,
    normal_form,
    parse_element,
    quantum_commutativity_check,
)
from gradex.bicharacter import CommutationFactor, eval_factor, from_flux, trivial
from gradex.kernel import GroupElement, QSpec, Scalar, StructureError

from oracles import ZERO, expand_square_by_hand, reduction_outcomes

FLUX2 = AlgebraSpec(from_flux(2))
FLUX3 = AlgebraSpec(from_flux(3))
Q4 = QSpec.root_of_unity(4)
# q of order 4 on Z_4^3; b^11 = -1, b^22 = b^33 = 1
Q4_SPEC = AlgebraSpec(CommutationFactor(((1, 1, 0), (1, 0, 1), (0, 1, 0)), ((0, 1, 2), (-1, 0, 1), (-2, -1, 0)), Q4, 4))

x = Letter


def el(spec, text):
    return parse_element(spec, text)


def test_normal_form_examples():
    assert format_element(FLUX2, normal_form(FLUX2, [x(2), x(1)])) == "1 * x1*x2"
    assert format_element(FLUX3, normal_form(FLUX3, [x(2), x(1)])) == "-1 * x1*x2"
    for spec in (FLUX2, FLUX3, Q4_SPEC):
        assert normal_form(spec, [x(1), x(1)]).is_zero()


def test_normal_form_picks_up_q_powers():
    q = Scalar.q(Q4)
    # x2 x1 = b(xi2, xi1) x1 x2 = (-1)^1 q^-1 x1 x2
    assert normal_form(Q4_SPEC, [x(2), x(1)]) == Element({(x(1), x(2)): -q**-1})
    # x3 x1 : sigma_31 = 0, omega_31 = -2 -> q^-2 = -1
    assert normal_form(Q4_SPEC, [x(3), x(1)]) == Element({(x(1), x(3)): Scalar.const(-1, Q4)})


def test_normal_form_rejects_bad_letters():
    with pytest.raises(IndexError):
        normal_form(FLUX2, [x(3)])
    with pytest.raises(IndexError):
        normal_form(FLUX2, [x(1, 2)])


def test_multiply_examples():
    one = Scalar.one(FLUX2.qspec)
    assert multiply(FLUX2, el(FLUX2, "x1"), el(FLUX2, "x2")) == Element({(x(1), x(2)): one})
    s2 = el(FLUX2, "x1 + x2")
    s3 = el(FLUX3, "x1 + x2")
    expected2 = expand_square_by_hand(b12=1, square_zero=True)
    expected3 = expand_square_by_hand(b12=-1, square_zero=True)
    assert expected2 == {"x1*x2": 2}
    assert expected3 == {}
    assert format_element(FLUX2, multiply(FLUX2, s2, s2)) == "2 * x1*x2"
    assert multiply(FLUX3, s3, s3).is_zero()


def test_multiply_spec_mismatch():
    u = el(AlgebraSpec(trivial(2, 2, QSpec.formal())), "x1")
    with pytest.raises(StructureError):
        multiply(FLUX2, u, el(FLUX2, "x1"))


def test_degree():
    assert degree(FLUX3, Monomial(Scalar.one(FLUX3.qspec), (x(1), x(2)))) == GroupElement((1, 1, 0), 2)
    assert degree(FLUX3, ()) == GroupElement((0, 0, 0), 2)
    assert degree(FLUX3, (x(1),)) == GroupElement((1, 0, 0), 2)


def test_quantum_commutativity_examples():
    assert quantum_commutativity_check(FLUX2, 2).passed
    assert quantum_commutativity_check(FLUX3, 2).passed
    assert quantum_commutativity_check(AlgebraSpec(trivial(3)), 2).passed
    assert quantum_commutativity_check(Q4_SPEC, 3).passed


def test_flux2_relations():
    one = Scalar.one(FLUX2.qspec)
    assert multiply(FLUX2, el(FLUX2, "x1"), el(FLUX2, "x2")) == multiply(FLUX2, el(FLUX2, "x2"), el(FLUX2, "x1"))
    for i in (1, 2):
        g = el(FLUX2, f"x{i}")
        assert multiply(FLUX2, g, g).is_zero()
    assert el(FLUX2, "x2*x1") == Element({(x(1), x(2)): one})


def _spec_confluence_cases():
    flux2_m2 = AlgebraSpec(from_flux(2), BaseAlgebraSpec(2, 2))
    return [
        ("flux2", FLUX2, [x(1), x(2)]),
        ("flux2-m2", flux2_m2, [x(1, 1), x(1, 2), x(2, 1)]),
        ("flux3", FLUX3, [x(1), x(2), x(3)]),
        ("q4", Q4_SPEC, [x(1), x(2), x(3)]),
        ("q4-nil3", AlgebraSpec(Q4_SPEC.cf, BaseAlgebraSpec(1, 3)), [x(1), x(2), x(3)]),
    ]


def _oracle_for(spec):
    cf = spec.cf
    fac = lambda i, j: eval_factor(cf, cf.generator(i), cf.generator(j))
    one = Scalar.one(spec.qspec)
    return lambda w: reduction_outcomes(w, fac, lambda i: fac(i, i), spec.base.nilpotency, one)


def _engine_outcome(spec, w):
    e = normal_form(spec, w)
    if e.is_zero():
        return frozenset({ZERO})
    (word, c), = e
    return frozenset({(word, c)})


@pytest.mark.parametrize("name,spec,letters", _spec_confluence_cases(), ids=lambda v: v if isinstance(v, str) else "")
def test_confluence_small(name, spec, letters):
    oracle = _oracle_for(spec)
    for n in range(0, 5):
        for w in itertools.product(letters, repeat=n):
            outs = oracle(w)
            assert len(outs) == 1, (w, outs)
            assert outs == _engine_outcome(spec, w)


def _basis(spec, max_len):
    return [Element.basis(w, spec.qspec) for w in ExtensionAlgebra(spec).canonical_words(max_len)]


@pytest.mark.parametrize("spec", [FLUX2, FLUX3, Q4_SPEC])
def test_associativity_exhaustive(spec):
    basis = _basis(spec, 2)
    for u, v, w in itertools.product(basis, repeat=3):
        assert multiply(spec, multiply(spec, u, v), w) == multiply(spec, u, multiply(spec, v, w))


@pytest.mark.parametrize("spec", [FLUX2, FLUX3, Q4_SPEC])
def test_grading_and_unit(spec):
    alg = ExtensionAlgebra(spec)
    one = alg.one()
    for u, v in itertools.product(_basis(spec, 3), repeat=2):
        (wu, _), = u
        (wv, _), = v
        for word, _ in multiply(spec, u, v):
            assert alg.key_degree(word) == alg.key_degree(wu) * alg.key_degree(wv)
        assert multiply(spec, one, u) == u == multiply(spec, u, one)


def test_nilpotent_base_runs():
    spec = AlgebraSpec(Q4_SPEC.cf, BaseAlgebraSpec(1, 3))
    # slot 2 has self-factor +1, so x2^2 survives and x2^3 vanishes
    assert not normal_form(spec, [x(2), x(2)]).is_zero()
    assert normal_form(spec, [x(2), x(2), x(2)]).is_zero()
    # slot 1 has self-factor -1: its square is forced to zero
    assert normal_form(spec, [x(1), x(1)]).is_zero()


def test_same_slot_letters_follow_commutation_factor():
    spec = AlgebraSpec(from_flux(2), BaseAlgebraSpec(2, 2))
    # b^11 = -1, distinct base indices in one slot anticommute
    assert normal_form(spec, [x(1, 2), x(1, 1)]) == normal_form(spec, [x(1, 1), x(1, 2)]).scale(Scalar.const(-1, spec.qspec))
    spec3 = AlgebraSpec(from_flux(3), BaseAlgebraSpec(2, 2))
    assert normal_form(spec3, [x(1, 2), x(1, 1)]) == normal_form(spec3, [x(1, 1), x(1, 2)])


def test_base_algebra():
    g = BaseAlgebraSpec(2, 2)
    assert base_monomials(g) == [(), (1,), (2,), (1, 2)]
    assert base_multiply(g, (2,), (1,)) == (-1, (1, 2))
    assert base_multiply(g, (1,), (1,)) is None
    k3 = BaseAlgebraSpec(1, 3)
    assert base_multiply(k3, (1,), (1,)) == (1, (1, 1))
    assert base_multiply(k3, (1, 1), (1,)) is None
    with pytest.raises(StructureError):
        BaseAlgebraSpec(0)


def test_parse_and_format():
    q = Scalar.q(Q4)
    e = parse_element(Q4_SPEC, "2*q^3*x1 - x2 + q^-1 * x3 + 1")
    assert e == Element({(x(1),): 2 * q**3, (x(2),): Scalar.const(-1, Q4), (x(3),): q**-1, (): Scalar.one(Q4)})
    assert parse_element(FLUX2, "x1 + -x1").is_zero()
    assert format_element(FLUX2, Element()) == "0"
    spec = AlgebraSpec(from_flux(2), BaseAlgebraSpec(2, 2))
    assert format_element(spec, parse_element(spec, "x2_1*x1_1")) == "-1 * x1_1*x2_1"
    for bad in ("x1*", "y1", "x9", "", "x1_3"):
        with pytest.raises(ParseError):
            parse_element(FLUX2, bad)
    with pytest.raises(ParseError):
        parse_element(spec, "x1")


words = st.lists(st.sampled_from([x(1), x(2), x(3)]), max_size=7)


@settings(max_examples=80, deadline=None)
@given(words, words)
def test_multiplication_agrees_with_concatenation(w1, w2):
    for spec in (FLUX3, Q4_SPEC):
        u, v = normal_form(spec, w1), normal_form(spec, w2)
        assert multiply(spec, u, v) == normal_form(spec, w1 + w2)
