import itertools

import pytest

from gradex.algebra import AlgebraSpec, BaseAlgebraSpec, Element, ExtensionAlgebra, Letter, parse_element
from gradex.bicharacter import CommutationFactor, eval_factor, from_flux
from gradex.hopf import (
    FullExtension,
    GroupAlgebraElement,
    action_checks,
    antipode,
    coaction,
    coinvariants,
    coproduct,
    counit,
    hopf_module_check,
    is_coinvariant,
    left_action,
    module_basis,
    right_action,
)
from gradex.kernel import GroupElement, QSpec, Scalar, StructureError, group_compose

FLUX2 = AlgebraSpec(from_flux(2))
FLUX3 = AlgebraSpec(from_flux(3))
Z42 = AlgebraSpec(CommutationFactor(((0, 1), (1, 0)), ((0, 1), (-1, 0)), QSpec.root_of_unity(4), 4))


def test_group_hopf_structure():
    cf = FLUX3.cf
    g1 = cf.generator(1)
    assert coproduct(g1) == (g1, g1)
    assert all(counit(g) == 1 for g in cf.elements())
    assert antipode(g1) == g1
    z = Z42.cf.generator(1)
    assert antipode(z) == GroupElement((3, 0), 4)


def test_group_algebra_element_axioms():
    qs = Z42.qspec
    cf = Z42.cf
    for g in cf.elements():
        x = GroupAlgebraElement.of(g, qs)
        # m (S (x) id) Delta = eta eps
        ((a, b),) = x.coproduct()
        assert GroupAlgebraElement.of(antipode(a), qs) * GroupAlgebraElement.of(b, qs) == GroupAlgebraElement.of(cf.identity(), qs)
        assert x.counit(qs) == 1
        assert x.antipode().antipode() == x


def test_coaction_examples():
    alg = ExtensionAlgebra(FLUX3)
    x1 = parse_element(FLUX3, "x1")
    assert coaction(FLUX3, x1).pairs == [(x1, FLUX3.cf.generator(1))]
    assert coaction(FLUX3, alg.one()).pairs == [(alg.one(), FLUX3.cf.identity())]
    x12 = parse_element(FLUX3, "x1*x2")
    assert coaction(FLUX3, x12).pairs == [(x12, GroupElement((1, 1, 0), 2))]
    mixed = parse_element(FLUX3, "x1 + x2 + 1")
    assert len(coaction(FLUX3, mixed).pairs) == 3


def test_right_action_examples():
    ext = FullExtension(FLUX3)
    cf = FLUX3.cf
    v = ext.vector((1,), cf.generator(1))
    assert right_action(v, cf.generator(2)) == ext.vector((1,), GroupElement((1, 1, 0), 2))
    assert right_action(v, cf.identity()) == v
    assert right_action(v, cf.generator(1)) == ext.vector((1,), cf.identity())


def test_left_action_examples():
    ext = FullExtension(FLUX2)
    cf = FLUX2.cf
    minus = Scalar.const(-1, FLUX2.qspec)
    v = ext.vector((1,), cf.generator(1))
    assert left_action(cf, cf.generator(1), v) == ext.vector((1,), cf.identity(), minus)
    assert left_action(cf, cf.identity(), v) == v
    assert left_action(cf, cf.generator(2), v) == ext.vector((1,), GroupElement((1, 1), 2))


def test_hopf_module_check():
    rep = hopf_module_check(FLUX3)
    assert rep.passed and rep.checks[0].checked == 8 * 8
    rep = hopf_module_check(AlgebraSpec(from_flux(3), BaseAlgebraSpec(2)))
    assert rep.passed and rep.checks[0].checked == 8 * 8 * 2
    assert hopf_module_check(FLUX2).passed
    assert hopf_module_check(Z42).passed
    assert hopf_module_check(FLUX2, basis=module_basis(FLUX2, full=True)).passed


def test_trivial_structures_only_compatible_at_identity():
    qs = FLUX2.qspec
    basis = [Element({("x1",): Scalar.one(qs)}), Element({("x2",): Scalar.one(qs)})]
    e = FLUX2.cf.identity()
    rep = hopf_module_check(
        FLUX2,
        basis=basis,
        action=lambda m, h: m.scale(counit(h, qs)),
        coaction_map=lambda m: {(k, e): c for k, c in m.terms.items()},
    )
    # delta(x <| h) = x (x) e but x_(0) <| h (x) x_(1) h = x (x) h: only h = e is compatible
    check = rep.checks[0]
    assert check.checked == 2 * 4
    assert len(check.failures) == 2 * 3
    assert not any("h=e" in f for f in check.failures)


def test_hopf_module_check_detects_broken_action():
    # an action that ignores h breaks the right-module-map axiom
    rep = hopf_module_check(FLUX2, action=lambda m, h: m)
    assert not rep.passed


def test_hopf_module_check_needs_finite_group():
    spec = AlgebraSpec(CommutationFactor(((0,),), ((0,),), QSpec.formal(), 0))
    with pytest.raises(StructureError):
        hopf_module_check(spec)


@pytest.mark.parametrize("spec", [FLUX2, FLUX3, Z42])
def test_action_properties(spec):
    assert action_checks(spec).passed
    assert action_checks(spec, full=True).passed


def test_literal_bimodule_commutation_fails_when_factor_nontrivial():
    # h |> (m <| k) and (h |> m) <| k differ by b(k, h); with b(xi1, xi1) = -1 they differ.
    cf = FLUX2.cf
    ext = FullExtension(FLUX2)
    m = ext.vector((1,), cf.identity())
    h = k = cf.generator(1)
    assert left_action(cf, h, right_action(m, k)) == right_action(left_action(cf, h, m), k).scale(eval_factor(cf, k, h))
    assert left_action(cf, h, right_action(m, k)) != right_action(left_action(cf, h, m), k)


def test_coinvariants():
    ext = FullExtension(FLUX2)
    cf = FLUX2.cf
    e = cf.identity()
    one, theta, x1 = ext.vector((), e), ext.vector((1,), e), ext.vector((1,), cf.generator(1))
    assert coinvariants(ext, [one, theta, x1]) == [one, theta]
    assert coinvariants(ext, module_basis(FLUX2, full=True)) == [one, theta]
    assert coinvariants(ext, [x1]) == []
    alg = ExtensionAlgebra(FLUX2)
    assert coinvariants(FLUX2, [parse_element(FLUX2, "1 + x1")]) == [alg.one()]
    for c in coinvariants(ext, module_basis(FLUX2, full=True)):
        assert is_coinvariant(ext, c)
        assert coaction(ext, c).pairs == [(c, e)]
    assert not is_coinvariant(ext, x1)
