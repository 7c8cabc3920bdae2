"""Groebner engine: bases, normal forms, syzygies, colon, saturation, Fitting."""

import random

import pytest

from logtangent.groebner import (
    Submodule,
    _as_vectors,
    annihilator_of_cokernel,
    fitting_ideal_0,
    groebner_basis,
    ideal_colon,
    ideal_contains,
    ideal_equals,
    ideal_groebner,
    ideal_intersection,
    kernel_of_map,
    module_colon,
    normal_form,
    saturate_ideal,
    spoly_reduces_to_zero,
    syzygy_basis,
)
from logtangent.modules import FreeModule, Vector, apply_columns
from logtangent.sequences import Sequence


def vecs(ring, polys):
    return _as_vectors(ring, polys)


def test_monomial_ideal_is_its_own_basis(qq4):
    gens = [qq4.variable(0), qq4.variable(1)]
    gb = ideal_groebner(qq4, gens)
    assert gb == [qq4.variable(1), qq4.variable(0)] or gb == gens


def test_spairs_reduce_to_zero_on_twisted_cubic_style_ideal(qq4):
    gens = [qq4.parse("x0^2 - x1*x2"), qq4.parse("x0*x1 - x2^2")]
    gb = ideal_groebner(qq4, gens)
    assert spoly_reduces_to_zero(vecs(qq4, gb))
    # the original generators stay in the ideal
    for g in gens:
        assert ideal_contains(qq4, gb, g)


def test_singleton_module_is_groebner(qq4):
    F = FreeModule(qq4, (0, 0))
    v = Vector(F, (qq4.parse("x0^2"), qq4.parse("x1*x2")))
    assert groebner_basis([v]) == [v]


def test_normal_form_membership_and_coprime(qq4):
    gb = vecs(qq4, [qq4.variable(0)])
    F = gb[0].module
    assert normal_form(Vector(F, (qq4.parse("x0^2"),)), gb).is_zero()
    x1 = Vector(F, (qq4.variable(1),))
    assert normal_form(x1, gb) == x1


def test_normal_form_idempotent_on_randoms(qq4):
    rng = random.Random(42)
    gb = vecs(qq4, ideal_groebner(qq4, [qq4.parse("x0^2 - x1*x2"), qq4.parse("x1^3 - x3^3")]))
    F = gb[0].module
    for _ in range(15):
        v = Vector(F, (qq4.random_homogeneous(rng.randint(0, 4), rng),))
        r1 = normal_form(v, gb)
        assert normal_form(r1, gb) == r1


def test_normal_form_rejects_parent_mismatch(qq4):
    gb = vecs(qq4, [qq4.variable(0)])
    other = FreeModule(qq4, (1,))
    with pytest.raises(ValueError):
        normal_form(Vector(other, (qq4.variable(0),)), gb)


def test_koszul_syzygy(qq4):
    module, syz = syzygy_basis(vecs(qq4, [qq4.variable(0), qq4.variable(1)]))
    assert module.twists == (1, 1)
    assert len(syz) == 1
    entries = syz[0].entries
    assert {str(entries[0]), str(entries[1])} in ({"-x1", "x0"}, {"x1", "-x0"})


def test_syzygies_annihilate_their_generators(qq4):
    rng = random.Random(99)
    for _ in range(10):
        gens = [qq4.random_homogeneous(rng.randint(1, 3), rng) for _ in range(3)]
        gens = [g for g in gens if not g.is_zero()]
        if len(gens) < 2:
            continue
        gvecs = vecs(qq4, gens)
        _, syz = syzygy_basis(gvecs)
        for s in syz:
            assert apply_columns(gvecs, s.entries).is_zero()


def test_syzygy_of_single_generator_is_zero(qq4):
    _, syz = syzygy_basis(vecs(qq4, [qq4.parse("x0^2 - x1*x3")]))
    assert syz == []


def test_pair_jacobian_syzygy_membership(qq4):
    # the displayed degree-one syzygy (x3, 0, x1, 0) of the worked example
    seq = Sequence.parse(qq4, "2*x1*x3 - x1^2", "3*x2*x3^2 - 3*x0*x1*x3 + x1^3")
    columns = seq.jacobian_columns()
    source = seq.source_module()
    kernel = Submodule(source, kernel_of_map(columns, source))
    v = Vector(source, (qq4.variable(3), qq4.zero(), qq4.variable(1), qq4.zero()))
    assert kernel.contains(v)
    degrees = sorted(g.degree for g in kernel.gens)
    assert degrees[0] == 1


def test_kernel_of_identity_is_zero(qq4):
    F = FreeModule(qq4, (0, 0))
    assert kernel_of_map([F.basis_vector(0), F.basis_vector(1)], F) == []


def test_kernel_of_zero_map_is_everything(qq4):
    F = FreeModule(qq4, (0, 0, 0))
    ker = kernel_of_map([F.zero(), F.zero(), F.zero()], F)
    assert ker == [F.basis_vector(i) for i in range(3)]


def test_kernel_detects_unused_variable(qq4):
    seq = Sequence.parse(qq4, "x0*(x1 - x2)", "x0^3 + x1^3 + x2^3")
    source = seq.source_module()
    kernel = Submodule(source, kernel_of_map(seq.jacobian_columns(), source))
    assert kernel.contains(source.basis_vector(3))


def test_kernel_rejects_inhomogeneous_matrix(qq4):
    F = FreeModule(qq4, (0, 0))
    target = FreeModule(qq4, (0,))
    cols = [
        Vector(target, (qq4.variable(0),)),
        Vector(target, (qq4.parse("x1^2"),)),  # degree 2 against source twist 0... fine
    ]
    with pytest.raises(ValueError):
        kernel_of_map(cols, FreeModule(qq4, (1, 1)))


def test_ideal_colon_examples(qq4):
    assert ideal_equals(
        qq4, ideal_colon(qq4, [qq4.parse("x0^2")], qq4.variable(0)), [qq4.variable(0)]
    )
    got = ideal_colon(qq4, [qq4.parse("x0*x1")], qq4.variable(2))
    assert ideal_equals(qq4, got, [qq4.parse("x0*x1")])
    with pytest.raises(ValueError):
        ideal_colon(qq4, [qq4.variable(0)], qq4.zero())


def test_annihilator_of_cyclic_module(qq4):
    F = FreeModule(qq4, (0,))
    f = qq4.parse("x0^3 - x1*x2*x3")
    ann = annihilator_of_cokernel(F, [Vector(F, (f,))])
    assert ideal_equals(qq4, ann, [f])


def test_module_colon_by_basis_vector(qq4):
    F = FreeModule(qq4, (0, 0))
    gens = [
        Vector(F, (qq4.parse("x0"), qq4.zero())),
        Vector(F, (qq4.zero(), qq4.parse("x1"))),
    ]
    colon = module_colon(gens, F.basis_vector(0))
    assert ideal_equals(qq4, colon, [qq4.variable(0)])


def test_saturation_strips_irrelevant_factor(qq4):
    gens = [qq4.parse(t) for t in ("x0^2", "x0*x1", "x0*x2", "x0*x3")]
    sat = saturate_ideal(qq4, gens)
    assert ideal_equals(qq4, sat, [qq4.variable(0)])


def test_saturation_is_idempotent(qq4):
    gens = [qq4.parse("x0^2 - x1*x2"), qq4.parse("x2^3")]
    once = saturate_ideal(qq4, gens)
    assert saturate_ideal(qq4, once) == once


def test_saturated_annihilator_of_worked_example(qq4):
    seq = Sequence.parse(qq4, "2*x1*x3 - x1^2", "3*x2*x3^2 - 3*x0*x1*x3 + x1^3")
    ann = annihilator_of_cokernel(seq.jacobian_target(), seq.jacobian_columns())
    sat = saturate_ideal(qq4, ann)
    expected = [qq4.parse(s) for s in ("x3^2", "x1*x3", "x0*x1^2 - x1^3")]
    assert ideal_equals(qq4, sat, expected)


def test_fitting_ideal_of_diagonal(qq4):
    m = [
        [qq4.variable(0), qq4.zero()],
        [qq4.zero(), qq4.variable(1)],
    ]
    fitt = fitting_ideal_0([[m[i][j] for j in range(2)] for i in range(2)])
    assert ideal_equals(qq4, fitt, [qq4.parse("x0*x1")])


def test_fitting_ideal_with_unit_row_is_whole_ring(qq4):
    m = [
        [qq4.one(), qq4.zero(), qq4.zero(), qq4.zero()],
        [qq4.zero(), qq4.one(), qq4.variable(2), qq4.variable(3)],
    ]
    fitt = fitting_ideal_0(m)
    assert ideal_contains(qq4, ideal_groebner(qq4, fitt), qq4.one())


def test_fitting_ideal_requires_wide_matrix(qq4):
    with pytest.raises(ValueError):
        fitting_ideal_0([[qq4.variable(0)], [qq4.variable(1)], [qq4.variable(2)]])


def test_fitting_saturation_of_worked_example(qq4):
    seq = Sequence.parse(qq4, "2*x1*x3 - x1^2", "3*x2*x3^2 - 3*x0*x1*x3 + x1^3")
    fitt = fitting_ideal_0(seq.gradient_rows())
    sat = saturate_ideal(qq4, fitt)
    expected = [
        qq4.parse(s)
        for s in (
            "x3^3",
            "x1*x3^2",
            "x1^2*x3",
            "x0*x1^2 - x1^3 - 2*x1*x2*x3 + 2*x2*x3^2",
        )
    ]
    assert ideal_equals(qq4, sat, expected)


def test_fitting_contained_in_annihilator_on_fixture(qq4):
    seq = Sequence.parse(qq4, "x0*x1 - x2*x3", "x1*x3*(x0 - x2)")
    fitt = fitting_ideal_0(seq.gradient_rows())
    ann = ideal_groebner(
        qq4, annihilator_of_cokernel(seq.jacobian_target(), seq.jacobian_columns())
    )
    for p in fitt:
        assert ideal_contains(qq4, ann, p)


def test_ideal_intersection(qq4):
    inter = ideal_intersection(qq4, [qq4.variable(0)], [qq4.variable(1)])
    assert ideal_equals(qq4, inter, [qq4.parse("x0*x1")])


def test_groebner_bases_are_deterministic(fp4):
    rng1, rng2 = random.Random(3), random.Random(3)
    gens1 = [fp4.random_homogeneous(2, rng1) for _ in range(3)]
    gens2 = [fp4.random_homogeneous(2, rng2) for _ in range(3)]
    assert ideal_groebner(fp4, gens1) == ideal_groebner(fp4, gens2)


def test_submodule_equality_via_bases(qq4):
    F = FreeModule(qq4, (0,))
    a = Submodule(F, vecs(qq4, [qq4.parse("x0"), qq4.parse("x0 + x1")]))
    b = Submodule(F, vecs(qq4, [qq4.parse("x1"), qq4.parse("x0 - 2*x1")]))
    assert a == b
