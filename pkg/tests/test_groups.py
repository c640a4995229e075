import pytest

from cubicsym import corpus
from cubicsym.cyclo import CycNum, zeta
from cubicsym.forms import CycMatrix, fixes
from cubicsym.groups import (CapExceeded, MatGroup, closure, eigen_multisets,
                             is_abelian, is_semi_permutation, is_special,
                             projective_order, scalar_subgroup)


def klein_generators():
    rec = corpus.record("X20")
    return list(rec.generators)


def test_scalar_group_of_order_three():
    g = closure([CycMatrix.scalar(7, zeta(3))])
    assert g.order == 3
    assert scalar_subgroup(g) == 3
    assert projective_order(g) == 1


def test_klein_closure_and_lift():
    d, p = klein_generators()
    g = closure([d, p])
    assert g.order == 301
    assert scalar_subgroup(g) == 1
    assert projective_order(g) == 301
    lifted = closure([d, p, CycMatrix.scalar(7, zeta(3))])
    assert lifted.order == 903
    assert projective_order(lifted) == 301
    assert scalar_subgroup(lifted) == 3


def test_closure_generator_set_independence():
    d, p = klein_generators()
    a = closure([d, p])
    b = closure([p, d])
    c = closure([d * p, p])  # another generating set of the same group
    assert set(a.elements) == set(b.elements) == set(c.elements)


def test_cap_exceeded_carries_partial_count():
    d, p = klein_generators()
    with pytest.raises(CapExceeded) as ex:
        closure([d, p], cap=50)
    assert ex.value.count > 50


def test_closure_rejects_singular_generator():
    z = CycNum.zero(1)
    bad = CycMatrix([[CycNum.one(1), z], [z, z]], 1)
    with pytest.raises(ValueError):
        closure([bad])


def test_predicates():
    d, p = klein_generators()
    g = MatGroup([d, p])
    assert is_semi_permutation(g)
    assert not is_abelian(g)
    assert is_abelian(MatGroup([d]))
    rec = corpus.record("X2")
    dft = rec.generators[2]  # the 1/sqrt3 Fourier block
    assert not is_semi_permutation(MatGroup([dft]))


def test_eigen_multisets_and_special():
    w = zeta(3)
    one = CycNum.one(3)
    forbidden = closure([CycMatrix.diagonal([w, w] + [one] * 5)])
    assert not is_special(forbidden)
    seven_cycle = closure([CycMatrix.permutation([1, 2, 3, 4, 5, 6, 0])])
    assert is_special(seven_cycle)
    trivial = closure([CycMatrix.identity(7)])
    assert is_special(trivial)
    ms = eigen_multisets(closure([CycMatrix.diagonal([w, w] + [one] * 5)]))
    assert {tuple(sorted(v for v in m.values())) for m in ms} == {(7,), (2, 5)}
    with pytest.raises(ValueError):
        is_special(closure([CycMatrix.identity(6)]))


def test_m96_group_scalars():
    s = [CycNum.one(32), zeta(4, 3).embed(32), zeta(8, 5).embed(32),
         zeta(16, 3).embed(32), zeta(32, 13)]
    z = CycNum.zero(32)
    rows = []
    for i in range(7):
        row = [z] * 7
        if i < 5:
            row[i] = s[i]
        rows.append(row)
    rows[5][6] = CycNum.one(32)
    rows[6][5] = CycNum.one(32)
    a1 = CycMatrix(rows, 32)
    a2 = CycMatrix.diagonal([CycNum.one(3)] * 5 + [zeta(3), zeta(3, 2)])
    base = closure([a1, a2])
    assert base.order == 96  # the C3 x C32 image of the order-96 candidate
    extended = closure([a1, a2, CycMatrix.scalar(7, zeta(3))])
    assert scalar_subgroup(extended) == 3
    assert extended.order == 288
    # a pure permutation group has trivial scalar subgroup
    assert scalar_subgroup(closure([CycMatrix.permutation([1, 2, 3, 4, 5, 6, 0])])) == 1


def test_projective_order_arithmetic_d_times_order():
    # |<G, xi_3 I>| = 3|G| for a scalar-free G
    rec = corpus.record("X17")
    g = closure(rec.generators)
    assert scalar_subgroup(g) == 1 and g.order == 144
    lifted = closure(list(rec.generators) + [CycMatrix.scalar(7, zeta(3))])
    assert lifted.order == 3 * g.order
    assert projective_order(lifted) == 144


def test_lagrange_sanity_against_published_orders():
    for rid in ("X3", "X5", "X8", "X10", "X11", "X15", "X17", "X18", "X19", "X20"):
        rec = corpus.record(rid)
        g = closure(rec.generators)
        assert rec.projective_order % projective_order(g) == 0


def test_elements_fix_the_paired_form():
    for rid in ("X20", "X17", "X5", "X10", "X19"):
        rec = corpus.record(rid)
        g = closure(rec.generators)
        assert all(fixes(a, rec.form) for a in g.elements)


def test_group_file_round_trip():
    d, p = klein_generators()
    g = MatGroup([d, p])
    back = MatGroup.parse(g.encode())
    assert back.dimension == 7
    assert back.generators == tuple(x.lift(back.conductor) for x in g.generators)
