import random
from fractions import Fraction

import pytest

from incalg.algebra import convolve, delta, invert, mobius, zeta
from incalg.errors import (Mismatch, NotAPartition, NotConstantOnTypes,
                           NotInvertible, RepresentativeDisagreement)
from incalg.poset import build_preorder, poset_automorphisms, quotient
from incalg.reduced import (ReducedElem, check_order_compatible, coefficients,
                            lift, project, reduced_convolve, reduced_delta,
                            reduced_zeta, standard_types)
from incalg.rings import RingElem, format_elem

from conftest import random_function


def _chain(n):
    return build_preorder(n, [(i, i + 1) for i in range(n - 1)])


def test_chain_types(QQ):
    for n in range(1, 8):
        red = standard_types(quotient(_chain(n)))
        assert len(red.types) == n  # point plus one type per length
        point = red.types[0]
        assert point.cls == "T0" and len(point.members) == n


def test_diamond_types(diamond):
    red = standard_types(quotient(diamond))
    kinds = [(t.cls, len(t.members)) for t in red.types]
    assert kinds == [("T0", 4), ("T1", 4), ("T1", 1)]
    assert red.types[1].representative == (0, 1)
    assert red.types[2].representative == (0, 3)


def test_antichain_types(antichain3):
    red = standard_types(quotient(antichain3))
    assert len(red.types) == 1 and red.types[0].cls == "T0"


def test_square_types(square):
    red = standard_types(quotient(square))
    # points and 2-chains only: no interval contains a third element
    assert [(t.cls, len(t.members)) for t in red.types] == [("T0", 4), ("T1", 4)]


def test_standard_partition_is_order_compatible(corpus):
    for p in corpus[::8]:
        q = quotient(p)
        red = standard_types(q)
        ok, witness = check_order_compatible(q, [t.members for t in red.types])
        assert ok and witness is None


def test_merging_point_with_chain_is_incompatible(chain3):
    q = quotient(chain3)
    blocks = [[(0, 0), (1, 1), (2, 2), (0, 1)], [(1, 2)], [(0, 2)]]
    ok, witness = check_order_compatible(q, blocks)
    assert not ok and witness is not None


def test_partition_must_cover(chain3):
    q = quotient(chain3)
    with pytest.raises(NotAPartition):
        check_order_compatible(q, [[(0, 0)]])


def test_diamond_refinement_is_compatible(diamond):
    q = quotient(diamond)
    # split the 2-chain type into those above 0 and the rest
    blocks = [[(0, 0), (1, 1), (2, 2), (3, 3)],
              [(0, 1), (0, 2)], [(1, 3), (2, 3)], [(0, 3)]]
    ok, witness = check_order_compatible(q, blocks)
    assert ok


def test_chain_coefficients(QQ):
    red = standard_types(quotient(_chain(5)))
    table = coefficients(red)
    # type id == chain length for the standard order on chains
    for (t, r, s), count in table.entries:
        assert count == 1 and r + s == t
    # every split occurs
    keys = {k for k, _ in table.entries}
    assert all((t, r, t - r) in keys for t in range(5) for r in range(t + 1))


def test_diamond_coefficients(diamond):
    red = standard_types(quotient(diamond))
    table = coefficients(red)
    assert table.at(2, 1, 1) == 2  # [diamond; 2-chain, 2-chain]
    assert table.at(2, 0, 2) == 1 and table.at(2, 2, 0) == 1
    assert table.at(1, 0, 1) == 1 and table.at(1, 1, 0) == 1


def test_point_coefficients_always_one(corpus):
    for p in corpus[::10]:
        red = standard_types(quotient(p))
        table = coefficients(red)
        point_ids = [t.id for t in red.types if t.cls == "T0"]
        for t in red.types:
            assert sum(table.at(t.id, r, t.id) for r in point_ids) == 1
            assert sum(table.at(t.id, t.id, s) for s in point_ids) == 1


def test_refining_two_chains_stays_compatible(square):
    # 2-chain intervals have no internal structure, so any regrouping of
    # them alone remains order-compatible
    q = quotient(square)
    red = standard_types(q)
    blocks = [red.types[0].members, [(0, 2)], [(0, 3), (1, 2), (1, 3)]]
    ok, _ = check_order_compatible(q, blocks)
    assert ok


def test_incompatible_partition_reports_disagreement(QQ):
    # on the 4-chain, merge the length-2 intervals with the length-3 one:
    # sizes differ, so no compatible bijection exists, and the incidence
    # counts disagree between representatives
    p = _chain(4)
    q = quotient(p)
    red = standard_types(q)
    points = red.types[0].members
    ones = red.types[1].members
    merged = red.types[2].members + red.types[3].members
    ok, witness = check_order_compatible(q, [points, list(ones), list(merged)])
    assert not ok and witness is not None

    from incalg.reduced import IntervalType, Reduction
    types = (IntervalType(0, "T0", red.types[0].certificate, points[0],
                          tuple(points)),
             IntervalType(1, "T1", red.types[1].certificate, ones[0],
                          tuple(ones)),
             IntervalType(2, "T1", red.types[2].certificate, merged[0],
                          tuple(merged)))
    assignment = {pair: t.id for t in types for pair in t.members}
    bad = Reduction(q, types, tuple(sorted(assignment.items())))
    with pytest.raises(RepresentativeDisagreement):
        coefficients(bad)


def test_reduced_delta_is_identity(QQ, diamond):
    red = standard_types(quotient(diamond))
    table = coefficients(red)
    rng = random.Random(41)
    a = ReducedElem(QQ, tuple(RingElem.scalar(QQ, Fraction(rng.randrange(-5, 6)))
                              for _ in red.types))
    d = reduced_delta(red, QQ)
    assert reduced_convolve(d, a, table) == a
    assert reduced_convolve(a, d, table) == a


def test_chain_reduction_is_power_series(QQ):
    n = 6
    red = standard_types(quotient(_chain(n)))
    table = coefficients(red)
    rng = random.Random(42)
    f = tuple(RingElem.scalar(QQ, Fraction(rng.randrange(-4, 5), rng.randrange(1, 4)))
              for _ in range(n))
    g = tuple(RingElem.scalar(QQ, Fraction(rng.randrange(-4, 5), rng.randrange(1, 4)))
              for _ in range(n))
    h = reduced_convolve(ReducedElem(QQ, f), ReducedElem(QQ, g), table)
    for k in range(n):
        want = sum((f[i] * g[k - i] for i in range(k + 1)), RingElem.zero(QQ))
        assert h.values[k] == want


def test_lift_project_round_trip(QQ, diamond):
    red = standard_types(quotient(diamond))
    z = reduced_zeta(red, QQ)
    assert lift(z, red) == zeta(diamond, QQ)
    assert project(zeta(diamond, QQ), red) == z
    mu = mobius(diamond, QQ)
    pm = project(mu, red)
    assert [format_elem(v) for v in pm.values] == ["1", "-1", "1"]
    assert lift(pm, red) == mu


def test_project_rejects_non_constant(QQ, diamond):
    red = standard_types(quotient(diamond))
    from incalg.algebra import e_unit
    with pytest.raises(NotConstantOnTypes):
        project(e_unit(diamond, QQ, 0, 1), red)


def test_subalgebra_closure(QQ, F7, corpus):
    rng = random.Random(43)
    for p in corpus[::7]:
        q = quotient(p)
        red = standard_types(q)
        table = coefficients(red)
        for spec in (QQ, F7):
            for _ in range(10):
                a = ReducedElem(spec, tuple(
                    RingElem.scalar(spec, rng.randrange(7))
                    for _ in red.types))
                b = ReducedElem(spec, tuple(
                    RingElem.scalar(spec, rng.randrange(7))
                    for _ in red.types))
                assert lift(reduced_convolve(a, b, table), red) == \
                    convolve(lift(a, red), lift(b, red))


def test_unit_group_compatibility(QQ, diamond):
    red = standard_types(quotient(diamond))
    rng = random.Random(44)
    for _ in range(20):
        vals = [RingElem.scalar(QQ, Fraction(rng.randrange(-3, 4)))
                for _ in red.types]
        a = ReducedElem(QQ, tuple(vals))
        la = lift(a, red)
        try:
            inv = invert(la)
        except NotInvertible:
            # diagonal (point-type) value must have been zero
            assert a.values[0].is_zero()
            continue
        # the inverse of an invertible lift projects back
        back = project(inv, red)
        assert lift(back, red) == inv


def test_coefficients_invariant_under_automorphisms(square):
    q = quotient(square)
    red = standard_types(q)
    table = coefficients(red)
    for tau in poset_automorphisms(q):
        relabeled = [[tuple(sorted((tau[x], tau[y])) if False else (tau[x], tau[y]))
                      for (x, y) in t.members] for t in red.types]
        # relabeled blocks give the same partition, hence the same table
        ok, _ = check_order_compatible(q, relabeled)
        assert ok
        assert sorted(sorted(b) for b in relabeled) == \
            sorted(sorted(t.members) for t in red.types)


def test_reduced_mismatch(QQ, F7, diamond):
    red = standard_types(quotient(diamond))
    table = coefficients(red)
    a = reduced_zeta(red, QQ)
    b = reduced_zeta(red, F7)
    with pytest.raises(Mismatch):
        reduced_convolve(a, b, table)
