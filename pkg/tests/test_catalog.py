"""Constructor shapes, family tables, gadgets, and lift operators."""

import math

import pytest
from hypothesis import given, strategies as st

from hamsq.catalog import (
    FamilyId,
    LiftSpec,
    attach_pendant_at_degree,
    complete,
    complete_bipartite,
    complete_minus_edge,
    complete_plus_pendant,
    cycle,
    cycle_plus_pendant,
    describe,
    double_broom,
    double_star,
    family,
    friendship,
    gadget,
    lift_minus,
    lift_plus,
    lift_plus_t,
    load_gadget_file,
    matching,
    named,
    path,
    prism,
    spider,
    split_star,
    squared_cycle_complement,
    star,
    star_pendant,
    star_plus_edge,
    terminal_cores,
    wheel,
)
from hamsq.core import PlacementSpec, delete_pattern_edges, disjoint_union
from hamsq.errors import GadgetUnavailableError, GraphConstructionError
from hamsq.iso import embeds, is_isomorphic

from conftest import graphs


# -- constructor shapes ------------------------------------------------------


def test_star_order_convention():
    s = star(7)
    assert s.order == 7
    assert s.edge_count() == 6
    assert sorted(s.degrees()) == [1] * 6 + [6]


def test_friendship_shape():
    f = friendship(5)
    assert f.order == 5
    assert f.edge_count() == 6
    assert sorted(f.degrees()) == [2, 2, 2, 2, 4]
    with pytest.raises(GraphConstructionError):
        friendship(6)


@pytest.mark.parametrize("n", [5, 7, 9, 13])
def test_friendship_edge_identity(n):
    assert friendship(n).edge_count() == 3 * (n // 2)


@pytest.mark.parametrize("n", [4, 5, 6, 9])
def test_wheel_edge_identity(n):
    w = wheel(n)
    assert w.order == n
    assert w.edge_count() == 2 * (n - 1)


@pytest.mark.parametrize("n,k", [(5, 2), (6, 2), (9, 3), (7, 1), (6, 6)])
def test_split_star_edge_identity(n, k):
    g = split_star(n, k)
    assert g.order == n
    assert g.edge_count() == k * (k - 1) // 2 + k * (n - k)


def test_split_star_degenerate_cases():
    assert is_isomorphic(split_star(6, 1), star(6))
    assert is_isomorphic(split_star(5, 5), complete(5))


def test_double_star_p4():
    assert is_isomorphic(double_star(1, 1), path(4))


def test_double_star_shape():
    t = double_star(3, 2)
    assert t.order == 7
    assert t.edge_count() == 6
    assert sorted(t.degrees()) == [1, 1, 1, 1, 1, 3, 4]


def test_spider_shapes():
    t = spider(1, 1, 2)
    assert t.order == 5 and t.edge_count() == 4
    assert is_isomorphic(t, double_star(2, 1))
    assert sorted(spider(2, 2, 2).degrees()) == [1, 1, 1, 2, 2, 2, 3]
    with pytest.raises(GraphConstructionError):
        spider(1, 2)
    with pytest.raises(GraphConstructionError):
        spider(0, 1, 1)


def test_spider_leg_order_irrelevant():
    assert spider(3, 1, 2) == spider(1, 2, 3)


def test_star_variants():
    sp = star_pendant(5)
    assert sp.order == 6 and sp.edge_count() == 5
    assert is_isomorphic(sp, spider(1, 1, 1, 2))
    se = star_plus_edge(5)
    assert se.order == 5 and se.edge_count() == 5
    assert sorted(se.degrees()) == [1, 1, 2, 2, 4]


def test_matching_and_paths():
    m = matching(3)
    assert m.order == 6 and m.edge_count() == 3
    assert path(1).order == 1
    with pytest.raises(GraphConstructionError):
        cycle(2)


def test_double_broom_small_cases():
    d6 = double_broom(6)
    assert is_isomorphic(d6, double_star(2, 2))
    d7 = double_broom(7)
    assert d7.order == 7 and d7.edge_count() == 6
    assert sorted(d7.degrees()) == [1, 1, 1, 1, 2, 3, 3]


def test_plus_minus_constructors():
    assert complete_minus_edge(4).edge_count() == 5
    kp = complete_plus_pendant(3)
    assert kp.order == 4 and kp.edge_count() == 4
    cp = cycle_plus_pendant(4)
    assert cp.order == 5 and cp.edge_count() == 5
    pr = prism()
    assert pr.order == 6 and pr.edge_count() == 9
    assert set(pr.degrees()) == {3}


# -- the standard host -------------------------------------------------------


def test_host_small_cases():
    assert is_isomorphic(squared_cycle_complement(6), matching(3))
    assert is_isomorphic(squared_cycle_complement(7), cycle(7))


@pytest.mark.parametrize("n", [8, 11, 14, 20])
def test_host_regularity(n):
    h = squared_cycle_complement(n)
    assert set(h.degrees()) == {n - 5}
    assert h.edge_count() == n * (n - 5) // 2


def test_host_contains_double_brooms_at_8():
    h = squared_cycle_complement(8)
    assert embeds(double_broom(6), h)
    assert embeds(double_broom(7), h)


def test_extremal_placement_edge_count():
    # complete graph minus a star's edges: the edge-count optimum at n >= 15
    n = 20
    g = delete_pattern_edges(PlacementSpec(n, star(n - 3)))
    assert g.edge_count() == n * (n - 1) // 2 - (n - 4)


# -- gadgets -----------------------------------------------------------------


def test_attach_pendant_basics():
    g2 = gadget("G2")
    g3 = gadget("G3")
    g4 = gadget("G4")
    assert {g.order for g in (g2, g3, g4)} == {5}
    assert {g.edge_count() for g in (g2, g3, g4)} == {5}
    codes = {describe(g) for g in (g2, g3, g4)}
    assert len(codes) == 3


def test_attach_pendant_ambiguous_rejected():
    with pytest.raises(GraphConstructionError):
        attach_pendant_at_degree(double_star(2, 1), 1)
    with pytest.raises(GraphConstructionError):
        attach_pendant_at_degree(complete(3), 5)


def test_gadget_g16_is_double_star():
    assert is_isomorphic(gadget("G16"), double_star(3, 2))


def test_gadget_g17_two_pendants_on_cycle():
    g = gadget("G17")
    assert g.order == 6 and g.edge_count() == 6
    assert sorted(g.degrees()) == [1, 1, 2, 2, 2, 4]


def test_gadget_g30_g31():
    g30 = gadget("G30")
    assert g30.order == 6 and g30.edge_count() == 7
    assert max(g30.degrees()) == 5
    g31 = gadget("G31")
    assert g31.order == 6 and g31.edge_count() == 7
    assert max(g31.degrees()) == 5
    assert not is_isomorphic(g30, g31)


def test_gadget_unknown_name():
    with pytest.raises(GadgetUnavailableError) as ei:
        gadget("G25", gadgets={})
    assert ei.value.names == ("G25",)


def test_gadget_file_roundtrip(tmp_path):
    from hamsq.core import encode_graph6

    p = tmp_path / "g.g6"
    p.write_text(f"# comment\nX1\t{encode_graph6(prism())}\n\nX2\t{encode_graph6(star(4))}\n")
    table = load_gadget_file(p)
    assert set(table) == {"X1", "X2"}
    assert is_isomorphic(table["X1"], prism())
    bad = tmp_path / "bad.g6"
    bad.write_text("oops\n")
    with pytest.raises(GraphConstructionError):
        load_gadget_file(bad)


def test_gadget_env_override(tmp_path, monkeypatch):
    from hamsq.catalog import default_gadget_path

    p = tmp_path / "alt.g6"
    p.write_text("")
    monkeypatch.setenv("HAMSQ_GADGETS", str(p))
    assert default_gadget_path() == p


# -- families ----------------------------------------------------------------


def test_family_h14():
    fam = family(FamilyId("H", 14))
    assert len(fam) == 2
    assert fam.contains_iso(star(11))
    assert fam.contains_iso(complete(5))
    assert set(fam.names) == {"S11", "K5"}


def test_family_f6():
    fam = family(FamilyId("F", 6))
    assert len(fam) == 1
    assert fam.contains_iso(star(3))


def test_family_e12():
    fam = family(FamilyId("E", 12))
    assert len(fam) == 2
    assert fam.contains_iso(complete_minus_edge(5))
    assert fam.contains_iso(star(9))


def test_family_h_edge_levels():
    # the edge-extremal deletion patterns all sit at the optimum deficiency
    expected_t = {6: 2, 7: 3, 8: 3, 9: 5, 10: 6, 11: 6, 12: 8, 13: 9, 14: 10}
    for n, t in expected_t.items():
        fam = family(FamilyId("H", n))
        assert {g.edge_count() for g in fam} == {t}, n
    assert {g.edge_count() for g in family(FamilyId("H", 23))} == {19}


def test_family_e7_and_e17():
    e7 = family(FamilyId("E", 7))
    assert len(e7) == 4
    assert e7.contains_iso(cycle(5))
    e17 = family(FamilyId("E", 17))
    assert set(e17.names) == {"S14", "K6"}


def test_family_e10_needs_gadget():
    with pytest.raises(GadgetUnavailableError) as ei:
        family(FamilyId("E", 10), gadgets={})
    assert "G1" in ei.value.names


def test_family_e10_with_bundled_gadget():
    e10 = family(FamilyId("E", 10))
    assert len(e10) == 5
    assert e10.figure_sourced == {"G1"}
    g1 = gadget("G1")
    assert g1.order == 6 and g1.edge_count() == 8
    assert e10.contains_iso(g1)
    # accounted for by the named constructions plus the gadget
    for g in [complete(4), star(7), split_star(5, 2), wheel(5)]:
        assert e10.contains_iso(g)


def test_family_f9_gadget_resolution():
    # the five-vertex member at this level is figure-sourced, like G1 at 10
    with pytest.raises(GadgetUnavailableError) as ei:
        family(FamilyId("F", 9), gadgets={})
    assert "F5" in ei.value.names
    f9 = family(FamilyId("F", 9))
    assert len(f9) == 3
    assert f9.figure_sourced == {"F5"}
    assert is_isomorphic(gadget("F5"), friendship(5))
    e9 = family(FamilyId("E", 9))
    assert e9.figure_sourced == {"F5"}
    assert set(f9.codes) == set(e9.codes)


def test_family_f_subset_of_e():
    for n in range(6, 16):
        f = family(FamilyId("F", n))
        e = family(FamilyId("E", n))
        assert set(f.codes) <= set(e.codes), n


def test_family_ranges():
    with pytest.raises(ValueError):
        FamilyId("F", 16)
    with pytest.raises(ValueError):
        FamilyId("E", 19)
    with pytest.raises(ValueError):
        FamilyId("L", 8)
    with pytest.raises(ValueError):
        FamilyId("Y", 17)
    with pytest.raises(ValueError):
        FamilyId("Q", 10)
    with pytest.raises(ValueError):
        FamilyId("H", 5)


def test_family_y18():
    fam = family(FamilyId("Y", 18))
    assert len(fam) == 3
    assert {g.order for g in fam} == {18}
    assert sorted(g.edge_count() for g in fam) == [137, 137, 139]


def test_terminal_cores_18():
    cores = terminal_cores(18)
    assert [nm for nm, _ in cores] == ["S15", "S14 u S4", "S14 u K3"]
    assert [g.edge_count() for _, g in cores] == [14, 16, 16]


def test_family_members_sorted_by_code():
    fam = family(FamilyId("E", 9))
    assert list(fam.codes) == sorted(fam.codes)


# -- lift operators ----------------------------------------------------------


def test_lift_plus_k3():
    fam = lift_plus(complete(3))
    assert len(fam) == 1
    assert is_isomorphic(fam.members[0], complete_plus_pendant(3))


def test_lift_minus_k3():
    fam = lift_minus(complete(3))
    assert len(fam) == 1
    assert is_isomorphic(fam.members[0], path(3))


def test_lift_plus_t_k4_minus():
    fam = lift_plus_t(LiftSpec(complete_minus_edge(4), 2))
    assert len(fam) == 3
    assert fam.contains_iso(split_star(5, 2))


def test_lift_spec_validation():
    with pytest.raises(ValueError):
        LiftSpec(complete(3), 0)
    with pytest.raises(ValueError):
        LiftSpec(complete(3), 4)
    with pytest.raises(GraphConstructionError):
        lift_minus(matching(0))


@given(graphs(min_order=1, max_order=8))
def test_lift_plus_order_and_size(g):
    base = g.drop_isolated()
    if base.order == 0:
        return
    fam = lift_plus(base)
    for h in fam:
        assert h.order == base.order + 1
        assert h.edge_count() == base.edge_count() + 1


@given(graphs(min_order=2, max_order=8), st.integers(min_value=1, max_value=3))
def test_lift_plus_t_size(g, t):
    base = g.drop_isolated()
    if base.order < t or base.order == 0:
        return
    fam = lift_plus_t(LiftSpec(base, t))
    for h in fam:
        assert h.edge_count() == base.edge_count() + t


@given(graphs(min_order=2, max_order=9))
def test_lift_minus_size(g):
    if g.edge_count() == 0:
        return
    fam = lift_minus(g)
    for h in fam:
        assert h.edge_count() == g.edge_count() - 1
    # deletions over edge orbits: at most one class per edge
    assert 1 <= len(fam) <= g.edge_count()


def test_lift_plus_star_two_classes():
    # pendant on the center (bigger star) vs pendant on a leaf
    fam = lift_plus(star(5))
    assert len(fam) == 2
    assert fam.contains_iso(star(6))
    assert fam.contains_iso(star_pendant(5))


# -- describe / named --------------------------------------------------------


def test_describe_names():
    assert describe(star(5)) == "S5"
    assert describe(complete(4)) == "K4"
    assert describe(complete_minus_edge(5)) == "K5-"
    assert describe(cycle(6)) == "C6"
    assert describe(path(5)) == "P5"
    assert describe(matching(3)) == "M3"
    assert describe(double_star(3, 2)) == "T3,2"
    assert describe(complete_plus_pendant(3)) == "K3+"
    assert describe(cycle_plus_pendant(4)) == "C4+"
    assert describe(prism()) == "prism"
    assert describe(wheel(5)) == "W5"
    assert describe(friendship(7)) == "F7"
    assert describe(split_star(6, 2)) == "S6,2"
    assert describe(complete_bipartite(2, 3)) == "K2,3"
    assert describe(star_plus_edge(6)) == "S6+e"
    assert describe(star_pendant(6)) == "S6*"


def test_describe_unions():
    assert describe(disjoint_union(star(14), complete(3))) == "K3 u S14"
    assert describe(disjoint_union(star(14), star(4))) == "S14 u S4"
    assert describe(disjoint_union(complete(3), matching(2))) == "K2 u K2 u K3"


def test_named_dispatch():
    assert named("star", 7) == star(7)
    assert named("split_star", 6, 2) == split_star(6, 2)
    assert is_isomorphic(named("G10"), prism())
    with pytest.raises(GadgetUnavailableError):
        named("G39", gadgets={})


def test_family_l_nine():
    l9 = family(FamilyId("L", 9))
    assert all(g.edge_count() == 7 for g in l9)
    assert all(g.order <= 9 for g in l9)
    for g in [
        star(8),
        star_pendant(7),
        star_plus_edge(7),
        disjoint_union(star(7), matching(1)),
    ]:
        assert l9.contains_iso(g)
    # membership is exactly "hosts a terminal core"
    from hamsq.enumeration import enumerate_family

    cores = [c for _, c in terminal_cores(9)]
    lcodes = set(l9.codes)
    for nm, g in zip(enumerate_family(9, 7).names, enumerate_family(9, 7)):
        hosts = any(c.order <= g.order and embeds(c, g) for c in cores)
        assert (nm in lcodes) == hosts


def test_family_l_range_floor():
    with pytest.raises(ValueError):
        FamilyId("L", 8)
