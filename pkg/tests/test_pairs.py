import pytest

from gentlehh import (ap_paths, build_quiver, coinvariant_dim, fixture_by_name,
                      hh_dims_rr, pair_order, rotate, rr_sets)


def presentation_for(name):
    return build_quiver(fixture_by_name(name).surface())


def test_ap0_and_ap1():
    p = presentation_for("fig8")
    assert len(ap_paths(p, 0)) == 7
    assert len(ap_paths(p, 1)) == 11


def test_fig8_ap_counts():
    p = presentation_for("fig8")
    # three relation chains per internal triangle, any length
    assert len(ap_paths(p, 2)) == 9
    assert len(ap_paths(p, 5)) == 9
    assert len(ap_paths(p, 13)) == 9


def test_ap_chains_are_relation_chains():
    p = presentation_for("fig8")
    for rho in ap_paths(p, 4):
        for i in range(3):
            assert (rho.arrows[i], rho.arrows[i + 1]) in p.relations


def test_fig8_degree0_family():
    p = presentation_for("fig8")
    fam = rr_sets(p, 0)
    assert len(fam.set_a) == 1
    (e_r, gamma), = fam.set_a
    # the annihilated cycle lives at the loop arc enclosing the (1,0) boundary
    assert p.quiver.vertices[e_r.source] == "t7"
    assert len(gamma.arrows) == 4


def test_fig8_degree1_family():
    p = presentation_for("fig8")
    fam = rr_sets(p, 1)
    assert len(fam.zero_zero) == 2
    sources = {p.quiver.arrow_name(rho.arrows[0]) for rho, _ in fam.zero_zero}
    assert sources == {"t3->t2", "t3->t4"}
    assert fam.loop_pairs == ()


def test_fig8_higher_degrees_empty_families():
    p = presentation_for("fig8")
    for n in (2, 3, 4, 7):
        fam = rr_sets(p, n)
        assert fam.zero_zero == ()
        assert fam.empty_incomplete == ()


def test_complete_incomplete_partition_and_mod3():
    p = presentation_for("fig8")
    for n in range(2, 14):
        fam = rr_sets(p, n)
        cyclic = [(rho, g) for rho, g in fam.pairs if not g.arrows]
        assert len(fam.complete) + len(fam.incomplete) == len(cyclic)
        if n % 3 == 0:
            assert len(fam.gentle_complete) == len(fam.complete0) == len(cyclic) == 9
        else:
            assert cyclic == []


def test_rotation_orbits_have_order_three():
    p = presentation_for("fig8")
    fam = rr_sets(p, 6)
    assert len(fam.gentle_complete) == 9
    for pair in fam.gentle_complete:
        assert pair_order(p, pair) == 3
        assert 6 % pair_order(p, pair) == 0  # order divides the degree


def test_rotate_round_trip():
    p = presentation_for("fig8")
    for rho, _ in rr_sets(p, 3).gentle_complete:
        assert rotate(p, rotate(p, rotate(p, rho))) == rho


def test_coinvariant_dims():
    p = presentation_for("fig8")
    assert coinvariant_dim(p, 3, 0) == 3
    assert coinvariant_dim(p, 4, 0) == 0
    assert coinvariant_dim(p, 4, 2) == 0
    assert coinvariant_dim(p, 6, 2) == 3
    assert coinvariant_dim(p, 12, 3) == 3
    with pytest.raises(ValueError):
        coinvariant_dim(p, 0, 0)


def test_hh_dims_rr_fig8_char0():
    p = presentation_for("fig8")
    table = hh_dims_rr(p, 0, 12)
    assert list(table.dims) == [2, 7, 0, 0, 0, 0, 3, 3, 0, 0, 0, 0, 3]


def test_hh_dims_rr_fig8_char2():
    p = presentation_for("fig8")
    table = hh_dims_rr(p, 2, 13)
    assert table.dims[3] == 3
    assert list(table.dims) == [2, 7, 0, 3, 3, 0, 3, 3, 0, 3, 3, 0, 3, 3]


def test_hh_dims_rr_square_disc():
    p = presentation_for("square-disc")
    for char in (0, 2, 5):
        table = hh_dims_rr(p, char, 9)
        assert list(table.dims) == [1] + [0] * 9


def test_hh_dims_rr_rejects_bad_characteristic():
    p = presentation_for("square-disc")
    with pytest.raises(ValueError):
        hh_dims_rr(p, 4, 5)


def test_odd_prime_matches_char0_on_fixtures():
    for name in ("fig8", "torus-T1"):
        p = presentation_for(name)
        assert hh_dims_rr(p, 7, 13).dims == hh_dims_rr(p, 0, 13).dims


def test_minimal_nmax():
    p = presentation_for("fig8")
    assert list(hh_dims_rr(p, 0, 1).dims) == [2, 7]
    with pytest.raises(ValueError):
        hh_dims_rr(p, 0, 0)
