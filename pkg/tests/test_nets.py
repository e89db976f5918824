import random

import pytest

from netalg.field import GF, QQ, Subspace, random_matrix
from netalg.ideals import INFINITY, hilbert_function
from netalg.nets import (
    NET_CLASSES,
    ORBIT_DIMS,
    SCHEME_LENGTHS,
    BadParameter,
    NetLabel,
    NetOfConics,
    UnclassifiableOverField,
    associated_cubic,
    calibration_rows,
    classify_net,
    cubic_singular_record,
    load_calibration,
    net_invariants,
    normal_form,
    orbit_dimension,
    recover_8b_parameter,
    squares_record,
    stabilizer_dimension,
)
from netalg.ring import ProjectiveTransform, parse_poly

FIELDS = [GF(5), GF(101), QQ]


def net(F, *ss):
    return NetOfConics.from_strings(ss, F)


@pytest.mark.parametrize("F", FIELDS, ids=["gf5", "gf101", "qq"])
def test_normal_forms_classify_correctly(F):
    for cls in NET_CLASSES:
        V = normal_form(cls, F)
        label = classify_net(V)
        assert label.cls == cls
        inv = net_invariants(V)
        assert inv.ell == SCHEME_LENGTHS[cls]
        assert inv.orbit_dim == ORBIT_DIMS[cls]


def test_calibration_table_matches_package_data():
    rows = dict(calibration_rows())
    assert rows == {k: v for k, v in load_calibration().items()}
    assert len(rows) == 15


def test_associated_cubic_examples():
    F = QQ
    c, _ = associated_cubic(net(F, "x^2", "x*y", "y^2"))
    assert c.is_zero()
    c, _ = associated_cubic(net(F, "x^2", "x*y", "x*z"))
    assert c.is_zero()
    c, _ = associated_cubic(net(F, "x*y", "x*z", "y*z"))
    assert not c.is_zero()
    # the three-point net's decomposable locus is a triangle of lines:
    # the cubic is a scalar times the product of the coordinates
    nz = [(i, v) for i, v in enumerate(c.coords) if v]
    from netalg.ring import monomials

    assert [monomials(3)[i] for i, _ in nz] == [(1, 1, 1)]


def test_stabilizer_dimensions():
    F = QQ
    assert stabilizer_dimension(net(F, "x^2", "x*y", "x*z")) == 7
    assert orbit_dimension(net(F, "x*y", "x*z", "y*z")) == 6
    assert orbit_dimension(net(F, "x^2+y*z", "x*y", "x*z")) == 7


def test_squares_records():
    F = QQ
    assert squares_record(net(F, "x^2", "x*y", "y^2")) == ("growing", None)
    assert squares_record(net(F, "x*y", "x*z", "y*z")) == ("const", 0)
    assert squares_record(net(F, "x^2+y*z", "x*y", "x*z")) == ("const", 0)
    # one double line counted with multiplicity two
    assert squares_record(net(F, "x^2", "x*y", "z^2+y*z")) == ("const", 2)
    # two honest double lines
    assert squares_record(net(F, "x^2+z^2", "x*z", "y*z")) == ("const", 2)
    assert squares_record(net(F, "x^2", "y^2", "z^2")) == ("const", 3)


def test_cubic_singular_records():
    F = QQ
    assert cubic_singular_record(normal_form("8b", F)) == ("const", 0)
    assert cubic_singular_record(normal_form("8c", F)) == ("const", 1)
    assert cubic_singular_record(normal_form("6b", F)) == ("const", 3)
    assert cubic_singular_record(normal_form("6c", F)) == ("growing", None)
    assert cubic_singular_record(normal_form("2a", F)) == ("zero", None)


def test_8b_parameter_handling():
    F = GF(101)
    V = normal_form(NetLabel("8b", 7), F)
    assert classify_net(V) == NetLabel("8b", F.of(7))
    assert recover_8b_parameter(V) == F.of(7)
    for bad in (0, 100, 2):  # 100 = -1; 2 cubes to 8
        with pytest.raises(BadParameter):
            normal_form(NetLabel("8b", bad), F)
    # over GF(5) the excluded set is {0, 4, 2}
    with pytest.raises(BadParameter):
        normal_form(NetLabel("8b", 4), GF(5))
    normal_form(NetLabel("8b", 3), GF(5))


def random_transform(F, rng):
    while True:
        rows = [[F.rand(rng) for _ in range(3)] for _ in range(3)]
        try:
            return ProjectiveTransform(rows, F)
        except Exception:
            continue


def test_classification_is_transform_invariant(rng):
    F = GF(101)
    for cls in ("6a", "7a", "5b", "2a", "4"):
        V = normal_form(cls, F)
        for _ in range(3):
            t = random_transform(F, rng)
            W = NetOfConics(t.apply_subspace(V.space, 2))
            assert classify_net(W).cls == cls
            assert net_invariants(W).ell == SCHEME_LENGTHS[cls]


def test_scheme_length_distribution_by_class():
    by_tail = {
        1: {"8a", "7b"},
        2: {"7a", "6b", "6c", "5b"},
        3: {"6a", "5a", "4", "2b"},
    }
    for a, classes in by_tail.items():
        assert {c for c in NET_CLASSES if SCHEME_LENGTHS[c] == a} == classes


def test_random_net_classification_over_gf5(gf5, rng):
    # spot-check the oracle atlas agreement (full sweep in acceptance)
    from netalg.oracle import atlas_lookup, load_gf5_orbit_atlas

    atlas = load_gf5_orbit_atlas()
    assert sum(size for _, size, _ in atlas.values()) == 2558556
    n = 0
    while n < 5:
        S = Subspace(random_matrix(3, 6, gf5, rng))
        if S.dim != 3:
            continue
        V = NetOfConics(S)
        lab = classify_net(V)
        alab, _ = atlas_lookup(V, atlas)
        assert alab == lab.cls
        n += 1


def test_specialization_arrows_along_families(gf101):
    # the family fibers classify as the generic class away from the
    # boundary and as the named class at it
    from netalg.deform import FAMILIES, special_fiber, specialize

    fam = FAMILIES["7a"]
    I = specialize(fam, {"a": 1, "t": 2}, gf101)
    assert classify_net(NetOfConics(I.component(2))).cls == "8b"
    fib = special_fiber(fam, {"a": 1, "t": 2}, gf101)
    assert classify_net(NetOfConics(fib.component(2))).cls == "7a"
    fam6 = FAMILIES["2a-smoothing"]
    I = specialize(fam6, {"t": 3}, gf101)
    assert classify_net(NetOfConics(I.component(2))).cls == "6a"
    fib = special_fiber(fam6, {"t": 3}, gf101)
    assert classify_net(NetOfConics(fib.component(2))).cls == "2a"


def test_unclassifiable_is_reported_not_guessed(monkeypatch):
    import netalg.nets as nets_mod

    V = normal_form("6a", QQ)
    monkeypatch.setattr(nets_mod, "_calibration_cache", {"bogus": "x"})
    with pytest.raises(UnclassifiableOverField):
        classify_net(V)
    monkeypatch.setattr(nets_mod, "_calibration_cache", None)
