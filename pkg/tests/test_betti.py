import pytest

from netalg.betti import (
    BettiTable,
    HilbertMismatch,
    betti_table,
    cancellation_steps,
    hilbert_consistency,
    lex_betti,
    named_table,
)
from netalg.field import GF
from netalg.ideals import NotArtinian, hilbert_function, ideal_from_generators
from netalg.ring import parse_poly

F = GF(101)


def ideal(gen_strs, bound, trunc=None):
    return ideal_from_generators(
        [parse_poly(s, F) for s in gen_strs], bound, field=F, truncate_at=trunc
    )


FIXTURES = {
    "CI": (3, ["x^2", "y^2", "z^2"], None),
    "SL1": (3, ["x^2-y*z", "y^2-x*z", "x*y"], 4),
    "A": (3, ["z^2+x*y", "y*z", "x*z", "x^3+y^3"], 4),
    "B": (3, ["z^2+x*y", "y*z", "x*z", "x^3"], 4),
    "C": (3, ["x*y", "x*z", "y*z", "x^3-y^3", "x^3-z^3"], 4),
    "D": (3, ["x*y", "x*z", "y*z", "x^3-y^3", "z^3"], 4),
    "E": (3, ["x*y", "x*z", "y*z", "y^3", "z^3"], 4),
    "G": (3, ["x^2", "x*y", "x*z", "y^2*z-y*z^2", "y^3", "z^3"], 4),
    "H": (3, ["x^2", "x*y", "x*z", "y^3", "y^2*z", "y*z^2", "z^4"], 4),
    "J4": (4, ["x^2", "x*y", "x*z", "y^3", "y^2*z^2", "z^4"], 5),
    "K4": (4, ["x^2", "x*y", "x*z", "y^3", "y^2*z^2", "y*z^3"], 5),
}


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_named_tables_reproduce(name):
    j, gen_strs, trunc = FIXTURES[name]
    I = ideal(gen_strs, j + 3, trunc)
    assert betti_table(I, j) == named_table(name)


def test_totals_match_reference():
    assert named_table("CI").totals() == [1, 3, 3, 1]
    assert named_table("SL1").totals() == [1, 4, 6, 3]
    assert named_table("A").totals() == [1, 4, 5, 2]
    assert named_table("B").totals() == [1, 5, 7, 3]
    assert named_table("C").totals() == [1, 5, 5, 1]
    assert named_table("D").totals() == [1, 5, 6, 2]
    assert named_table("E").totals() == [1, 6, 8, 3]
    assert named_table("G").totals() == [1, 6, 8, 3]
    assert named_table("H").totals() == [1, 7, 10, 4]
    assert named_table("J4").totals() == [1, 6, 8, 3]
    assert named_table("K4").totals() == [1, 7, 10, 4]


def test_shifted_table_entries():
    C5 = named_table("C", j=5)
    assert C5.get(1, 2) == 3 and C5.get(2, 3) == 2
    assert C5.get(1, 5) == 2 and C5.get(2, 6) == 3 and C5.get(3, 8) == 1
    with pytest.raises(KeyError):
        named_table("Q")


def test_shifted_tables_match_computed_families():
    for j in (4, 5):
        xj, yj, zj = f"x^{j}", f"y^{j}", f"z^{j}"
        I = ideal(["x*y", "x*z", "y*z", f"{xj}-{yj}", f"{xj}-{zj}"], j + 3, j + 1)
        assert betti_table(I, j) == named_table("C", j=j)
        I = ideal(["x*y", "x*z", "y*z", f"{xj}-{yj}", zj], j + 3, j + 1)
        assert betti_table(I, j) == named_table("D", j=j)
        I = ideal(["x*y", "x*z", "y*z", yj, zj], j + 3, j + 1)
        assert betti_table(I, j) == named_table("E", j=j)


def test_euler_characteristic_consistency():
    for name, (j, gen_strs, trunc) in FIXTURES.items():
        I = ideal(gen_strs, j + 3, trunc)
        H = hilbert_function(I).values[: j + 1]
        assert hilbert_consistency(betti_table(I, j), H)


def test_gorenstein_tables_are_symmetric():
    # socle degree 3 tables of one-dimensional-socle fixtures
    for name, jmax in (("CI", 6), ("C", 6)):
        t = named_table(name)
        for (i, d), v in t.entries.items():
            assert t.get(3 - i, jmax - d) == v


def test_cancellation_examples():
    assert cancellation_steps(named_table("D"), named_table("C")) == [(2, 5)]
    assert cancellation_steps(named_table("B"), named_table("A")) == [(1, 4), (2, 5)]
    assert cancellation_steps(named_table("H"), named_table("G")) == [(1, 4), (2, 5)]
    assert cancellation_steps(named_table("A"), named_table("A")) == []
    # no path upward
    assert cancellation_steps(named_table("C"), named_table("D")) is None
    with pytest.raises(HilbertMismatch):
        cancellation_steps(named_table("CI"), named_table("J4"))


def test_lex_betti():
    assert lex_betti([1, 3, 3, 1], F) == named_table("H")
    assert lex_betti([1, 3, 3, 3, 1], F) == named_table("K4")
    t = lex_betti([1, 1], F)
    assert t.get(1, 1) == 2 and t.get(1, 2) == 1


def test_peeva_reachability_for_fixtures():
    for name, (j, gen_strs, trunc) in FIXTURES.items():
        I = ideal(gen_strs, j + 3, trunc)
        H = hilbert_function(I).values[: j + 1]
        steps = cancellation_steps(lex_betti(H, F), betti_table(I, j))
        assert steps is not None


def test_betti_requires_artinian():
    I = ideal(["x^2", "x*y", "x*z"], 7)
    with pytest.raises(NotArtinian):
        betti_table(I, 3)


def test_json_roundtrip_and_grid():
    t = named_table("D")
    assert BettiTable.from_json_obj(t.to_json_obj()) == t
    grid = t.to_grid()
    assert "total" in grid and "1    5    6    2" in grid
