import time
from fractions import Fraction

import pytest

from bhdual import tables
from bhdual.atlas import default_atlas


@pytest.mark.parametrize("which", ["elliptic", "arnold", "bimodal", "series", "table8"])
def test_tables_regenerate_exactly(which):
    d = tables.regenerate(which)
    assert d.ok, "\n".join(d.diff)
    assert d.diff == []


def test_simple_table_only_disagrees_on_unequal_A_alpha():
    d = tables.regenerate("simple")
    for stored, regen in d.mismatched_rows():
        name = stored.split(" | ")[0]
        assert name.startswith("A(")
        k, l = (int(x) for x in name[2:-1].split(","))
        assert k != l
        s_cells, r_cells = stored.split(" | "), regen.split(" | ")
        assert s_cells[2:] == r_cells[2:]
        # computed α is the stored γ of the swapped member, the transpose's Gabrielov numbers
        assert r_cells[1] == ",".join(map(str, sorted((1, l, k * l - l + 1))))


def test_phi_table_only_disagrees_on_two_transposed_cells():
    d = tables.regenerate("phi")
    bad = d.mismatched_rows()
    assert [s.split(" | ")[0] for s, _ in bad] == ["Z19", "Q18"]
    regen = {r.split(" | ")[0]: r.split(" | ")[2] for _, r in bad}
    assert regen == {"Z19": "2*9*54/1*18*27", "Q18": "3*8*48/1*16*24"}
    for s, r in bad:
        assert s.split(" | ")[1] == r.split(" | ")[1]


def test_regenerate_rejects_unknown_table():
    with pytest.raises(ValueError):
        tables.regenerate("table99")


def test_singularity_key():
    assert tables.singularity_key("x^2+y^3+z^7") == (Fraction(1, 7), Fraction(1, 3))
    assert tables.singularity_key("x^2+xy^3+yz^3") == tables.singularity_key("x^2+xy^3+yz^3")


def test_regenerated_duals():
    atlas = default_atlas()
    assert tables.regenerate_dual(atlas.lookup("E14"), atlas) == "Q10"
    assert tables.regenerate_dual(atlas.lookup("E12"), atlas) == "E12"
    assert tables.regenerate_dual(atlas.lookup("S17"), atlas) == "X2,0"


def test_all_tables_fast():
    tables.compute.cache_clear()
    t0 = time.perf_counter()
    tables.regenerate_all()
    assert time.perf_counter() - t0 < 5
