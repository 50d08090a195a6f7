import itertools
import re

import pytest

from bhdual.atlas import default_atlas
from bhdual.dynkin import (DOUBLE, SOLID, DynkinGraph, corank, determinant, extend_bimodal,
                           gram_determinant, gram_matrix, matrix_rank, reduced_discriminant,
                           t_graph, to_dot, to_json_text)
from bhdual.errors import BadArmTarget
from bhdual.invariants import Triple, delta, milnor_number
from bhdual.invertible import canonical_weights, classify
from bhdual.poly import parse_polynomial

from oracles import frac_det, frac_rank


def test_t_graph_examples():
    g = t_graph((2, 3, 7))
    assert g.n == 11
    assert [len(g.arm(i)) for i in (1, 2, 3)] == [1, 2, 6]
    assert [e for e in g.edges if e[2] != SOLID] == [(g.center, g.top, DOUBLE)]
    # 0+1+5 arm links, 3 joins to the center, 3 joins to the top, 1 double edge
    assert len(g.edges) == 13
    tiny = t_graph((1, 1, 1))
    assert tiny.n == 2 and tiny.edges == ((1, 2, DOUBLE),)
    assert t_graph((3, 3, 3)).n == 8


def test_vertex_numbering():
    g = t_graph((2, 3, 4))
    assert g.arm(1) == [1] and g.arm(2) == [2, 3] and g.arm(3) == [4, 5, 6]
    assert (g.center, g.top) == (7, 8)
    assert (3, 7, SOLID) in g.edges and (3, 8, SOLID) in g.edges and (2, 3, SOLID) in g.edges


def test_vertex_count_formula():
    for gamma in itertools.product(range(1, 6), repeat=3):
        assert t_graph(gamma).n == sum(gamma) - 1


def test_gram_determinant_examples():
    assert gram_determinant(t_graph((2, 3, 7))) == 0
    assert gram_determinant(t_graph((3, 3, 3))) == 0
    single = DynkinGraph(1, ())
    assert gram_determinant(single) == -2
    assert corank(single) == 0


def test_reduced_discriminant_examples():
    assert reduced_discriminant(t_graph((2, 3, 5))) == 1
    assert reduced_discriminant(t_graph((2, 2, 2))) == 4
    assert reduced_discriminant(t_graph((3, 3, 3))) == 0


def test_corank_examples():
    assert corank(t_graph((2, 3, 7))) == 1
    assert corank(t_graph((3, 3, 3))) == 2


def test_bareiss_against_fraction_oracle():
    for gamma in [(2, 3, 5), (2, 2, 2), (3, 3, 3), (2, 4, 5), (1, 2, 2), (1, 1, 3)]:
        A = gram_matrix(t_graph(gamma))
        assert determinant(A) == frac_det(A)
        assert matrix_rank(A) == frac_rank(A)
        minor = [row[:-1] for row in A[:-1]]
        assert determinant(minor) == frac_det(minor)
    assert matrix_rank([[1, 2], [2, 4], [3, 6]]) == 1
    assert determinant([[0, 1], [1, 0]]) == -1


def test_discriminant_property_small_box():
    for gamma in itertools.product(range(2, 6), repeat=3):
        g = t_graph(gamma)
        d = delta(Triple(gamma))
        assert reduced_discriminant(g) == (-1) ** (sum(gamma) - 1) * d
        assert gram_determinant(g) == 0
        assert corank(g) == (1 if d else 2)


def test_unit_arms_follow_discriminant_formula_too():
    # only asserted for γ >= 2 elsewhere; with this numbering unit arms agree as well
    for gamma in itertools.product(range(1, 5), repeat=3):
        if 1 in gamma:
            g = t_graph(gamma)
            assert reduced_discriminant(g) == (-1) ** (sum(gamma) - 1) * delta(Triple(gamma))


def test_extend_examples():
    e18 = extend_bimodal(t_graph((2, 3, 12)), 2, [(2, 1), (3, 2), (12, 8)])
    assert e18.n == 18
    arm3 = t_graph((2, 3, 12)).arm(3)
    assert (arm3[2], 18, SOLID) in e18.edges
    assert (16, 17, SOLID) in e18.edges and (17, 18, SOLID) in e18.edges

    e20 = extend_bimodal(t_graph((2, 3, 11)), 5, [(2, 1), (3, 2), (11, 9)])
    assert e20.n == 20
    assert (t_graph((2, 3, 11)).arm(3)[0], 18, SOLID) in e20.edges

    base = t_graph((2, 6, 8))
    w17 = extend_bimodal(base, 2, [(2, 1), (6, 4), (8, 5)])
    assert w17.n == 17
    hooked = {i for i, j, _ in w17.edges if j == 17}
    assert hooked == {base.arm(2)[0], base.arm(3)[1], 16}


def test_extend_errors():
    g = t_graph((2, 3, 4))
    with pytest.raises(ValueError):
        extend_bimodal(g, 4, [(2, 1), (3, 2), (4, 3)])
    with pytest.raises(BadArmTarget):
        extend_bimodal(g, 2, [(2, 1), (3, 2), (4, 4)])


def test_extend_every_bimodal_row_gives_milnor_number():
    # μ_f is the degree of φ_{f^t}; φ_f has degree μ_{f^t}
    rows = default_atlas().entries("bimodal")
    assert len(rows) == 14
    for e in rows:
        gamma = tuple(p[0] for p in e.delta_pairs)
        g = extend_bimodal(t_graph(gamma), e.a_W, e.delta_pairs)
        W = canonical_weights(classify(parse_polynomial(e.f)))
        assert g.n == milnor_number(W) == int(re.search(r"\d+", e.name).group()), e.name


def test_dot_output():
    dot = to_dot(t_graph((1, 1, 1)))
    assert dot.count(" [label=") == 2
    assert dot.count("--") == 1 and "style=dashed" in dot
    dot = to_dot(t_graph((2, 3, 7)))
    assert dot.startswith("graph T {") and dot.endswith("}\n")
    assert dot.count("--") == 13
    assert sum(1 for line in dot.splitlines() if line.strip().endswith('"];')
               and "--" not in line) == 11
    assert dot == to_dot(t_graph((2, 3, 7)))


def test_json_export():
    assert to_json_text(t_graph((1, 1, 1))) == '{"n":2,"edges":[[1,2,-2]]}'


def test_double_weight_configurable():
    g = t_graph((2, 3, 5), double_weight=2)
    assert (g.center, g.top, 2) in g.edges
    assert reduced_discriminant(g) == 1
