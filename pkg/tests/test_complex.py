import itertools
import random

import pytest
from hypothesis import given, settings

from cyclenet import generators as gen
from cyclenet.complex import CapExceededError, boundary_matrix, build_complex, euler_characteristic, f_vector
from cyclenet.gf2 import multiply
from cyclenet.graph import Graph
from oracles import brute_cliques, edges_of
from test_graph import small_graphs


def test_fig3_f_vector(fig3):
    assert f_vector(build_complex(fig3, 3)) == [14, 26, 13, 1]


def test_complete6_full():
    assert f_vector(build_complex(gen.complete(6), 5)) == [6, 15, 20, 15, 6, 1]


def test_k2222_f_vector():
    assert f_vector(build_complex(gen.cocktail_party(4), 4)) == [8, 24, 32, 16, 0]


def test_capped_f_vectors():
    assert f_vector(build_complex(gen.ring_lattice(20, 2), 3)) == [20, 40, 20, 0]
    assert f_vector(build_complex(gen.petersen(), 2)) == [10, 15, 0]
    assert f_vector(build_complex(Graph(nodes=["a"]), None)) == [1]


def test_euler_characteristic(fig3):
    assert euler_characteristic(build_complex(fig3, 3)) == 0
    assert euler_characteristic(build_complex(gen.complete(6), 5)) == 1
    assert euler_characteristic(build_complex(gen.ring_lattice(20, 2), 3)) == 0
    assert euler_characteristic(build_complex(gen.petersen(), 2)) == -5


def test_strict_cap_raises():
    c = build_complex(gen.complete(6), 3)
    assert c.truncated
    with pytest.raises(CapExceededError):
        euler_characteristic(c)


def test_non_strict_cap_marks_truncation():
    c = build_complex(gen.complete(6), 3, strict=False)
    assert c.truncated
    assert f_vector(c) == [6, 15, 20, 15]
    assert "euler_characteristic" not in c.to_dict()


def test_cap_not_truncated_when_exact():
    # K4 has exactly one 3-clique and nothing above
    assert not build_complex(gen.complete(4), 3).truncated
    assert build_complex(gen.complete(5), 3).truncated


def test_auto_dim_reaches_clique_number():
    assert build_complex(gen.complete(7), None).max_dim == 6


def test_boundary_k3():
    c = build_complex(gen.complete(3), 2)
    assert boundary_matrix(c, 2).to_dense().tolist() == [[1], [1], [1]]
    b1 = boundary_matrix(c, 1).to_dense()
    assert b1.shape == (3, 3)
    assert (b1.sum(axis=0) == 2).all()


def test_boundary_fig3_tetrahedron(fig3):
    c = build_complex(fig3, 3)
    b3 = boundary_matrix(c, 3)
    assert (b3.n_rows, b3.n_cols) == (13, 1)
    (col,) = b3.columns()
    faces = {c.labels(c.cliques[2][i]) for i in col.support()}
    assert faces == {("1", "2", "3"), ("1", "2", "4"), ("1", "3", "4"), ("2", "3", "4")}


def test_boundary_out_of_range(fig3):
    c = build_complex(fig3, 3)
    for k in (0, 4):
        with pytest.raises(ValueError):
            boundary_matrix(c, k)


def test_boundary_of_boundary_zero(fixtures):
    for g in fixtures.values():
        c = build_complex(g, None)
        for k in range(1, c.max_dim):
            prod = multiply(boundary_matrix(c, k), boundary_matrix(c, k + 1))
            assert not prod.to_dense().any()


def test_column_sums(fixtures):
    for g in fixtures.values():
        c = build_complex(g, None)
        for k in range(1, c.max_dim + 1):
            d = boundary_matrix(c, k).to_dense()
            if d.size:
                assert (d.sum(axis=0) == k + 1).all()


@settings(max_examples=150, deadline=None)
@given(small_graphs(max_n=9))
def test_cliques_match_subset_oracle(g):
    c = build_complex(g, None)
    brute = brute_cliques(g.n, edges_of(g))
    for k, level in enumerate(c.cliques):
        assert list(level) == sorted(brute.get(k, []))
        for s in level:
            # downward closure: every face is itself a clique
            for face in itertools.combinations(s, len(s) - 1):
                if face:
                    assert face in c.index[len(face) - 1]


def test_cliques_sorted_and_indexed():
    g = gen.erdos_renyi_gnm(15, 50, seed=random.Random(0).randrange(1000))
    c = build_complex(g, None)
    for level, idx in zip(c.cliques, c.index):
        assert list(level) == sorted(level)
        assert all(idx[s] == i for i, s in enumerate(level))
