import pytest

from cyclenet import generators as gen
from cyclenet.complex import build_complex, f_vector
from cyclenet.graph import connected_components, format_edge_list, parse_edge_list
from oracles import brute_cliques, edges_of


def test_complete6():
    g = gen.complete(6)
    assert (g.n, g.m) == (6, 15)


def test_ring_lattice_20_2():
    g = gen.ring_lattice(20, 2)
    assert (g.n, g.m) == (20, 40)
    assert len(brute_cliques(g.n, edges_of(g), 3)[2]) == 20


@pytest.mark.parametrize("n", range(7, 16))
def test_ring_lattice_triangle_count(n):
    assert f_vector(build_complex(gen.ring_lattice(n, 2), 3))[2] == n


def test_cocktail_party_octahedron():
    g = gen.cocktail_party(3)
    assert (g.n, g.m) == (6, 12)
    assert {k: len(v) for k, v in brute_cliques(6, edges_of(g)).items()} == {0: 6, 1: 12, 2: 8}


def test_petersen_shape():
    g = gen.petersen()
    assert (g.n, g.m) == (10, 15)
    assert set(g.degrees()) == {3}


def test_gnm_counts_and_reproducible():
    a = gen.erdos_renyi_gnm(20, 40, seed=7)
    b = gen.erdos_renyi_gnm(20, 40, seed=7)
    assert (a.n, a.m) == (20, 40)
    assert format_edge_list(a) == format_edge_list(b)
    assert format_edge_list(a) != format_edge_list(gen.erdos_renyi_gnm(20, 40, seed=8))


def test_gnm_infeasible():
    with pytest.raises(ValueError):
        gen.erdos_renyi_gnm(5, 11)


def test_ws_zero_p_is_identity():
    ring = gen.ring_lattice(20, 2)
    assert gen.ws_rewire(ring, 0.0, seed=1) == ring


def test_ws_preserves_edge_count_and_simplicity():
    ring = gen.ring_lattice(20, 2)
    for seed in range(20):
        g = gen.ws_rewire(ring, 0.5, seed=seed)
        assert (g.n, g.m) == (20, 40)
        assert gen.ws_rewire(ring, 0.5, seed=seed) == g


def test_ws_rejects_bad_p():
    with pytest.raises(ValueError):
        gen.ws_rewire(gen.ring_lattice(10, 2), 1.5)


def test_random_regular_triangle_free():
    for seed in range(5):
        g = gen.random_regular(20, 4, seed=seed, triangle_free=True)
        assert (g.n, g.m) == (20, 40)
        assert set(g.degrees()) == {4}
        assert 2 not in brute_cliques(g.n, edges_of(g), 3)
        assert len(connected_components(g)) == 1


@pytest.mark.parametrize("bad", [lambda: gen.ring_lattice(4, 2), lambda: gen.cycle(2),
                                 lambda: gen.random_regular(5, 3), lambda: gen.cocktail_party(0)])
def test_infeasible_parameters(bad):
    with pytest.raises(ValueError):
        bad()


def test_edge_list_round_trip():
    g = gen.petersen()
    assert parse_edge_list(format_edge_list(g)) == g
