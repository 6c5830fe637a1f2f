import math

import numpy as np
import pytest

from cyclenet import generators as gen
from cyclenet.dynamics import (
    SirConfig,
    contact_matrix,
    runs_by_source,
    sir_run,
    source_means,
    spreading_experiment,
)


def test_beta_zero_only_source(fixtures):
    for g in fixtures.values():
        assert spreading_experiment(g, "cycle_based", SirConfig(beta=0.0), 3) == 1.0
        assert sir_run(contact_matrix(g), 0, SirConfig(0.0)).recovered_count == 1


def test_beta_one_full_sweep(fixtures):
    for name in ("fig3", "petersen", "ring20", "path6"):
        g = fixtures[name]
        for s in range(g.n):
            out = sir_run(contact_matrix(g), s, SirConfig(beta=1.0, seed=s))
            assert out.recovered_count == g.n


def test_k2_half_mean():
    g = gen.complete(2)
    runs = 4000
    counts = runs_by_source(g, "conventional", SirConfig(beta=0.5, seed=11), runs)["0"]
    mean = np.mean(counts)
    sigma = 0.5 / math.sqrt(runs)
    assert abs(mean - 1.5) < 3 * sigma


def test_history_conserves_population(fig3):
    out = sir_run(contact_matrix(fig3, "cycle_based"), 0, SirConfig(beta=0.4, recovery=0.5, seed=3), record=True)
    assert all(s + i + r == fig3.n for s, i, r in out.history)
    assert out.history[0] == (fig3.n - 1, 1, 0)
    assert out.history[-1][1] == 0
    assert out.history[-1][2] == out.recovered_count
    rec = [r for _, _, r in out.history]
    assert rec == sorted(rec)


def test_max_steps_cap():
    g = gen.cycle(30)
    out = sir_run(contact_matrix(g), 0, SirConfig(beta=1.0, recovery=0.0, max_steps=3))
    assert out.capped and out.steps_taken == 3


def test_replay_is_deterministic(fig3):
    cfg = SirConfig(beta=0.3, seed=42)
    assert runs_by_source(fig3, "cycle_based", cfg, 5) == runs_by_source(fig3, "cycle_based", cfg, 5)
    a = sir_run(contact_matrix(fig3), 2, cfg, record=True)
    b = sir_run(contact_matrix(fig3), 2, cfg, record=True)
    assert a == b


def test_modes_equal_on_trees():
    for g in (gen.path(8), gen.star(6)):
        cfg = SirConfig(beta=0.5, seed=5)
        assert runs_by_source(g, "conventional", cfg, 20) == runs_by_source(g, "cycle_based", cfg, 20)


def test_mean_increases_with_beta():
    g = gen.ring_lattice(20, 2)
    means = [spreading_experiment(g, "conventional", SirConfig(beta=b, seed=1), 40) for b in (0.05, 0.3, 0.8)]
    assert means[0] < means[1] < means[2]


def test_cycle_mode_spreads_at_least_as_far():
    g = gen.cycle(8)
    cfg = SirConfig(beta=0.3, seed=2)
    conv = spreading_experiment(g, "conventional", cfg, 200)
    cyc = spreading_experiment(g, "cycle_based", cfg, 200)
    assert cyc > conv


def test_source_means_cover_every_node(fig3):
    means = source_means(fig3, "conventional", SirConfig(beta=0.1), 3)
    assert set(means) == set(fig3.nodes)
    assert all(1.0 <= m <= fig3.n for m in means.values())


@pytest.mark.parametrize("kwargs", [dict(beta=-0.1), dict(beta=1.5), dict(beta=0.1, recovery=2), dict(beta=0.1, max_steps=0)])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        SirConfig(**kwargs)


def test_contact_validation():
    with pytest.raises(ValueError):
        contact_matrix(gen.complete(3), "hyper")
    with pytest.raises(ValueError):
        sir_run(np.array([[0, 1], [0, 0]]), 0, SirConfig(0.5))
    with pytest.raises(ValueError):
        sir_run(np.eye(2, dtype=int), 0, SirConfig(0.5))
    with pytest.raises(ValueError):
        sir_run(contact_matrix(gen.complete(3)), 5, SirConfig(0.5))
