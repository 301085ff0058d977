import io
import math

import numpy as np
import pytest

from irts.core.errors import (
    EdgeNotFoundError,
    NetworkFormatError,
    UnknownVertexError,
    UnreachableError,
)
from irts.services.network import (
    NetworkBuilder,
    PreferredPath,
    TaskPlacement,
    embed_task,
    embed_tasks,
    euclidean_lower_bound,
    grid_network,
    load_network,
    min_detour_legs,
    min_detour_path,
    read_network,
    read_tasks,
    shortest_preferred_path,
    shortest_travel_costs,
    shortest_travel_path,
    write_network,
)
from irts.services.network.grid import JITTER_HIGH, JITTER_LOW
from tests.conftest import D, S, T1, T2, T3, V1, V2, V4, make_random_instance


def test_figure_network_loads(figure_network):
    assert figure_network.num_vertices == 8
    assert figure_network.num_edges == 8
    assert figure_network.rewards == {T1: 3.0, T2: 4.0, T3: 5.0}
    assert figure_network.edge_cost(V4, T3) == 5.0
    assert figure_network.edge_cost(T3, V4) == 5.0
    assert figure_network.coord(S) is None


def test_loader_reports_line_and_record():
    with pytest.raises(NetworkFormatError) as exc:
        load_network(["0 0 0 0", "1 3 0 0"], [(7, "0 1 abc")])
    assert exc.value.line == 7
    assert "0 1 abc" in str(exc.value)


@pytest.mark.parametrize(
    "edges, message",
    [
        (["0 1 3", "1 0 3"], "duplicate edge"),
        (["0 5 3"], "does not exist"),
        (["0 0 3"], "self-loop"),
        (["0 1 0"], "strictly positive"),
        (["0 1 -2"], "strictly positive"),
        (["0 1 2"], "Euclidean"),
    ],
)
def test_invalid_edges_are_rejected(edges, message):
    with pytest.raises(NetworkFormatError, match=message):
        load_network(["0 0 0 0", "1 3 0 0"], edges)


def test_duplicate_vertex_is_rejected():
    with pytest.raises(NetworkFormatError, match="duplicate vertex"):
        load_network(["0 - - 0", "0 - - 1"], [])


def test_unknown_positions_skip_the_euclidean_check():
    net = load_network(["0 - - 0", "1 3 0 0"], ["0 1 0.5"])
    assert net.edge_cost(0, 1) == 0.5


def test_write_then_read_keeps_the_network(figure_coords_network):
    buffer = io.StringIO()
    write_network(figure_coords_network, buffer)
    buffer.seek(0)
    again = read_network(buffer)
    assert list(again.edges()) == list(figure_coords_network.edges())
    assert again.rewards == figure_coords_network.rewards
    assert again.coord(T2) == (5.0, -2.0)


def test_embed_task_splits_the_edge(figure_coords_network):
    net = embed_task(figure_coords_network, V1, V2, 2.0, 7.0)
    tid = 8
    assert net.edge_cost(V1, V2) is None
    assert net.edge_cost(V1, tid) == 2.0
    assert net.edge_cost(tid, V2) == 3.0
    assert net.reward(tid) == 7.0
    assert net.coord(tid) == pytest.approx((7.0, 0.0))


def test_embed_tasks_assigns_consecutive_ids(figure_network):
    net, ids = embed_tasks(figure_network, [
        TaskPlacement(S, V1, 1.0, 1.0),
        TaskPlacement(V2, D, 4.0, 2.0),
    ])
    assert ids == [8, 9]
    assert net.num_vertices == 10
    assert net.edge_cost(9, D) == 1.0


@pytest.mark.parametrize("offset", [0.0, 5.0, 6.0])
def test_embed_task_offset_must_lie_inside(figure_network, offset):
    with pytest.raises(NetworkFormatError):
        embed_task(figure_network, S, V1, offset, 1.0)


def test_embed_task_unknown_edge(figure_network):
    with pytest.raises(EdgeNotFoundError):
        embed_task(figure_network, S, D, 1.0, 1.0)


def test_read_tasks_vertex_and_embedded(figure_network, data_dir):
    net, tasks = read_tasks(data_dir / "figure1.tasks", figure_network)
    assert net is figure_network
    assert tasks == {T1: 3.0, T2: 4.0, T3: 5.0}

    net, tasks = read_tasks(data_dir / "figure1_embedded.tasks", figure_network)
    assert tasks == {8: 2.0}
    assert net.edge_cost(V1, 8) == 2.5


def test_read_tasks_rejects_bad_records(figure_network):
    with pytest.raises(NetworkFormatError, match="does not exist"):
        read_tasks(io.StringIO("42 1\n"), figure_network)
    with pytest.raises(NetworkFormatError, match="positive"):
        read_tasks(io.StringIO("4 0\n"), figure_network)
    with pytest.raises(NetworkFormatError) as exc:
        read_tasks(io.StringIO("# header\n4 1 2\n"), figure_network)
    assert exc.value.line == 2


def test_preferred_path_membership(figure_network):
    pref = PreferredPath(figure_network, [S, V1, V2, D])
    assert pref.total_cost == 15.0
    assert pref.contains_edge(V2, V1)
    assert not pref.contains_edge(V1, T2)
    assert pref.edge_detour(V1, V2, 5.0) == 0.0
    assert pref.edge_detour(V1, T2, 2.0) == 2.0


def test_preferred_path_must_follow_edges(figure_network):
    with pytest.raises(EdgeNotFoundError):
        PreferredPath(figure_network, [S, V2, D])
    with pytest.raises(UnknownVertexError):
        PreferredPath(figure_network, [S, 99])


def test_shortest_paths(figure_network):
    path, cost = shortest_travel_path(figure_network, S, D)
    assert path == (S, V1, V2, D)
    assert cost == 15.0
    assert shortest_preferred_path(figure_network, S, D).vertices == (S, V1, V2, D)


def test_shortest_path_unreachable():
    net = load_network(["0 - - 0", "1 - - 0", "2 - - 0"], ["0 1 1"])
    with pytest.raises(UnreachableError):
        shortest_travel_path(net, 0, 2)


def test_min_detour_path_prefers_detour_over_travel(figure_network):
    pref = PreferredPath(figure_network, [S, V1, V2, D])
    leg = min_detour_path(figure_network, S, T3, pref, budget_cap=21)
    # through d: detour 2, travel 17; via t2 and v4 would be detour 12, travel 17
    assert leg.path == (S, V1, V2, D, T3)
    assert (leg.detour, leg.travel) == (2.0, 17.0)
    assert min_detour_path(figure_network, S, T3, pref, budget_cap=16) is None


def test_min_detour_legs_settles_requested_targets(figure_network):
    pref = PreferredPath(figure_network, [S, V1, V2, D])
    legs = min_detour_legs(figure_network, T2, pref, [T1, T3], required=[D])
    assert (legs[D].detour, legs[D].travel) == (2.0, 12.0)
    assert (legs[T1].detour, legs[T1].travel) == (5.0, 10.0)
    assert (legs[T3].detour, legs[T3].travel) == (4.0, 14.0)


def test_grid_network_shape_and_costs():
    net = grid_network(4, 5, cell_size=10.0, num_tasks=6, seed=11)
    assert net.num_vertices == 20 + 6
    assert net.num_edges == (4 * 4 + 3 * 5) + 6
    assert len(net.task_ids) == 6
    assert all(net.reward(t) == 1.0 for t in net.task_ids)
    for u, v, cost in net.edges():
        assert cost >= math.dist(net.coord(u), net.coord(v)) - 1e-9
        assert cost <= JITTER_HIGH * 10.0
    plain = [c for u, v, c in net.edges() if u < 20 and v < 20]
    assert all(JITTER_LOW * 10.0 <= c for c in plain)


def test_grid_network_is_seeded():
    a = grid_network(6, 6, 50.0, 10, seed=3)
    b = grid_network(6, 6, 50.0, 10, seed=3)
    c = grid_network(6, 6, 50.0, 10, seed=4)
    assert list(a.edges()) == list(b.edges())
    assert list(a.edges()) != list(c.edges())


def test_builder_remove_edge():
    builder = NetworkBuilder()
    builder.add_vertex(0)
    builder.add_vertex(1)
    builder.add_edge(0, 1, 2.0)
    assert builder.remove_edge(1, 0) == 2.0
    with pytest.raises(EdgeNotFoundError):
        builder.remove_edge(0, 1)


def test_grid_network_rejects_empty_dimensions():
    with pytest.raises(NetworkFormatError, match="0x5"):
        grid_network(0, 5, 50.0, 0, seed=0)


def _segment(coord_b):
    builder = NetworkBuilder()
    builder.add_vertex(0, (0.0, 0.0))
    builder.add_vertex(1, coord_b)
    builder.add_edge(0, 1, 6.0)
    return builder.build()


def test_euclidean_lower_bound():
    net = _segment((3.0, 4.0))
    assert euclidean_lower_bound(net, 0, 1) == 5.0
    assert euclidean_lower_bound(net, 1, 1) == 0.0
    assert euclidean_lower_bound(_segment(None), 0, 1) == 0.0


def test_euclidean_lower_bound_never_exceeds_travel():
    net = grid_network(8, 8, 50.0, 20, seed=5)
    for source in (0, 27, 63, max(net.task_ids)):
        for target, cost in shortest_travel_costs(net, source).items():
            assert euclidean_lower_bound(net, source, target) <= cost + 1e-9


@pytest.mark.parametrize("seed", range(20))
def test_embedding_keeps_shortest_travel_costs(seed):
    net = make_random_instance(seed).net
    rng = np.random.default_rng(seed)
    edges = list(net.edges())
    u, v, cost = edges[int(rng.integers(len(edges)))]
    embedded = embed_task(net, u, v, float(rng.uniform(0.1, 0.9)) * cost, 1.0)
    for source in net.vertices:
        before = shortest_travel_costs(net, source)
        after = shortest_travel_costs(embedded, source)
        assert {t: after[t] for t in before} == pytest.approx(before)
