import pytest

from irts.services.exact import (
    PruningToggles,
    VisitedTaskRegistry,
    check_p3,
    check_p4,
    exact_skyline,
    may_extend,
)
from irts.services.network.loader import read_tasks
from irts.services.network.road_network import PreferredPath
from irts.services.oracle import brute_skyline
from irts.services.skyline import PathState, Query, SearchStats, dominates, recompute_costs
from tests.conftest import D, FIGURE_TASKS, S, T1, T2, T3, V1, V2, V4, make_random_instance

RANDOM_SEEDS = range(100)


def test_worked_example(figure_query):
    sky = exact_skyline(figure_query)
    assert sky.pairs() == [(4.0, 5.0), (14.0, 9.0)]
    assert [p.path for p in sky] == [(S, V1, V2, D, T3, D), (S, V1, T2, V4, T3, D)]
    assert [p.travel for p in sky] == [19.0, 19.0]


def test_worked_example_with_positions(figure_coords_network):
    pref = PreferredPath(figure_coords_network, [S, V1, V2, D])
    stats = SearchStats()
    sky = exact_skyline(Query(figure_coords_network, pref, FIGURE_TASKS, 21.0), stats=stats)
    assert sky.pairs() == [(4.0, 5.0), (14.0, 9.0)]
    assert stats.pruned["p4"] > 0


def test_dequeued_detours_never_decrease(figure_query):
    stats = SearchStats(trace=True)
    exact_skyline(figure_query, stats=stats)
    detours = stats.dequeued_detours
    assert detours and all(a <= b for a, b in zip(detours, detours[1:]))


def test_zero_budget_gives_empty_skyline(figure_network):
    pref = PreferredPath(figure_network, [S, V1, V2, D])
    assert len(exact_skyline(Query(figure_network, pref, FIGURE_TASKS, 0.0))) == 0


def test_budget_below_cheapest_task_path(figure_network):
    pref = PreferredPath(figure_network, [S, V1, V2, D])
    # the cheapest task-performing paths travel 19
    assert len(exact_skyline(Query(figure_network, pref, FIGURE_TASKS, 18.9))) == 0


def test_no_tasks_gives_empty_skyline(figure_network):
    pref = PreferredPath(figure_network, [S, V1, V2, D])
    assert len(exact_skyline(Query(figure_network, pref, {}, 100.0))) == 0


def test_task_on_the_preferred_path_costs_no_detour(figure_network, data_dir):
    net, tasks = read_tasks(data_dir / "figure1_embedded.tasks", figure_network)
    pref = PreferredPath(net, [S, V1, 8, V2, D])
    sky = exact_skyline(Query(net, pref, tasks, 15.0))
    assert sky.pairs() == [(0.0, 2.0)]
    assert sky.points[0].path == (S, V1, 8, V2, D)


@pytest.mark.parametrize("rule", ["p1", "p2", "p3", "p4"])
def test_each_rule_can_be_switched_off(figure_coords_network, rule):
    pref = PreferredPath(figure_coords_network, [S, V1, V2, D])
    query = Query(figure_coords_network, pref, FIGURE_TASKS, 21.0)
    stats = SearchStats()
    sky = exact_skyline(query, pruning=PruningToggles.without(rule), stats=stats)
    assert sky.pairs() == [(4.0, 5.0), (14.0, 9.0)]
    assert stats.pruned[rule] == 0


def test_may_extend_rules():
    state = PathState.start(S).extend(V1, 5.0, 0.0, FIGURE_TASKS)
    assert not may_extend(state, S)
    assert may_extend(state, S, PruningToggles.without("p1"))
    state = state.extend(T2, 2.0, 2.0, FIGURE_TASKS).extend(V1, 2.0, 2.0, FIGURE_TASKS)
    assert may_extend(state, S)  # s was left before the last task
    assert not may_extend(state, T2)
    assert may_extend(state, T2, PruningToggles.without("p2"))


def test_visited_task_registry():
    reg = VisitedTaskRegistry()
    assert not reg.check_and_register(((T2,), T2), 7.0)
    assert reg.check_and_register(((T2,), T2), 7.0)
    assert not reg.check_and_register(((T2,), T2), 6.0)
    assert reg.best((T2,)) == 6.0
    assert not reg.check_and_register(((T1, T2), T2), 12.0)


def _state(vertices, travel, task_seq=()):
    return PathState(tuple(vertices), travel, 0.0, 0.0, None, tuple(task_seq), frozenset(vertices[-1:]))


def test_p3_keeps_the_same_tasks_in_another_order():
    reg = VisitedTaskRegistry()
    assert not check_p3(_state([S, T1, T2, T3], 12.0, [T1, T2, T3]), reg)
    assert not check_p3(_state([S, T2, T1, T3], 14.0, [T2, T1, T3]), reg)
    assert check_p3(_state([S, V1, T1, T2, T3], 13.0, [T1, T2, T3]), reg)


def test_p4_boundary(figure_query, figure_coords_network):
    assert not check_p4(_state([S, V1, V2, D], 21.0), figure_query)
    assert check_p4(_state([S, V1, V2, D], 21.5), figure_query)
    # no positions: the bound is 0 anywhere
    assert not check_p4(_state([S, V1], 21.0), figure_query)
    pref = PreferredPath(figure_coords_network, [S, V1, V2, D])
    q = Query(figure_coords_network, pref, FIGURE_TASKS, 21.0)
    assert not check_p4(_state([S, V1, V2, D], 21.0), q)
    assert not check_p4(_state([S, V1], 11.0), q)
    assert check_p4(_state([S, V1], 11.5), q)


def _assert_valid(sky, inst):
    for p in sky:
        travel, detour, reward = recompute_costs(p.path, inst.net, inst.pref, inst.tasks)
        assert p.path[0] == inst.pref.source and p.path[-1] == inst.pref.destination
        assert travel <= inst.budget + 1e-9
        assert (p.travel, p.detour, p.reward) == (travel, detour, reward)
    pairs = sky.pairs()
    assert not any(dominates(a, b) for a in pairs for b in pairs)


@pytest.mark.parametrize("seed", RANDOM_SEEDS)
def test_matches_the_oracle(seed):
    inst = make_random_instance(seed)
    expected = brute_skyline(inst.net, inst.pref, inst.tasks, inst.budget)
    sky = exact_skyline(inst.query)
    assert sky.pairs() == expected.pairs()
    _assert_valid(sky, inst)


@pytest.mark.parametrize("seed", RANDOM_SEEDS)
def test_pruning_rules_are_safe(seed):
    inst = make_random_instance(seed)
    reference = exact_skyline(inst.query).pairs()
    for rule in ("p1", "p2", "p3", "p4"):
        assert exact_skyline(inst.query, pruning=PruningToggles.without(rule)).pairs() == reference
