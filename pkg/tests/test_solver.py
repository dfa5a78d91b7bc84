import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdgame.engine import (PASS, GameConfig, GameState, Player, Status,
                           Variant, apply_move, apply_pass, status)
from cdgame.families import (circular_ladder, complete, cycle, doubling_gadget,
                             path, predomination_penalty_graph)
from cdgame.graph import Graph, connected_domination_number
from cdgame.solver import (NEVER, BudgetExceeded, format_value, game_value,
                           is_never, optimal_move, solve, solve_naive,
                           value_with_predominated)

from .conftest import connected_graphs

VD = Variant.DOMINATOR_START
VS = Variant.STALLER_START


def test_path_values():
    assert solve(path(4), GameConfig(VD)).value == 2
    assert solve(path(4), GameConfig(VS)).value == 3


def test_gadget_values():
    g = doubling_gadget(3)
    assert solve(g, GameConfig(VD)).value == 3
    assert solve(g, GameConfig(VS)).value == 6


def test_hamming_values():
    from cdgame.families import hamming
    h = hamming(2, 4)
    assert solve(h, GameConfig(VD)).value == 3
    assert solve(h, GameConfig(VS)).value == 2


def test_unfinishable_games():
    assert is_never(solve(path(5), GameConfig(VS, predominated=1 << 2)).value)
    disconnected = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert is_never(solve(disconnected, GameConfig(VD)).value)


def test_predomination_penalty():
    g = predomination_penalty_graph()
    assert solve(g, GameConfig(VD)).value == 7
    c = 1 << g.vertex_by_label("c")
    assert solve(g, GameConfig(VD, predominated=c)).value == 8


def test_skip_variant_path():
    assert solve(path(5), GameConfig(Variant.STALLER_SKIPS_FIRST)).value == 3


def test_value_with_predominated():
    p7 = path(7)
    assert value_with_predominated(p7, VD, 1 << 0) == 4
    assert value_with_predominated(p7, VD, 1 << 3) == 5
    cl5 = circular_ladder(5)
    for v in range(cl5.n):
        assert value_with_predominated(cl5, VD, 1 << v) == 5


def test_naive_matches_on_cycles():
    c5 = cycle(5)
    assert solve_naive(c5, GameConfig(VD)) == 3 == solve(c5, GameConfig(VD)).value
    pre = GameConfig(VD, predominated=1)
    assert solve_naive(c5, pre) == 2 == solve(c5, pre).value


def test_optimal_move_examples():
    root = GameState(0, 0)
    assert optimal_move(path(4), GameConfig(VD), root) == 1
    assert optimal_move(complete(3), GameConfig(VD), root) == 0
    g = doubling_gadget(3)
    assert optimal_move(g, GameConfig(VD), root) == g.vertex_by_label("u3")


def test_optimal_move_tie_prefers_vertex_over_pass():
    # From P_4 with vertex 1 played, Staller's only vertex move (2) and a
    # pass both lead to a 2-move game; the tie goes to the vertex.
    cfg = GameConfig(VD, pass_budget=1)
    st_ = GameState(played=1 << 1, passes_left=1)
    assert optimal_move(path(4), cfg, st_) == 2


def test_optimal_move_rejects_finished_games():
    with pytest.raises(ValueError):
        optimal_move(complete(3), GameConfig(VD), GameState(played=1))
    stuck_cfg = GameConfig(VD, pass_budget=1, predominated=1 << 2)
    with pytest.raises(ValueError):
        optimal_move(path(5), stuck_cfg, GameState(played=1, passes_left=1))


def test_format_value():
    assert format_value(3) == "3"
    assert format_value(NEVER) == "NEVER"


def test_report_fields_and_replay():
    g = doubling_gadget(2)
    cfg = GameConfig(VS)
    report = solve(g, cfg)
    assert report.value == 4
    assert report.states_expanded > 0 and report.elapsed >= 0
    st_ = GameState(0, cfg.pass_budget)
    for who, action in report.principal_line:
        assert action != PASS
        st_ = apply_move(g, cfg, st_, action)
    assert status(g, cfg, st_) is Status.WON
    assert st_.moves_made() == report.value


def test_principal_line_alternates_correctly():
    report = solve(path(6), GameConfig(VS))
    players = [who for who, _ in report.principal_line]
    assert players == [Player.STALLER, Player.DOMINATOR] * 2 + [Player.STALLER]


def test_replay_with_passes():
    g = cycle(6)
    cfg = GameConfig(VD, pass_budget=2)
    report = solve(g, cfg)
    st_ = GameState(0, cfg.pass_budget)
    for who, action in report.principal_line:
        if action == PASS:
            st_ = apply_pass(cfg, st_)
        else:
            st_ = apply_move(g, cfg, st_, action)
    assert status(g, cfg, st_) is Status.WON
    assert st_.moves_made() == report.value


def test_deterministic_reports():
    g = doubling_gadget(3)
    cfg = GameConfig(VS)
    a, b = solve(g, cfg), solve(g, cfg)
    assert a.value == b.value
    assert a.principal_line == b.principal_line
    assert a.states_expanded == b.states_expanded
    assert a.memo_hits == b.memo_hits


def test_budget_exceeded():
    g = circular_ladder(7)
    with pytest.raises(BudgetExceeded):
        solve(g, GameConfig(VS), time_budget=0.0)


def test_game_value_lower_bound_on_corpus(corpus):
    for g in corpus:
        assert game_value(g) >= connected_domination_number(g)


_cfg_strategy = st.one_of(
    st.tuples(st.sampled_from([VD, VS]), st.integers(0, 2)),
    st.tuples(st.sampled_from([Variant.STALLER_SKIPS_FIRST,
                               Variant.DOMINATOR_SKIPS_FIRST]), st.just(0)),
)


@given(connected_graphs(max_n=6), _cfg_strategy, st.integers(0, 63))
@settings(max_examples=120, deadline=None)
def test_solver_matches_naive_oracle(g, variant_budget, pre_bits):
    variant, budget = variant_budget
    cfg = GameConfig(variant, budget, pre_bits & g.full_mask)
    stats = {}
    fast = solve(g, cfg)
    slow = solve_naive(g, cfg, stats)
    assert fast.value == slow
    assert fast.states_expanded <= stats["nodes"]


@given(connected_graphs(max_n=6), _cfg_strategy, st.integers(0, 63))
@settings(max_examples=80, deadline=None)
def test_principal_line_replay_soundness(g, variant_budget, pre_bits):
    variant, budget = variant_budget
    cfg = GameConfig(variant, budget, pre_bits & g.full_mask)
    report = solve(g, cfg)
    st_ = GameState(0, cfg.pass_budget)
    for who, action in report.principal_line:
        assert who is Player.DOMINATOR or who is Player.STALLER
        if action == PASS:
            st_ = apply_pass(cfg, st_)
        else:
            st_ = apply_move(g, cfg, st_, action)
    end = status(g, cfg, st_)
    if is_never(report.value):
        assert end is Status.STUCK
    else:
        assert end is Status.WON
        assert st_.moves_made() == report.value


@given(connected_graphs(max_n=6))
@settings(max_examples=60, deadline=None)
def test_value_sandwiches(g):
    d = game_value(g)
    s = game_value(g, VS)
    assert d - 1 <= s <= 2 * d
    d_skip = game_value(g, Variant.STALLER_SKIPS_FIRST)
    s_skip = game_value(g, Variant.DOMINATOR_SKIPS_FIRST)
    assert abs(d_skip - d) <= 1
    assert abs(s_skip - s) <= 1
    p1 = game_value(g, pass_budget=1)
    p2 = game_value(g, pass_budget=2)
    assert d <= p1 <= d + 1
    assert p1 <= p2 <= d + 2
