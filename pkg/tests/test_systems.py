"""Knot validation, the exact endpoint solve, enumeration, Seifert detection."""

import pytest

from montesinos import (
    DegenerateSystemError,
    EdgepathSystem,
    Frac,
    enumerate_systems,
    enumerate_systems_with_diagnostics,
    find_seifert_system,
    is_seifert_candidate,
    path_from_vertices,
    penultimate_vertex,
    solve_endpoints,
    system_twist,
    validate_system,
)
from montesinos import CapExceededError
from montesinos.rationals import INF

from helpers import fr, knot, skeleton


# -- knot validation -------------------------------------------------------


def test_knot_parsing():
    k = knot("-1/2,2/5,1/11")
    assert k.spec_string == "-1/2,2/5,1/11"
    assert str(k) == "M(-1/2, 2/5, 1/11)"


def test_knot_needs_three_tangles():
    with pytest.raises(ValueError, match="at least 3"):
        knot("-1/2,2/5")


def test_knot_rejects_integer_tangles():
    with pytest.raises(ValueError):
        knot("-1/2,2,1/3")


def test_knot_rejects_two_even_denominators():
    with pytest.raises(ValueError, match="even denominator"):
        knot("1/2,1/4,1/3")
    knot("1/2,1/3,1/5")  # one even denominator is fine


# -- endpoint solving --------------------------------------------------------


def test_solved_endpoints_first_system():
    choices = [
        skeleton("-1/2", "-1/2", "-1"),
        skeleton("2/5", "2/5", "1/2", "0"),
        skeleton("1/11", "1/11", "0"),
    ]
    solution = solve_endpoints(choices)
    assert solution.weights == (fr("1/11"), fr("1/11"), fr("10/11"))
    assert solution.c == fr("21/11")
    assert solution.u0 == fr("10/21")


def test_solved_endpoints_with_constant_path():
    choices = [
        skeleton("-1/2"),
        skeleton("2/5", "2/5", "1/2"),
        skeleton("1/11", "1/11", "0"),
    ]
    solution = solve_endpoints(choices)
    assert solution.weights == (fr("1/2"), fr("3/4"))
    assert solution.c == fr("7/2")
    assert solution.u0 == fr("5/7")


def test_infeasible_choice_returns_none():
    # without the constant path the unique solution needs a weight above 1
    choices = [
        skeleton("-1/2", "-1/2", "-1"),
        skeleton("2/5", "2/5", "1/2"),
        skeleton("1/11", "1/11", "0"),
    ]
    assert solve_endpoints(choices) is None


def test_symmetric_toy_system_is_degenerate():
    # endpoints satisfy the zero sum for every weight (t, t): a continuous
    # family, flagged rather than resolved arbitrarily
    choices = [skeleton("1/2", "1/2", "0"), skeleton("-1/2", "-1/2", "0")]
    with pytest.raises(DegenerateSystemError):
        solve_endpoints(choices)


def test_all_constant_rejected():
    with pytest.raises(ValueError, match="moving"):
        solve_endpoints([skeleton("1/2"), skeleton("-1/2")])


def test_solver_rejects_infinity_finals():
    with pytest.raises(ValueError):
        solve_endpoints(
            [skeleton("1/2", "1/2", "0", "inf"), skeleton("-1/2", "-1/2", "0")]
        )


# -- enumeration ---------------------------------------------------------------


@pytest.fixture(scope="module")
def k11_systems():
    return enumerate_systems(knot("-1/2,2/5,1/11"))


def test_enumeration_contains_both_named_type_one_systems(k11_systems):
    rendered = {s.render_paths() for s in k11_systems}
    assert (
        "(1/11)<-1> + (10/11)<-1/2> - <-1/2>",
        "(1/11)<0> + (10/11)<1/2> - <1/2> - <2/5>",
        "(10/11)<0> + (1/11)<1/11> - <1/11>",
    ) in rendered
    assert (
        "(4/7)<-1/2> + (3/7)<-1/2>o",
        "(1/2)<1/2> + (1/2)<2/5> - <2/5>",
        "(3/4)<0> + (1/4)<1/11> - <1/11>",
    ) in rendered


def test_enumeration_contains_the_reference_system(k11_systems):
    reference = find_seifert_system(knot("-1/2,2/5,1/11"))
    assert any(s == reference for s in k11_systems)


def test_enumeration_is_deterministic_and_duplicate_free(k11_systems):
    again = enumerate_systems(knot("-1/2,2/5,1/11"))
    assert k11_systems == again
    keys = [s.render_paths() for s in k11_systems]
    assert len(keys) == len(set(keys))


def test_every_enumerated_system_validates(k11_systems):
    for system in k11_systems:
        assert validate_system(system) is None


def test_type_one_round_trip(k11_systems):
    for system in k11_systems:
        if system.system_type != "I":
            continue
        coords = [p.endpoint_uv() for p in system.paths]
        assert len({u for u, _ in coords}) == 1
        total = Frac(0)
        for _, v in coords:
            total = total + v
        assert total == 0


def test_combination_cap():
    with pytest.raises(CapExceededError):
        enumerate_systems(knot("-1/2,2/5,1/11"), cap=10)


def test_no_degenerate_diagnostics_for_the_family():
    _, diagnostics = enumerate_systems_with_diagnostics(knot("-1/2,2/5,1/11"))
    assert diagnostics == []


# -- independent validation ------------------------------------------------------


def test_validator_catches_broken_zero_sum(k11_systems):
    target = next(
        s
        for s in k11_systems
        if s.system_type == "I" and not any(p.is_constant for p in s.paths)
    )
    k = target.knot
    perturbed_last = path_from_vertices(
        fr("1/11"), [fr("1/11"), fr("0")], fr("9/11")
    )
    broken = EdgepathSystem(k, target.paths[:2] + (perturbed_last,), target.common_u)
    violation = validate_system(broken)
    assert violation is not None and violation.condition == "E3"


def test_validator_catches_retraced_step():
    # a fraction-edge retrace cannot even be built (edges are directed right
    # to left), so retrace along a vertical edge, where u stays equal
    k = knot("-1/2,2/5,1/3")
    bad_path = path_from_vertices(fr("1/3"), [fr("1/3"), fr("0"), fr("1"), fr("0")])
    paths = (
        path_from_vertices(fr("-1/2"), [fr("-1/2"), fr("-1")]),
        path_from_vertices(fr("2/5"), [fr("2/5"), fr("1/2"), fr("0")]),
        bad_path,
    )
    system = EdgepathSystem(k, paths, Frac(0))
    violation = validate_system(system)
    assert violation is not None and violation.condition == "E2"
    assert violation.path_index == 2


def test_validator_catches_triangle_run():
    k = knot("-1/2,2/5,1/3")
    paths = (
        path_from_vertices(fr("-1/2"), [fr("-1/2"), fr("-1"), INF]),
        path_from_vertices(fr("2/5"), [fr("2/5"), fr("1/2"), fr("0"), INF]),
        path_from_vertices(fr("1/3"), [fr("1/3"), fr("1/2"), fr("1"), INF]),
    )
    # rebuild the last path with a triangle run 1/3 -> 1/2 -> 0
    from montesinos import diagram_edge
    from montesinos.edgepaths import Edgepath

    bad = Edgepath(
        tangle=fr("1/3"),
        steps=(diagram_edge(fr("1/3"), fr("1/2")), diagram_edge(fr("1/2"), fr("0")),
               diagram_edge(fr("0"), INF)),
    )
    system = EdgepathSystem(k, paths[:2] + (bad,), Frac(-1))
    violation = validate_system(system)
    assert violation is not None and violation.condition == "E2"


def test_validator_catches_wrong_tangle():
    k = knot("-1/2,2/5,1/11")
    paths = (
        path_from_vertices(fr("-1/2"), [fr("-1/2"), fr("-1"), INF]),
        path_from_vertices(fr("2/5"), [fr("2/5"), fr("1/2"), fr("0"), INF]),
        path_from_vertices(fr("1/3"), [fr("1/3"), fr("0"), INF]),
    )
    system = EdgepathSystem(k, paths, Frac(-1))
    violation = validate_system(system)
    assert violation is not None and violation.condition == "E1"


# -- Seifert reference ------------------------------------------------------------


def test_seifert_reference_for_k11():
    reference = find_seifert_system(knot("-1/2,2/5,1/11"))
    penultimates = [penultimate_vertex(p) for p in reference.paths]
    assert penultimates == [fr("-1"), fr("0"), fr("1")]
    assert system_twist(reference) == 4 - 2 * 11 == -18
    assert is_seifert_candidate(reference)


def test_seifert_twist_along_family():
    for n in (11, 13, 17, 25):
        reference = find_seifert_system(knot(f"-1/2,2/5,1/{n}"))
        assert system_twist(reference) == 4 - 2 * n


def test_parity_rejects_single_odd_penultimate():
    k = knot("-1/2,2/5,1/11")
    paths = (
        path_from_vertices(fr("-1/2"), [fr("-1/2"), fr("0"), INF]),
        path_from_vertices(fr("2/5"), [fr("2/5"), fr("1/2"), fr("0"), INF]),
        path_from_vertices(
            fr("1/11"), [Frac(1, k) for k in range(11, 0, -1)] + [INF]
        ),
    )
    system = EdgepathSystem(k, paths, Frac(-1))
    assert validate_system(system) is None
    assert [penultimate_vertex(p) for p in system.paths] == [fr("0"), fr("0"), fr("1")]
    assert not is_seifert_candidate(system)  # one odd penultimate


def test_mixed_parity_path_rejected():
    k = knot("-1/2,2/5,1/11")
    # 2/5 - 1/3 - 0 mixes two mod-2 edge classes
    paths = (
        path_from_vertices(fr("-1/2"), [fr("-1/2"), fr("-1"), INF]),
        path_from_vertices(fr("2/5"), [fr("2/5"), fr("1/3"), fr("0"), INF]),
        path_from_vertices(fr("1/11"), [fr("1/11"), fr("0"), INF]),
    )
    system = EdgepathSystem(k, paths, Frac(-1))
    assert not is_seifert_candidate(system)
