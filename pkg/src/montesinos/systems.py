"""Edgepath systems: the common-endpoint solve, enumeration and validation.

A system assigns one edgepath per tangle. Beyond the per-path conditions
(E1, E2, E4) the ending points must lie on one vertical line with their
v-coordinates summing to zero (E3). For a choice of per-tangle skeletons
with open final edges (plus constant markers), E3 is an exact linear
system: writing the endpoint of path i as weight t_i on the left vertex
p_i/q_i of its final edge and 1 - t_i on the right vertex r_i/s_i, the
common vertical line forces

    t_i * q_i + (1 - t_i) * s_i = c          (one equation per moving path)

for a shared value c with u = 1 - 1/c, and the zero sum reads

    sum_i (t_i * p_i + (1 - t_i) * r_i) + c * sum_j R_j = 0

over the moving paths i and constant paths j. The solver eliminates
exactly over the rationals; a unique solution is accepted when every
t_i lies in (0, 1] and every constant tangle satisfies c >= q_j (its
point must stay on the horizontal edge). Rank-deficient systems are
flagged as degenerate, never guessed at.

Systems come in three kinds by the common final u-coordinate: type I
(u > 0, solved endpoints in the open region), type II (u = 0, endpoints
on the v-axis, possibly after motion along vertical edges, which changes
no twist), and type III (every path runs to <inf>, where E3 holds
trivially). The Seifert reference among type III systems is detected by
two parity conditions on the reduced mod-2 vertex labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .edgepaths import (
    Edgepath,
    PathSkeleton,
    constant_path,
    enumerate_skeletons,
    path_from_vertices,
)
from .farey import angle, is_farey_edge, same_triangle, uv_coords
from .rationals import Frac

DEFAULT_COMBINATION_CAP = 10**7


class DegenerateSystemError(Exception):
    """The endpoint system is consistent but rank-deficient: a continuous
    family of endpoints rather than isolated ones."""


class CapExceededError(Exception):
    """The skeleton-combination count exceeds the configured cap."""


class SeifertReferenceError(Exception):
    """No Seifert reference system found, or several with unequal twists."""


# -- knots -----------------------------------------------------------------


@dataclass(frozen=True)
class MontesinosKnot:
    """An ordered list of rational tangle fractions p_i/q_i, q_i >= 2.

    At most one denominator may be even; otherwise the diagram closes up
    to a link with several components, which this package does not handle.
    """

    tangles: tuple[Frac, ...]

    def __post_init__(self):
        if len(self.tangles) < 3:
            raise ValueError("need at least 3 tangles")
        for f in self.tangles:
            if f.is_infinite or f.is_integer:
                raise ValueError(f"tangle {f} must have denominator >= 2")
        even = [f for f in self.tangles if f.den % 2 == 0]
        if len(even) > 1:
            raise ValueError(
                "more than one even denominator: this is a multi-component link"
            )

    @classmethod
    def parse(cls, spec: str) -> "MontesinosKnot":
        parts = [p for p in spec.split(",") if p.strip()]
        return cls(tuple(Frac.parse(p) for p in parts))

    @property
    def spec_string(self) -> str:
        return ",".join(str(f) for f in self.tangles)

    def __str__(self) -> str:
        return f"M({', '.join(str(f) for f in self.tangles)})"


# -- exact linear algebra ----------------------------------------------------

_UNDERDETERMINED = object()


def _solve_square_exact(rows: list[list[Frac]], rhs: list[Frac]):
    """Gauss-Jordan over the rationals for an n x n system.

    Returns the solution list, None when inconsistent, or the
    underdetermined marker when consistent but rank-deficient.
    """
    n = len(rows)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    piv_cols: list[int] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, n) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][col]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(col)
        r += 1
        if r == n:
            break
    for i in range(r, n):
        if aug[i][n] != 0:
            return None
    if r < n:
        return _UNDERDETERMINED
    sol = [Frac(0)] * n
    for i, col in enumerate(piv_cols):
        sol[col] = aug[i][n]
    return sol


# -- endpoint solving --------------------------------------------------------


@dataclass(frozen=True)
class EndpointSolution:
    """Solved weights t_i (one per moving path, in choice order) and the
    common effective denominator c, with final u-coordinate 1 - 1/c."""

    weights: tuple[Frac, ...]
    c: Frac

    @property
    def u0(self) -> Frac:
        return Frac(1) - Frac(1) / self.c


def _check_moving_choice(choice: PathSkeleton):
    if choice.n_edges < 1:
        raise ValueError(f"{choice} has no open final edge")
    if choice.final_left.is_infinite:
        raise ValueError(f"{choice} ends at <inf>: nothing to solve")
    if choice.final_left.is_integer and choice.final_right.is_integer:
        raise ValueError(f"{choice} has a vertical final edge")


def solve_endpoints(choices: Sequence[PathSkeleton]) -> EndpointSolution | None:
    """Solve E3 exactly for one skeleton choice per tangle.

    Returns the unique solution when it exists and meets every range
    constraint, None when the system is inconsistent or the solution falls
    outside the constraints. Raises DegenerateSystemError on a consistent
    rank-deficient system.
    """
    moving = [ch for ch in choices if not ch.constant]
    constants = [ch for ch in choices if ch.constant]
    if not moving:
        raise ValueError("need at least one moving path")
    for ch in moving:
        _check_moving_choice(ch)

    m = len(moving)
    rows = []
    rhs = []
    for i, ch in enumerate(moving):
        q, s = ch.final_left.den, ch.final_right.den
        row = [Frac(0)] * (m + 1)
        row[i] = Frac(q - s)
        row[m] = Frac(-1)
        rows.append(row)
        rhs.append(Frac(-s))
    const_sum = Frac(0)
    for ch in constants:
        const_sum = const_sum + ch.tangle
    last = [Frac(ch.final_left.num - ch.final_right.num) for ch in moving]
    last.append(const_sum)
    rows.append(last)
    rhs.append(Frac(-sum(ch.final_right.num for ch in moving)))

    sol = _solve_square_exact(rows, rhs)
    if sol is None:
        return None
    if sol is _UNDERDETERMINED:
        raise DegenerateSystemError(
            "degenerate: endpoints form a continuous family for "
            + "; ".join(str(ch) for ch in choices)
        )
    ts, c = sol[:m], sol[m]
    if any(t <= 0 or t > 1 for t in ts):
        return None
    for ch in constants:
        if c < ch.tangle.den:
            return None
    return EndpointSolution(tuple(ts), c)


# -- systems -----------------------------------------------------------------


@dataclass(frozen=True)
class EdgepathSystem:
    knot: MontesinosKnot
    paths: tuple[Edgepath, ...]
    common_u: Frac

    @property
    def system_type(self) -> str:
        if self.common_u > 0:
            return "I"
        if self.common_u == 0:
            return "II"
        return "III"

    def render_paths(self) -> tuple[str, ...]:
        return tuple(p.render() for p in self.paths)

    def to_dict(self) -> dict:
        return {
            "knot": self.knot.spec_string,
            "type": self.system_type,
            "common_u": str(self.common_u),
            "paths": list(self.render_paths()),
        }

    def _sort_key(self):
        rank = {"I": 0, "II": 1, "III": 2}[self.system_type]
        return (rank, self.render_paths())


@dataclass(frozen=True)
class Diagnostic:
    kind: str
    detail: str


def _build_solved_system(
    knot: MontesinosKnot, combo: Sequence[PathSkeleton], solution: EndpointSolution
) -> EdgepathSystem:
    paths = []
    it = iter(solution.weights)
    for ch in combo:
        if ch.constant:
            weight = Frac(ch.tangle.den) / solution.c
            paths.append(constant_path(ch.tangle, weight))
        else:
            paths.append(ch.to_edgepath(next(it)))
    return EdgepathSystem(knot, tuple(paths), solution.u0)


def _vertical_directions(choice: PathSkeleton) -> list[int]:
    """Directions (+1 up, -1 down) a path ending at an integer vertex may
    take along vertical edges, by the two-sides-of-a-triangle rule against
    its arrival edge."""
    z, g = choice.final_left, choice.final_right
    out = []
    for d in (1, -1):
        if not is_farey_edge(g, z + d):
            out.append(d)
    return out


def _extended_vertices(choice: PathSkeleton, displacement: int) -> tuple[Frac, ...]:
    z = choice.final_left
    step = 1 if displacement > 0 else -1
    extra = tuple(z + step * i for i in range(1, abs(displacement) + 1))
    return choice.vertices + extra


def enumerate_systems_with_diagnostics(
    knot: MontesinosKnot, cap: int = DEFAULT_COMBINATION_CAP
) -> tuple[list[EdgepathSystem], list[Diagnostic]]:
    """All candidate systems of the knot, plus degeneracy diagnostics.

    Type I and II systems with isolated endpoints come from the exact
    solve over every combination of open-final-edge truncations and
    constant markers. Type II systems needing vertical motion are built
    from combinations of paths stopped at their v-axis arrival vertices:
    the integer displacement that zeroes the v-sum is absorbed by the
    first path whose allowed vertical direction permits it (any other
    split along vertical edges yields the same twist, hence the same
    slope). Type III systems are all combinations of maximal skeletons.
    """
    per_tangle = [enumerate_skeletons(f) for f in knot.tangles]
    solver_choices = [
        [sk for sk in sks if sk.constant or (sk.n_edges >= 1 and not sk.final_left.is_infinite)]
        for sks in per_tangle
    ]
    maximal = [[sk for sk in sks if not sk.constant and sk.is_maximal] for sks in per_tangle]
    arrivals = [
        [sk for sk in sks if not sk.constant and sk.n_edges >= 1 and sk.final_left.is_integer]
        for sks in per_tangle
    ]

    total = 0
    for group in (solver_choices, maximal, arrivals):
        count = 1
        for options in group:
            count *= len(options)
        total += count
    if total > cap:
        raise CapExceededError(f"{total} skeleton combinations exceed the cap of {cap}")

    systems: list[EdgepathSystem] = []
    diagnostics: list[Diagnostic] = []

    for combo in product(*solver_choices):
        if all(ch.constant for ch in combo):
            tangle_sum = Frac(0)
            for f in knot.tangles:
                tangle_sum = tangle_sum + f
            if tangle_sum == 0:
                diagnostics.append(
                    Diagnostic(
                        "degenerate",
                        "all-constant combination: endpoints form a continuous family",
                    )
                )
            continue
        try:
            solution = solve_endpoints(combo)
        except DegenerateSystemError as exc:
            diagnostics.append(Diagnostic("degenerate", str(exc)))
            continue
        if solution is not None:
            systems.append(_build_solved_system(knot, combo, solution))

    for combo in product(*arrivals):
        shift = -sum(ch.final_left.num for ch in combo)
        if shift == 0:
            continue  # already found by the solver with every weight at 1
        direction = 1 if shift > 0 else -1
        absorber = next(
            (i for i, ch in enumerate(combo) if direction in _vertical_directions(ch)),
            None,
        )
        if absorber is None:
            continue
        paths = []
        for i, ch in enumerate(combo):
            if i == absorber:
                paths.append(path_from_vertices(ch.tangle, _extended_vertices(ch, shift)))
            else:
                paths.append(ch.to_edgepath(None))
        systems.append(EdgepathSystem(knot, tuple(paths), Frac(0)))

    for combo in product(*maximal):
        paths = tuple(ch.to_edgepath(None) for ch in combo)
        systems.append(EdgepathSystem(knot, paths, Frac(-1)))

    systems.sort(key=lambda s: s._sort_key())
    return systems, diagnostics


def enumerate_systems(
    knot: MontesinosKnot, cap: int = DEFAULT_COMBINATION_CAP
) -> list[EdgepathSystem]:
    return enumerate_systems_with_diagnostics(knot, cap)[0]


# -- independent validation ----------------------------------------------------


@dataclass(frozen=True)
class Violation:
    condition: str
    path_index: int
    detail: str

    def __str__(self) -> str:
        return f"({self.condition}) path {self.path_index}: {self.detail}"


def validate_system(system: EdgepathSystem) -> Violation | None:
    """Check E1 through E4 from the stored paths alone, independently of
    how the system was produced. Returns the first violation, or None."""
    # E1: start on the tangle's horizontal edge; moving paths start at <R_i>
    for i, path in enumerate(system.paths):
        if path.tangle != system.knot.tangles[i]:
            return Violation("E1", i, f"path serves {path.tangle}, tangle is {system.knot.tangles[i]}")
        if path.is_constant:
            point = path.constant_point
            if point.edge.end != angle(path.tangle):
                return Violation("E1", i, "constant point off the horizontal edge")
            if point.weight_left < 0 or point.weight_left > 1:
                return Violation("E1", i, "constant weight outside [0, 1]")
        elif path.steps[0].start != angle(path.tangle):
            return Violation("E1", i, "moving path does not start at the tangle vertex")
    # E2: minimality
    for i, path in enumerate(system.paths):
        for a, b in zip(path.steps, path.steps[1:]):
            if a.undirected() == b.undirected():
                return Violation("E2", i, f"step {b} retraces {a}")
            if same_triangle(a, b):
                return Violation("E2", i, f"steps {a} and {b} lie on one triangle")
    # E3: common vertical line, v-coordinates summing to zero
    coords = [p.endpoint_uv() for p in system.paths]
    us = {u for u, _ in coords}
    if len(us) != 1:
        return Violation("E3", 0, f"endpoints on several vertical lines: {sorted(map(str, us))}")
    (u0,) = us
    if u0 != system.common_u:
        return Violation("E3", 0, f"stored u {system.common_u} is not the endpoint u {u0}")
    v_sum = Frac(0)
    for _, v in coords:
        v_sum = v_sum + v
    if v_sum != 0:
        return Violation("E3", 0, f"v-coordinates sum to {v_sum}")
    # E4: u never increases along the traversal
    for i, path in enumerate(system.paths):
        if path.is_constant:
            continue
        verts = path.vertices
        if path.final_weight is not None:
            # the far vertex of a partial final edge is never reached
            us_along = [uv_coords(angle(v))[0] for v in verts[:-1]] + [path.u0]
        else:
            us_along = [uv_coords(angle(v))[0] for v in verts]
        for a, b in zip(us_along, us_along[1:]):
            if b > a:
                return Violation("E4", i, "u-coordinate increases leftward")
    return None


# -- Seifert reference ---------------------------------------------------------


def _edge_parity(a: Frac, b: Frac) -> frozenset:
    return frozenset(((a.num % 2, a.den % 2), (b.num % 2, b.den % 2)))


def _path_parity_ok(path: Edgepath) -> bool:
    verts = path.vertices
    classes = {_edge_parity(a, b) for a, b in zip(verts, verts[1:])}
    return len(classes) == 1


def penultimate_vertex(path: Edgepath) -> Frac:
    """The v-axis vertex just before <inf> on a maximal path."""
    verts = path.vertices
    if not verts[-1].is_infinite:
        raise ValueError("path does not reach <inf>")
    return verts[-2]


def is_seifert_candidate(system: EdgepathSystem) -> bool:
    """The two parity conditions for representing a Seifert surface:
    every path uses edges of a single mod-2 class, and the number of paths
    whose penultimate vertex is an odd integer is even."""
    if system.system_type != "III":
        return False
    if not all(_path_parity_ok(p) for p in system.paths):
        return False
    odd = sum(1 for p in system.paths if penultimate_vertex(p).num % 2 != 0)
    return odd % 2 == 0


def _system_twist(system: EdgepathSystem) -> Frac:
    total = Frac(0)
    for p in system.paths:
        total = total + p.twist()
    return total


def find_seifert_system(knot: MontesinosKnot) -> EdgepathSystem:
    """The slope-zero reference system: the first type III system passing
    both parity conditions. All passing systems must agree on the twist;
    disagreement or absence is an error, never silently resolved."""
    skeletons = [enumerate_skeletons(f) for f in knot.tangles]
    maximal = [[sk for sk in sks if not sk.constant and sk.is_maximal] for sks in skeletons]
    candidates = []
    for combo in product(*maximal):
        paths = tuple(ch.to_edgepath(None) for ch in combo)
        system = EdgepathSystem(knot, paths, Frac(-1))
        if is_seifert_candidate(system):
            candidates.append(system)
    if not candidates:
        raise SeifertReferenceError(f"no Seifert reference for {knot}")
    candidates.sort(key=lambda s: s._sort_key())
    twists = {_system_twist(s) for s in candidates}
    if len(twists) > 1:
        raise SeifertReferenceError(
            f"ambiguous reference for {knot}: twists {sorted(map(str, twists))}"
        )
    return candidates[0]
