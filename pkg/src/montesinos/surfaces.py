"""Invariants of the candidate surface behind a validated edgepath system.

The twist of a system is the sum of its edge twists. Boundary slopes are
twist differences against the Seifert reference, so the reference itself
has slope 0 and only differences matter. The number of sheets is the
least common multiple of the integers forced by the path endpoints: a
final partial edge of length k/(k+l) in lowest terms forces a multiple of
k+l, and a constant path with weight k/(k+l) on the interior vertex forces
a multiple of k. Sheets factor as (boundary components) x (denominator of
the reduced slope); reports carry the slope expression over the sheet
count unreduced, so any collapse of that denominator is auditable. For a
type I system with common endpoint u the Euler characteristic satisfies

    -chi / sheets = sum of non-constant path lengths
                    + N_const - N
                    + (N - 2 - sum over constant paths of 1/q_j) / (1 - u)

and the right-hand side times the sheet count must come out an integer.

Essentiality is reported as "proven" only where one of the two sufficient
conditions applies to a type I system: all final edges share one sign, or
at least one path is constant. Everything else is "undetermined"; the
package never claims a surface is inessential.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd, lcm

from .rationals import Frac
from .systems import EdgepathSystem, is_seifert_candidate


class IntegrityError(Exception):
    """An identity that must hold for every report failed: a bug or an
    input outside the machinery's stated scope."""


def system_twist(system: EdgepathSystem) -> Frac:
    total = Frac(0)
    for path in system.paths:
        total = total + path.twist()
    return total


def boundary_slope(system: EdgepathSystem, reference: EdgepathSystem) -> Frac:
    if not is_seifert_candidate(reference):
        raise ValueError("reference system fails the Seifert parity conditions")
    return system_twist(system) - system_twist(reference)


def _constant_weight(path, common_u: Frac) -> Frac:
    # invert u = 1 - t/q for the weight on the interior vertex
    return (Frac(1) - common_u) * Frac(path.tangle.den)


def number_of_sheets(system: EdgepathSystem) -> int:
    factors = [1]
    for path in system.paths:
        if path.is_constant:
            t = _constant_weight(path, system.common_u)
            if t <= 0 or t > 1:
                raise IntegrityError(f"constant weight {t} outside (0, 1]")
            factors.append(t.num)
        else:
            length = path.final_weight if path.final_weight is not None else Frac(1)
            factors.append(length.den)
    return lcm(*factors)


def boundary_component_count(sheets: int, slope: Frac) -> int:
    components, remainder = divmod(sheets, slope.den)
    if remainder:
        raise IntegrityError(
            f"slope denominator {slope.den} does not divide the {sheets} sheets"
        )
    return components


def euler_ratio(lengths, n_const: int, n_total: int, const_denoms, u0: Frac) -> Frac:
    """-chi/sheets from the raw ingredients; exposed for direct checks."""
    total = Frac(0)
    for x in lengths:
        total = total + x
    total = total + Frac(n_const - n_total)
    coeff = Frac(n_total - 2)
    for q in const_denoms:
        coeff = coeff - Frac(1, q)
    return total + coeff / (Frac(1) - u0)


def euler_characteristic_type_I(system: EdgepathSystem, sheets: int) -> int:
    if system.system_type != "I":
        raise ValueError("the Euler characteristic formula covers type I only")
    lengths = [p.length() for p in system.paths if not p.is_constant]
    const_denoms = [p.tangle.den for p in system.paths if p.is_constant]
    ratio = euler_ratio(
        lengths, len(const_denoms), len(system.paths), const_denoms, system.common_u
    )
    chi = -(ratio * sheets)
    if chi.den != 1:
        raise IntegrityError(f"non-integral Euler characteristic {chi}")
    return chi.num


def essentiality(system: EdgepathSystem) -> tuple[str, str | None]:
    """("proven", reason) or ("undetermined", None)."""
    if system.system_type != "I":
        return ("undetermined", None)
    if any(p.is_constant for p in system.paths):
        return ("proven", "constant-path")
    signs = {p.last_sign() for p in system.paths}
    if len(signs) == 1 and None not in signs:
        return ("proven", "common-sign")
    return ("undetermined", None)


# -- reports -------------------------------------------------------------


CSV_COLUMNS = (
    "knot",
    "type",
    "slope",
    "twist",
    "sheets",
    "euler",
    "boundary_components",
    "essential",
    "seifert",
)


@dataclass(frozen=True)
class SurfaceReport:
    system: EdgepathSystem
    twist: Frac
    slope: Frac
    raw_slope: tuple[int, int]
    sheets: int
    euler: int | None
    boundary_components: int
    essential: str
    essential_reason: str | None
    seifert_flag: bool
    notes: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "slope": str(self.slope),
            "twist": str(self.twist),
            "sheets": self.sheets,
            "euler": self.euler,
            "boundary_components": self.boundary_components,
            "essential": self.essential,
            "type": self.system.system_type,
            "knot": self.system.knot.spec_string,
            "seifert": self.seifert_flag,
            "essential_reason": self.essential_reason,
            "raw_slope": f"{self.raw_slope[0]}/{self.raw_slope[1]}",
            "paths": list(self.system.render_paths()),
            "notes": list(self.notes),
        }

    def to_csv_row(self) -> list[str]:
        return [
            self.system.knot.spec_string,
            self.system.system_type,
            str(self.slope),
            str(self.twist),
            str(self.sheets),
            "" if self.euler is None else str(self.euler),
            str(self.boundary_components),
            self.essential,
            "true" if self.seifert_flag else "false",
        ]


def build_report(system: EdgepathSystem, reference_twist: Frac) -> SurfaceReport:
    twist = system_twist(system)
    slope = twist - reference_twist
    sheets = number_of_sheets(system)
    raw_num = slope * sheets
    if raw_num.den != 1:
        raise IntegrityError(f"slope {slope} not supported on {sheets} sheets")
    raw_slope = (raw_num.num, sheets)
    components = boundary_component_count(sheets, slope)
    euler = (
        euler_characteristic_type_I(system, sheets)
        if system.system_type == "I"
        else None
    )
    status, reason = essentiality(system)
    seifert = is_seifert_candidate(system)
    if seifert and slope != 0:
        raise IntegrityError(f"Seifert-parity system with nonzero slope {slope}")
    notes = []
    if components > 1:
        g = gcd(abs(raw_slope[0]), raw_slope[1])
        notes.append(
            f"slope expression {raw_slope[0]}/{raw_slope[1]} reduces by factor {g}; "
            "the component count uses the reduced denominator"
        )
    return SurfaceReport(
        system=system,
        twist=twist,
        slope=slope,
        raw_slope=raw_slope,
        sheets=sheets,
        euler=euler,
        boundary_components=components,
        essential=status,
        essential_reason=reason,
        seifert_flag=seifert,
        notes=tuple(notes),
    )


def build_reports(systems, reference: EdgepathSystem) -> list[SurfaceReport]:
    """Reports for all systems against one reference, sorted by slope then
    system type."""
    ref_twist = system_twist(reference)
    reports = [build_report(s, ref_twist) for s in systems]
    reports.sort(key=lambda r: (r.slope, r.system.system_type))
    return reports


def reports_to_json(reports) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)
