"""Named check suites run over a fleet of bodies."""
from __future__ import annotations

import itertools

from .. import dualities as du
from .. import functionals as fn
from ..fleet import default_fleet
from .parser import ExprError

IDENTITY_TOL = 1e-6


def resolve_fleet(selection: str) -> dict:
    """'default' is the whole fleet; otherwise a comma-separated list of member names."""
    fleet = default_fleet()
    if selection == "default":
        return fleet
    names = [s.strip() for s in selection.split(",") if s.strip()]
    missing = [n for n in names if n not in fleet]
    if missing:
        raise ExprError(f"unknown fleet members: {', '.join(missing)}")
    return {n: fleet[n] for n in names}


def _record(name, value, ok, tol):
    return {"name": name, "value": value, "pass": bool(ok), "tolerance": tol}


def identities(fleet, grid, tol=IDENTITY_TOL):
    out = []
    for name, K in fleet.items():
        for ident, d in du.identity_defects(K, grid).items():
            out.append(_record(f"{name}:{ident}", d, d <= tol, tol))
    return out


def classification(fleet, grid, tol=du.RECIPROCAL_TOL):
    out = []
    for name, K in fleet.items():
        rec = du.is_reciprocal(K, grid, tol)
        flw = du.is_flower(du.phi(du.flower(K, grid)), tol)
        out.append(_record(f"{name}:reciprocal", rec.defect, True, tol))
        out.append(_record(f"{name}:agrees_with_flower_test", flw.defect,
                           rec.holds == flw.holds, tol))
    return out


def inequalities(fleet, grid, tol=fn.INEQ_TOL):
    out = []
    bodies = list(fleet.items())
    for name, K in bodies:
        for v in fn.quermass_chain(K, grid) + fn.flower_dominates_classical(K, grid):
            out.append(_record(f"{name}:{v.name}", v.slack, v.holds, v.tolerance))
    for (a, K), (b, T) in itertools.islice(itertools.combinations(bodies, 2), 50):
        for v in (fn.reverse_brunn_minkowski(K, T, grid),
                  fn.flower_af_pair([K, T], grid),
                  fn.flower_af_product([K, T], grid)):
            out.append(_record(f"{a}+{b}:{v.name}", v.slack, v.holds, v.tolerance))
    return out


SUITES = {
    "identities": identities,
    "classification": classification,
    "inequalities": inequalities,
}
