"""Single-instance comparison of every applicable bound."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .. import classic
from ..core import Observable, State, variance
from ..multi import (
    WeightVector,
    all_matchings,
    composite_bound,
    resolve_multi,
    theorem2_bounds,
    verify_multi_identity,
)
from ..pair import verify_sum_identity

SANDWICH_TOL = 1e-9
IDENTITY_TOL = 1e-10


@dataclass
class BoundsReport:
    variances: list[float]
    sov: float
    weighted_sov: float
    bounds: dict[str, float] = field(default_factory=dict)
    residues: dict[str, float] = field(default_factory=dict)
    flags: dict[str, bool] = field(default_factory=dict)
    saturation_mode: bool = False

    @property
    def ok(self) -> bool:
        return all(self.flags.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.flags.items() if not v]

    def to_dict(self) -> dict:
        return {
            "variances": self.variances,
            "sov": self.sov,
            "weighted_sov": self.weighted_sov,
            "bounds": self.bounds,
            "residues": self.residues,
            "flags": self.flags,
            "saturation_mode": self.saturation_mode,
            "ok": self.ok,
        }


def _below(value: float, target: float, tol: float) -> bool:
    return bool(value <= target + tol * max(1.0, abs(target)))


def compare_bounds(
    s: State,
    obs: Sequence[Observable],
    w: WeightVector | None = None,
    params: dict | None = None,
    matching_cases=None,
    mp_cfg: classic.MPConfig | None = None,
    tol: float = SANDWICH_TOL,
) -> BoundsReport:
    """Evaluate every bound that applies to the instance and flag violations.

    ``params`` holds the free parameters of the improvable bounds as keyword
    arguments of ``resolve_multi`` (for two observables this is a single
    pair).  ``matching_cases`` enables the matching composites for even N.
    """
    obs = list(obs)
    n = len(obs)
    w = w or WeightVector.ones(n)
    variances = [variance(o, s) for o in obs]
    sov = sum(variances)
    wsov = sum(abs(x) ** 2 * v for x, v in zip(w.x, variances))
    rep = BoundsReport(variances, sov, wsov)
    b, f = rep.bounds, rep.flags

    if n == 2:
        a_obs, b_obs = obs
        prod = classic.product_of_stds(a_obs, b_obs, s)
        b["product_of_stds"] = prod
        b["robertson"] = classic.robertson(a_obs, b_obs, s)
        b["schrodinger"] = classic.schrodinger(a_obs, b_obs, s)
        b["mp_l2"] = classic.mp_l2(a_obs, b_obs, s)
        f["robertson"] = _below(b["robertson"], prod, tol)
        f["schrodinger"] = _below(b["schrodinger"], prod, tol)
        f["mp_l2"] = _below(b["mp_l2"], sov, tol)
        if s.is_pure:
            b["mp_l1"] = classic.mp_l1(a_obs, b_obs, s, mp_cfg)
            b["mp"] = max(b["mp_l1"], b["mp_l2"])
            f["mp"] = _below(b["mp"], sov, tol)
        rep.residues["sum_identity"] = verify_sum_identity(a_obs, b_obs, s, w.pair(0, 1))
    else:
        b["fb"] = classic.fb_bound(obs, s)
        b["pb"] = classic.pb_bound(obs, s)
        f["fb"] = _below(b["fb"], sov, tol)
        f["pb"] = _below(b["pb"], sov, tol)
    rep.residues["multi_identity"] = verify_multi_identity(obs, s, w)
    for name in ("sum_identity", "multi_identity"):
        if name in rep.residues:
            f[name] = bool(rep.residues[name] <= IDENTITY_TOL * (1.0 + n * wsov))

    if params is not None:
        d = resolve_multi(w, **params)
        rep.saturation_mode = bool(d.is_degenerate)
        lower, upper = theorem2_bounds(obs, s, w, d, allow_degenerate=True)
        b["lower"], b["upper"] = lower, upper
        f["lower"] = _below(lower, wsov, tol)
        f["upper"] = _below(wsov, upper, tol)
        for k, (r1, r2) in enumerate(d.residues(w), start=1):
            rep.residues[f"constraint_{k}"] = max(r1, r2)

    if matching_cases is not None and n % 2 == 0:
        tb_max, tb_avg = composite_bound(obs, s, all_matchings(n), matching_cases, w,
                                         allow_degenerate=True)
        b["tb_max"], b["tb_avg"] = tb_max, tb_avg
        f["tb_max"] = _below(tb_max, wsov, tol)
    return rep
