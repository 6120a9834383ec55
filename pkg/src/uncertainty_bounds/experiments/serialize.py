"""JSON encoding of fixtures and problem instances.

Complex numbers are ``[re, im]`` pairs; matrices are row-major lists of
rows.  Plain real numbers are accepted wherever a complex is expected.

Instance document::

    {
      "state": {"ket": [[re, im], ...]}  or  {"rho": [[[re, im], ...], ...]},
      "observables": [matrix, ...],
      "weights": [[re, im], ...],                       (optional, default ones)
      "params": {"a": c, "b": c, "m": c, "n": c},       (optional; or m_t/n_t;
                                                         each c may be a list
                                                         with one entry per pair)
      "matching_cases": [{"a": c, "b": c, "m": c, "n": c}, ...]   (optional)
    }
"""

from __future__ import annotations

import json

import numpy as np

from ..core import Observable, State, make_state
from ..errors import BoundsError, InputSchemaError
from ..multi import PairCase, WeightVector
from .fixtures import Fixture, fig2_state

PARAM_KEYS = ("a", "b", "m", "n", "m_t", "n_t")


def encode_complex(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def decode_complex(v) -> complex:
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return complex(v)
    if isinstance(v, (list, tuple)) and len(v) == 2 and all(
            isinstance(p, (int, float)) and not isinstance(p, bool) for p in v):
        return complex(v[0], v[1])
    raise InputSchemaError(f"expected a number or an [re, im] pair, got {v!r}")


def encode_vector(v) -> list[list[float]]:
    return [encode_complex(z) for z in np.ravel(v)]


def decode_vector(v) -> np.ndarray:
    if not isinstance(v, list):
        raise InputSchemaError(f"expected a list, got {type(v).__name__}")
    return np.array([decode_complex(z) for z in v], dtype=complex)


def encode_matrix(m) -> list[list[list[float]]]:
    return [encode_vector(row) for row in np.asarray(m)]


def decode_matrix(m) -> np.ndarray:
    if not isinstance(m, list) or not m:
        raise InputSchemaError("expected a non-empty list of rows")
    rows = [decode_vector(r) for r in m]
    if len({len(r) for r in rows}) != 1:
        raise InputSchemaError("ragged matrix")
    return np.array(rows)


def _decode_param(v):
    if isinstance(v, list) and v and isinstance(v[0], list):
        return [decode_complex(z) for z in v]
    return decode_complex(v)


def _encode_param(v):
    if np.ndim(v) == 0:
        return encode_complex(v)
    return encode_vector(v)


def encode_params(p: dict) -> dict:
    return {k: _encode_param(v) for k, v in p.items() if v is not None}


def decode_params(p: dict) -> dict:
    if not isinstance(p, dict):
        raise InputSchemaError("params must be an object")
    unknown = set(p) - set(PARAM_KEYS)
    if unknown:
        raise InputSchemaError(f"unknown parameter keys {sorted(unknown)}")
    return {k: _decode_param(v) for k, v in p.items()}


def encode_case(c: PairCase) -> dict:
    return encode_params({k: getattr(c, k) for k in PARAM_KEYS})


def decode_case(d: dict) -> PairCase:
    p = decode_params(d)
    if "a" not in p or "b" not in p:
        raise InputSchemaError("a matching case needs a and b")
    return PairCase(**p)


def encode_state(s: State) -> dict:
    if s.is_pure:
        return {"ket": encode_vector(s.ket)}
    return {"rho": encode_matrix(s.rho)}


def decode_state(d: dict) -> State:
    if not isinstance(d, dict) or len(set(d) & {"ket", "rho"}) != 1:
        raise InputSchemaError("state must have exactly one of 'ket' or 'rho'")
    if "ket" in d:
        return make_state(ket=decode_vector(d["ket"]))
    return make_state(rho=decode_matrix(d["rho"]))


def decode_instance(doc: dict) -> dict:
    """Validate an instance document and return ``compare_bounds`` kwargs."""
    if not isinstance(doc, dict):
        raise InputSchemaError("instance document must be a JSON object")
    for key in ("state", "observables"):
        if key not in doc:
            raise InputSchemaError(f"missing required key {key!r}")
    try:
        out = {
            "s": decode_state(doc["state"]),
            "obs": [Observable(decode_matrix(m)) for m in doc["observables"]],
        }
        if "weights" in doc:
            out["w"] = WeightVector(tuple(decode_vector(doc["weights"])))
        if "params" in doc:
            out["params"] = decode_params(doc["params"])
        if "matching_cases" in doc:
            out["matching_cases"] = [decode_case(c) for c in doc["matching_cases"]]
    except InputSchemaError:
        raise
    except (BoundsError, TypeError, ValueError) as exc:
        raise InputSchemaError(str(exc)) from exc
    return out


def encode_instance(s: State, obs, w: WeightVector | None = None, params: dict | None = None,
                    matching_cases=None) -> dict:
    doc = {"state": encode_state(s), "observables": [encode_matrix(o.matrix) for o in obs]}
    if w is not None:
        doc["weights"] = encode_vector(w.x)
    if params is not None:
        doc["params"] = encode_params(params)
    if matching_cases is not None:
        doc["matching_cases"] = [encode_case(c) for c in matching_cases]
    return doc


def fixture_to_dict(fx: Fixture) -> dict:
    doc = {
        "name": fx.name,
        "observables": [encode_matrix(o.matrix) for o in fx.observables],
        "weights": encode_vector(fx.weights.x),
        "printed": {k: (encode_matrix(v) if np.ndim(v) == 2 else _encode_param(v))
                    for k, v in fx.printed.items()},
    }
    if fx.state is not None:
        doc["state"] = encode_state(fx.state)
    else:
        doc["state_family"] = {"kind": "theta_phase", "phase": encode_complex(fx.printed["phase"])}
    cases = {}
    for name, case in fx.param_cases.items():
        if isinstance(case, dict):
            cases[name] = encode_params(case)
        else:
            cases[name] = [encode_case(c) for c in case]
    doc["param_cases"] = cases
    return doc


def fixture_from_dict(doc: dict) -> Fixture:
    cases = {}
    for name, case in doc["param_cases"].items():
        if isinstance(case, dict):
            cases[name] = decode_params(case)
        else:
            cases[name] = [decode_case(c) for c in case]
    printed = {}
    for k, v in doc.get("printed", {}).items():
        if isinstance(v, list) and v and isinstance(v[0], list) and isinstance(v[0][0], list):
            printed[k] = decode_matrix(v)
        else:
            printed[k] = _decode_param(v)
    kwargs = {}
    if "state" in doc:
        kwargs["state"] = decode_state(doc["state"])
    else:
        phase = decode_complex(doc["state_family"]["phase"])
        kwargs["state_family"] = lambda theta: fig2_state(theta, phase)
    return Fixture(
        name=doc["name"],
        observables=tuple(Observable(decode_matrix(m)) for m in doc["observables"]),
        weights=WeightVector(tuple(decode_vector(doc["weights"]))),
        param_cases=cases,
        printed=printed,
        **kwargs,
    )


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)
