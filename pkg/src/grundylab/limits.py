"""Vertex-count caps for the exponential solvers.

``GLAB_SOLVER_LIMIT`` overrides the caps at call time.  A bare integer sets
the Grundy and chromatic caps; ``name=value`` pairs separated by commas set
individual caps (``GLAB_SOLVER_LIMIT="grundy=18,psi=11"``).  Values are
clamped to ``SAFE_MAXIMA``.  The enumeration cap is fixed.
"""

import os

DEFAULTS = {
    "grundy": 20,
    "chi": 20,
    "psi": 10,
    "brute": 8,
    "iso": 10,
    "sweep": 7,
    "definitional": 7,
}

SAFE_MAXIMA = {
    "grundy": 24,
    "chi": 32,
    "psi": 12,
    "brute": 10,
    "iso": 12,
    "sweep": 9,
    "definitional": 10,
}

ENUMERATION_LIMIT = 8
ENV_VAR = "GLAB_SOLVER_LIMIT"


class SolverLimitError(ValueError):
    """Input exceeds the vertex cap of an exact solver."""


def _overrides():
    raw = os.environ.get(ENV_VAR, "").strip()
    if not raw:
        return {}
    if raw.isdigit():
        return {"grundy": int(raw), "chi": int(raw)}
    out = {}
    for part in raw.split(","):
        key, _, value = part.partition("=")
        key = key.strip()
        if key not in DEFAULTS or not value.strip().isdigit():
            raise ValueError(f"bad {ENV_VAR} entry: {part!r}")
        out[key] = int(value)
    return out


def limit(name):
    value = _overrides().get(name, DEFAULTS[name])
    return max(1, min(value, SAFE_MAXIMA[name]))


def require(name, n, what=None):
    cap = limit(name)
    if n > cap:
        raise SolverLimitError(f"{what or name}: n={n} exceeds solver limit {cap}")
