"""Size gates for exact computations, overridable via environment."""

import os

_DEFAULTS = {
    "subset_bfs_max_n": ("RESETLAB_SUBSET_BFS_MAX_N", 24),
    "at_exact_max_n": ("RESETLAB_AT_EXACT_MAX_N", 14),
    "monoid_cap": ("RESETLAB_MONOID_CAP", 500_000),
    "genset_max": ("RESETLAB_GENSET_MAX", 27),
    "thm17_max_n": ("RESETLAB_THM17_MAX_N", 7),
}

DEFAULT_SEED = 20240901


def gate(name: str) -> int:
    """Current value of a gate, honoring its environment override."""
    env, default = _DEFAULTS[name]
    raw = os.environ.get(env)
    if raw is None:
        return default
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{env} must be positive, got {value}")
    return value


def all_gates() -> dict[str, int]:
    return {name: gate(name) for name in _DEFAULTS}
