"""Runtime limits and defaults.

A single module-level :class:`Config` holds the caps used by every explicit
algorithm.  Functions take an optional ``cap`` argument and fall back to the
active config when it is omitted.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path


@dataclass(frozen=True)
class Config:
    enumeration_cap: int = 10**6      # max elements listed by elements()
    subgroup_cap: int = 10**4         # max |G| for all_subgroups()
    explicit_limit: int = 10**5       # max |G| for element-by-element searches
    coset_degree_cap: int = 10**4     # max index for coset_action()
    isomorphism_cap: int = 10**3      # max order for abstract_isomorphic()
    pmax: int = 10**5
    tolerance: float = 0.02
    seed: int = 20240601
    discovery_attempts: int = 4000

    def to_dict(self) -> dict:
        return asdict(self)


_active = Config()


def get_config() -> Config:
    return _active


def set_config(cfg: Config) -> None:
    global _active
    _active = cfg


def load_config(path: str | Path) -> Config:
    """Read a JSON object of overrides on top of the defaults."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    known = {f.name for f in fields(Config)}
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    return replace(Config(), **data)
