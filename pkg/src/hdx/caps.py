"""Feasibility caps for the exponential enumerations.

Every exhaustive search in the package is guarded by an explicit cap and
fails loudly (SearchSpaceTooLarge / TooLarge) beyond it.  Defaults define
"desk scale"; they can be overridden per call or globally through the
HDX_CAPS environment variable, e.g.

    HDX_CAPS="exhaustive_bits=26,mitm_pair_bits=44"
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields


@dataclass(frozen=True)
class FeasibilityCaps:
    # Exhaustive coset / class enumeration: at most 2**exhaustive_bits vectors.
    exhaustive_bits: int = 24
    # Meet-in-the-middle: at most 2**mitm_pair_bits implicit half-sum pairs,
    # i.e. ambient dimension m with 2**m <= 2**mitm_pair_bits.
    mitm_pair_bits: int = 40
    # Dense eigensolver vertex cap.
    spectrum_n: int = 4096
    # Exhaustive Cheeger subset scan vertex cap (2**(n-1) subsets).
    cheeger_n: int = 26
    # Cayley group closure size cap.
    group_max: int = 20000

    def replaced(self, **kwargs) -> "FeasibilityCaps":
        data = {f.name: getattr(self, f.name) for f in fields(self)}
        data.update(kwargs)
        return FeasibilityCaps(**data)

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def caps_from_env(env: str | None = None) -> FeasibilityCaps:
    """Parse HDX_CAPS ("key=value,key=value"); unknown keys are rejected."""
    if env is None:
        env = os.environ.get("HDX_CAPS", "")
    caps = FeasibilityCaps()
    if not env.strip():
        return caps
    valid = {f.name for f in fields(FeasibilityCaps)}
    overrides = {}
    for item in env.split(","):
        item = item.strip()
        if not item:
            continue
        key, _, value = item.partition("=")
        key = key.strip()
        if key not in valid:
            raise ValueError(f"unknown HDX_CAPS key: {key!r}")
        overrides[key] = int(value)
    return caps.replaced(**overrides)


DEFAULT_CAPS = caps_from_env()


def get_caps(caps: FeasibilityCaps | None) -> FeasibilityCaps:
    return DEFAULT_CAPS if caps is None else caps
