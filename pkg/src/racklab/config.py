"""Size caps shared by the enumeration and homology code.

Precedence is flag > ``RACKLAB_CAPS`` environment variable > default.  The
environment variable is a comma-separated list such as
``element=20000,node=200000,face=2000000,snf=20000``.
"""

import os
from dataclasses import dataclass, fields, replace

from .errors import MalformedInputError


@dataclass(frozen=True)
class Caps:
    element: int = 20000
    node: int = 200000
    face: int = 2000000
    snf: int = 20000

    def __post_init__(self):
        for f in fields(self):
            if getattr(self, f.name) <= 0:
                raise MalformedInputError(f"cap {f.name!r} must be positive")


DEFAULT_PRIMES = (1000003, 2000003)


def caps_from_env(environ=None, **overrides):
    environ = os.environ if environ is None else environ
    caps = Caps()
    spec = environ.get("RACKLAB_CAPS", "").strip()
    if spec:
        values = {}
        for item in spec.split(","):
            key, sep, value = item.partition("=")
            key = key.strip()
            if not sep or key not in {f.name for f in fields(Caps)}:
                raise MalformedInputError(f"bad RACKLAB_CAPS entry {item!r}")
            try:
                values[key] = int(value)
            except ValueError:
                raise MalformedInputError(f"bad RACKLAB_CAPS value {item!r}") from None
        caps = replace(caps, **values)
    given = {k: v for k, v in overrides.items() if v is not None}
    return replace(caps, **given) if given else caps
