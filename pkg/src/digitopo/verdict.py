"""Three-valued answers carrying a certificate or a witness."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

TRUE = "true"
FALSE = "false"
UNKNOWN = "unknown"


@dataclass
class Verdict:
    """Outcome of a decision procedure.

    Truthiness is ``status == "true"``; an unknown verdict is falsy, so callers
    that must tell "no" from "ran out of budget" check ``status`` directly.
    """

    status: str
    certificate: Any = None
    witness: Any = None
    explored: int = 0

    def __bool__(self):
        return self.status == TRUE

    @property
    def unknown(self) -> bool:
        return self.status == UNKNOWN

    @classmethod
    def yes(cls, certificate=None, explored=0):
        return cls(TRUE, certificate=certificate, explored=explored)

    @classmethod
    def no(cls, witness=None, explored=0):
        return cls(FALSE, witness=witness, explored=explored)

    @classmethod
    def maybe(cls, witness=None, explored=0):
        return cls(UNKNOWN, witness=witness, explored=explored)
