"""Replayable records of elementary moves between digital spaces."""

from __future__ import annotations

from dataclasses import dataclass, field

DELETE_POINT = "delete-point"
ADD_POINT = "add-point"
DELETE_EDGE = "delete-edge"
ADD_EDGE = "add-edge"
CONTRACT_PAIR = "contract-pair"
SPLIT_POINT = "split-point"

INVERSE_KIND = {
    DELETE_POINT: ADD_POINT,
    ADD_POINT: DELETE_POINT,
    DELETE_EDGE: ADD_EDGE,
    ADD_EDGE: DELETE_EDGE,
    CONTRACT_PAIR: SPLIT_POINT,
    SPLIT_POINT: CONTRACT_PAIR,
}


@dataclass(frozen=True)
class TransformStep:
    """One elementary move.

    Field use by kind:

    ``delete-point``  vertex
    ``add-point``     vertex, rim
    ``delete-edge`` / ``add-edge``  pair
    ``contract-pair`` pair (the contracted x, y), vertex (the fresh z)
    ``split-point``   vertex (the split z), pair (fresh x, y), parts (part_x, part_y)
    """

    kind: str
    vertex: str | None = None
    pair: tuple[str, str] | None = None
    rim: tuple[str, ...] = ()
    parts: tuple[tuple[str, ...], tuple[str, ...]] | None = None

    def __post_init__(self):
        if self.kind not in INVERSE_KIND:
            raise ValueError(f"unknown step kind {self.kind!r}")

    def to_dict(self) -> dict:
        d = {"kind": self.kind}
        if self.vertex is not None:
            d["vertex"] = self.vertex
        if self.pair is not None:
            d["pair"] = list(self.pair)
        if self.kind == ADD_POINT:
            d["rim"] = list(self.rim)
        if self.parts is not None:
            d["parts"] = [list(self.parts[0]), list(self.parts[1])]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "TransformStep":
        pair = tuple(d["pair"]) if d.get("pair") is not None else None
        parts = None
        if d.get("parts") is not None:
            parts = (tuple(d["parts"][0]), tuple(d["parts"][1]))
        return cls(d["kind"], d.get("vertex"), pair, tuple(d.get("rim", ())), parts)


@dataclass(frozen=True)
class Certificate:
    """Ordered steps plus canonical keys of the start and end spaces."""

    steps: tuple[TransformStep, ...]
    start_key: bytes
    end_key: bytes
    meta: dict = field(default_factory=dict, compare=False)

    def __len__(self):
        return len(self.steps)

    def to_dict(self) -> dict:
        return {
            "start_key": self.start_key.hex(),
            "end_key": self.end_key.hex(),
            "steps": [s.to_dict() for s in self.steps],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        return cls(
            tuple(TransformStep.from_dict(s) for s in d["steps"]),
            bytes.fromhex(d["start_key"]),
            bytes.fromhex(d["end_key"]),
        )
