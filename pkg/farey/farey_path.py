from __future__ import annotations
from cf_core import AccessBudget
from cf_core import CoefficientStream
from cf_core import ExtendedRational
from cf_core import INFINITY
from collections import Counter
from dataclasses import dataclass
import json
from moebius import convergents
from typing import Any
from typing import Optional

def is_adjacent(u: ExtendedRational, v: ExtendedRational) -> bool:
    """Farey adjacency of reduced a/b and c/d: ad - bc = ±1."""
    if u == v:
        raise ValueError(f"adjacency needs two distinct vertices. got {u} twice.")
    return abs(u.num * v.den - u.den * v.num) == 1

@dataclass(frozen=True)
class FareyPath:
    """path <∞, v_0, v_1, ...> of convergents in the Farey graph."""
    vertices: tuple[ExtendedRational, ...]

    def __post_init__(self) -> None:
        for u, v in zip(self.vertices, self.vertices[1:]):
            assert u != v and is_adjacent(u, v), f"{u} and {v} are not Farey neighbours."

    def edges(self) -> list[tuple[ExtendedRational, ExtendedRational]]:
        return list(zip(self.vertices, self.vertices[1:]))

    def __len__(self) -> int:
        return len(self.vertices)

    def to_dic(self) -> dict[str, Any]:
        return {
            "vertices": [
                {"num": str(vertex.num), "den": str(vertex.den)} for vertex in self.vertices
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dic())

    @classmethod
    def from_dic(cls, path_dic: dict[str, Any]) -> FareyPath:
        return cls(tuple(
            ExtendedRational(int(vertex["num"]), int(vertex["den"]))
            for vertex in path_dic["vertices"]
        ))

def path_from_stream(
    stream: CoefficientStream,
    n: int,
    budget: Optional[AccessBudget] = None
) -> FareyPath:
    """<∞, v_0, ..., v_{n-1}>."""
    if n < 1:
        raise ValueError(f"a path needs at least one convergent. got n = {n}.")
    return FareyPath((INFINITY,) + convergents(stream, n, budget).entries)

@dataclass(frozen=True)
class RevisitHistogram:
    counts: dict[ExtendedRational, int]
    top_two: tuple[tuple[ExtendedRational, int], ...]

    def revisited(self, min_count: int) -> list[ExtendedRational]:
        """vertices seen at least min_count times."""
        return [vertex for vertex, count in self.counts.items() if min_count <= count]

def revisit_histogram(path: FareyPath) -> RevisitHistogram:
    """occurrence count of every vertex. ties in the top two keep path order."""
    counter: Counter[ExtendedRational] = Counter(path.vertices)
    return RevisitHistogram(dict(counter), tuple(counter.most_common(2)))
