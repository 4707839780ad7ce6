"""Point-line incidence structures, their duals, Levi and Menger graphs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Hashable, Sequence

from .graph import Graph, make_graph
from .symmetry import find_isomorphism


class ConfigurationError(ValueError):
    pass


@dataclass(frozen=True)
class IncidenceConfiguration:
    """Points ``0..len(points)-1`` (with display names) and lines as point sets."""

    points: tuple[str, ...]
    lines: tuple[tuple[int, ...], ...]
    line_names: tuple[str, ...] | None = None

    def __post_init__(self):
        seen = set()
        for line in self.lines:
            if any(not 0 <= p < len(self.points) for p in line):
                raise ConfigurationError(f"line {line} mentions an unknown point")
            key = tuple(sorted(line))
            if key in seen:
                raise ConfigurationError(f"repeated line {key}")
            seen.add(key)

    @classmethod
    def from_lines(cls, points: Sequence[Hashable], lines: Sequence[Sequence[Hashable]]):
        index = {p: i for i, p in enumerate(points)}
        return cls(
            tuple(str(p) for p in points),
            tuple(tuple(sorted(index[p] for p in line)) for line in lines),
        )

    @property
    def flags(self) -> list[tuple[int, int]]:
        return [(p, i) for i, line in enumerate(self.lines) for p in line]

    def lines_through(self, p: int) -> list[int]:
        return [i for i, line in enumerate(self.lines) if p in line]

    def point_degrees(self) -> list[int]:
        return [len(self.lines_through(p)) for p in range(len(self.points))]

    def line_sizes(self) -> list[int]:
        return [len(line) for line in self.lines]

    def is_n3(self) -> bool:
        """n points, n lines, 3 points per line, 3 lines per point, and any
        two points on at most one common line."""
        if len(self.points) != len(self.lines):
            return False
        if set(self.line_sizes()) != {3} or set(self.point_degrees()) != {3}:
            return False
        return self.is_linear()

    def is_linear(self) -> bool:
        pairs = set()
        for line in self.lines:
            for pq in itertools.combinations(sorted(line), 2):
                if pq in pairs:
                    return False
                pairs.add(pq)
        return True

    def dual(self) -> IncidenceConfiguration:
        names = self.line_names or tuple("".join(self.points[p] for p in line) for line in self.lines)
        return IncidenceConfiguration(
            tuple(names),
            tuple(tuple(self.lines_through(p)) for p in range(len(self.points))),
            line_names=self.points,
        )

    def levi_graph(self) -> tuple[Graph, list[int]]:
        """Bipartite incidence graph: points first, then lines; colours 0/1."""
        np_ = len(self.points)
        edges = [(p, np_ + i) for p, i in self.flags]
        labels = list(self.points) + [f"L{i}" for i in range(len(self.lines))]
        g = make_graph(np_ + len(self.lines), edges, labels=labels)
        return g, [0] * np_ + [1] * len(self.lines)


def find_duality(cfg: IncidenceConfiguration) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """An incidence-preserving bijection points -> lines and lines -> points.

    Returns ``(point_to_line, line_to_point)`` or None. Found as a
    colour-preserving isomorphism between the Levi graph of ``cfg`` and the
    Levi graph of its dual, that is, a Levi automorphism swapping the parts.
    """
    np_, nl = len(cfg.points), len(cfg.lines)
    if np_ != nl:
        raise ConfigurationError("self-duality needs as many points as lines")
    # lines are distinct, so points sharing all their lines rule out a duality
    if len({tuple(cfg.lines_through(p)) for p in range(np_)}) != np_:
        return None
    levi, colors = cfg.levi_graph()
    dual_levi, dual_colors = cfg.dual().levi_graph()
    iso = find_isomorphism(levi, dual_levi, colors, dual_colors)
    if iso is None:
        return None
    m = iso.mapping
    point_to_line = tuple(m[p] for p in range(np_))
    line_to_point = tuple(m[np_ + i] - nl for i in range(nl))
    return point_to_line, line_to_point


def is_duality(cfg: IncidenceConfiguration, point_to_line, line_to_point) -> bool:
    """p on L  iff  line_to_point[L] on point_to_line[p]."""
    for p in range(len(cfg.points)):
        for i, line in enumerate(cfg.lines):
            if (p in line) != (line_to_point[i] in cfg.lines[point_to_line[p]]):
                return False
    return True


def is_self_dual(cfg: IncidenceConfiguration) -> bool:
    """False outright when the point and line counts differ."""
    if len(cfg.points) != len(cfg.lines):
        return False
    return find_duality(cfg) is not None


def menger_graph(cfg: IncidenceConfiguration) -> Graph:
    """Points, adjacent when some line holds both."""
    pairs = set()
    for line in cfg.lines:
        pairs.update(itertools.combinations(sorted(line), 2))
    return make_graph(len(cfg.points), sorted(pairs), labels=cfg.points)


FANO_LINES = ("124", "235", "346", "457", "561", "672", "713")


def fano_plane() -> IncidenceConfiguration:
    points = [str(i) for i in range(1, 8)]
    return IncidenceConfiguration.from_lines(points, [list(line) for line in FANO_LINES])
