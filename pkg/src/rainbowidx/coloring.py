from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeColoring:
    """Colors 1..palette_size, one per edge-list index of a companion graph."""

    colors: tuple[int, ...]
    palette_size: int

    def __post_init__(self) -> None:
        for i, c in enumerate(self.colors):
            if not isinstance(c, int) or isinstance(c, bool):
                raise ColoringError(f"color at edge index {i} is not an integer: {c!r}")
            if not 1 <= c <= self.palette_size:
                raise ColoringError(f"color {c} at edge index {i} outside 1..{self.palette_size}")

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, i: int) -> int:
        return self.colors[i]

    @property
    def used(self) -> int:
        return len(set(self.colors))


def coloring_for(g: Graph, colors: Sequence[int], palette: int | None = None) -> EdgeColoring:
    """Wrap ``colors`` for ``g``; the palette defaults to the largest color."""
    colors = tuple(colors)
    if len(colors) != g.m:
        raise ColoringError(f"coloring has {len(colors)} entries but graph has {g.m} edges")
    if palette is None:
        palette = max(colors, default=1)
    return EdgeColoring(colors, palette)


def from_blocks(blocks: Sequence[int]) -> EdgeColoring:
    """Coloring from a 0-based block assignment (restricted growth string)."""
    colors = tuple(b + 1 for b in blocks)
    return EdgeColoring(colors, max(colors, default=1))


def relabel(coloring: EdgeColoring, mapping: dict[int, int]) -> EdgeColoring:
    colors = tuple(mapping[c] for c in coloring.colors)
    return EdgeColoring(colors, max(coloring.palette_size, max(colors, default=1)))
