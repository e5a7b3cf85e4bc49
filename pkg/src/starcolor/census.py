"""Census of connected simple cubic graphs on up to 12 vertices.

Generation is by vertex augmentation: every connected graph has a
non-cut vertex, so all connected subcubic graphs on k+1 vertices arise
from one on k vertices by attaching a fresh vertex to 1..3 unsaturated
vertices.  Levels are deduplicated by canonical form, and states whose
degree deficit cannot reach zero with the remaining vertex budget are
pruned.  Regeneration is deterministic; the shipped graph6 fixture
exists because the 12-vertex level takes a few minutes to rebuild.
"""

from __future__ import annotations

from importlib import resources

from .canon import canonical_key
from .graphs import Graph, build_graph
from .formats import parse_graph6, to_graph6

CENSUS_RESOURCE = "cubic_census_le12.g6"

# Published class counts for connected simple cubic graphs, used as an
# integrity check on regeneration and on the shipped fixture.
KNOWN_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}


def _deficit(g: Graph) -> int:
    return sum(3 - g.degree(v) for v in range(g.n))


def connected_cubic_graphs(n: int) -> list[Graph]:
    """All connected simple cubic graphs on n vertices, one per class.

    Deterministic order (sorted canonical keys).  Empty for odd or tiny n.
    """
    if n < 4 or n % 2:
        return []
    from itertools import combinations

    level: dict[tuple, Graph] = {canonical_key(build_graph(1, [])): build_graph(1, [])}
    for k in range(1, n):
        remaining_after = n - k - 1
        next_level: dict[tuple, Graph] = {}
        for parent in level.values():
            deficit = _deficit(parent)
            open_vertices = [v for v in range(k) if parent.degree(v) < 3]
            for size in (1, 2, 3):
                child_deficit = deficit + 3 - 2 * size
                if child_deficit < 0:
                    continue
                if child_deficit > 3 * remaining_after:
                    continue
                if (child_deficit + 3 * remaining_after) % 2:
                    continue
                if remaining_after == 0 and child_deficit != 0:
                    continue
                for attach in combinations(open_vertices, size):
                    child = build_graph(
                        k + 1, list(parent.edges) + [(v, k) for v in attach]
                    )
                    key = canonical_key(child)
                    if key not in next_level:
                        next_level[key] = child
        level = next_level
    return [level[key] for key in sorted(level)]


def generate_census(max_n: int = 12) -> dict[int, list[Graph]]:
    """Census keyed by vertex count, 4 <= n <= max_n even."""
    return {n: connected_cubic_graphs(n) for n in range(4, max_n + 1, 2)}


def census_graph6(max_n: int = 12) -> str:
    lines = []
    for n in range(4, max_n + 1, 2):
        lines.extend(to_graph6(g) for g in connected_cubic_graphs(n))
    return "\n".join(lines) + "\n"


def load_census() -> list[Graph]:
    """Connected cubic graphs on <= 12 vertices from the shipped fixture."""
    text = (
        resources.files("starcolor.data").joinpath(CENSUS_RESOURCE).read_text()
    )
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]
