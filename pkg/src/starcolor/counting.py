"""Double-counting certificates for star colorings of complete graphs.

For a star coloring of K_n with palette b, tally a_i (edges of color i)
and b_{i,j} (3-edge paths colored i,j,i).  Any star coloring must satisfy

    sum_i a_i   = n(n-1)/2                 (edge count)
    sum_j b_ij  = 4 * C(a_i, 2)  for all i (flanking pairs of a matching)
    sum_i b_ij <= a_j (n - 2 a_j) for all j (middle edges leave M_j)

and chaining them gives 4 * sum a_i^2 <= (n+2) * sum a_i, whence the
closed-form lower bound ceil(2n(n-1)/(n+2)) on the palette size.
These are theorems, so a failed check on a verified star coloring is a
build-breaking bug, which is exactly why the checks exist.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotCompleteGraphError, NotStarColoringError
from .graphs import EdgeColoring, Graph, densify_colors
from .verify import verify_star


def kn_lower_bound(n: int) -> int:
    """ceil(2n(n-1)/(n+2)) in exact integer arithmetic."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    num = 2 * n * (n - 1)
    den = n + 2
    return -(-num // den)


@dataclass(frozen=True)
class CountingCertificate:
    """Tallies for one coloring: a[i] edge counts, b[i][j] path counts."""

    n: int
    a: tuple[int, ...]
    b: tuple[tuple[int, ...], ...]

    @property
    def palette(self) -> int:
        return len(self.a)


def counting_certificate(g: Graph, c: EdgeColoring) -> CountingCertificate:
    """Tally a and b for a star coloring of a complete graph.

    b is counted by a middle-edge scan: for each edge uv of color j, each
    same-colored pair (xu, vy) with distinct endpoints contributes one
    path x-u-v-y to b[i][j].
    """
    n = g.n
    if g.m != n * (n - 1) // 2:
        raise NotCompleteGraphError(
            "counting certificates are defined over complete graphs only"
        )
    if verify_star(g, c) is not None:
        raise NotStarColoringError("certificate input must be a star coloring")
    dense = densify_colors(c)
    k = dense.palette_size
    colors = dense.colors

    a = [0] * k
    for e in range(g.m):
        a[colors[e]] += 1

    b = [[0] * k for _ in range(k)]
    for e, (u, v) in enumerate(g.edges):
        j = colors[e]
        for f1 in g.incident[u]:
            if f1 == e:
                continue
            i = colors[f1]
            x = g.other_end(f1, u)
            for f2 in g.incident[v]:
                if f2 == e or colors[f2] != i:
                    continue
                y = g.other_end(f2, v)
                if y != x:
                    b[i][j] += 1
    return CountingCertificate(n, tuple(a), tuple(tuple(row) for row in b))


@dataclass(frozen=True)
class IdentityReport:
    """Per-identity outcomes for one certificate."""

    edge_sum_ok: bool
    flank_ok: tuple[bool, ...]
    middle_ok: tuple[bool, ...]
    chained_ok: bool

    @property
    def passed(self) -> bool:
        return (
            self.edge_sum_ok
            and all(self.flank_ok)
            and all(self.middle_ok)
            and self.chained_ok
        )


def check_counting_identities(cert: CountingCertificate) -> IdentityReport:
    """Verify the three tally identities plus the chained inequality."""
    n = cert.n
    a = cert.a
    b = cert.b
    k = len(a)

    edge_sum_ok = sum(a) == n * (n - 1) // 2
    flank_ok = tuple(
        sum(b[i]) == 4 * (a[i] * (a[i] - 1) // 2) for i in range(k)
    )
    middle_ok = tuple(
        sum(b[i][j] for i in range(k)) <= a[j] * (n - 2 * a[j]) for j in range(k)
    )
    chained_ok = 4 * sum(x * x for x in a) <= (n + 2) * sum(a)
    return IdentityReport(edge_sum_ok, flank_ok, middle_ok, chained_ok)
