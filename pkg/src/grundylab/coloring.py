"""Colorings as ordered lists of vertex-set bitmasks."""

from dataclasses import dataclass, field

from .graph import GraphError, vertices


@dataclass(frozen=True)
class Coloring:
    """Ordered color classes V_1..V_k, each an int bitmask."""

    classes: tuple

    @property
    def k(self):
        return len(self.classes)

    @classmethod
    def from_colors(cls, colors):
        """Build from a per-vertex color list (colors 0..k-1)."""
        k = max(colors, default=-1) + 1
        classes = [0] * k
        for v, c in enumerate(colors):
            classes[c] |= 1 << v
        return cls(tuple(classes))

    @classmethod
    def from_lists(cls, lists):
        masks = []
        for part in lists:
            m = 0
            for v in part:
                m |= 1 << v
            masks.append(m)
        return cls(tuple(masks))

    def colors(self, n):
        out = [-1] * n
        for c, cls_ in enumerate(self.classes):
            for v in vertices(cls_):
                out[v] = c
        return out

    def as_lists(self):
        return [vertices(c) for c in self.classes]

    def check_partition(self, g):
        seen = 0
        for c in self.classes:
            if c == 0:
                raise GraphError("coloring has an empty class")
            if c & seen:
                raise GraphError("coloring classes overlap")
            if c & ~g.full:
                raise GraphError("coloring mentions vertices outside the graph")
            seen |= c
        if seen != g.full:
            raise GraphError("coloring does not cover every vertex")

    def is_proper(self, g):
        return all(g.is_independent(c) for c in self.classes)


@dataclass(frozen=True)
class GrundyCertificate:
    """A Grundy coloring plus, for each vertex of class i and each j < i,
    one neighbor of that vertex inside class j."""

    coloring: Coloring
    witnesses: dict = field(hash=False, compare=True)

    @classmethod
    def build(cls, g, coloring):
        witnesses = {}
        for i, cls_ in enumerate(coloring.classes):
            for v in vertices(cls_):
                row = {}
                for j in range(i):
                    hit = g.adj[v] & coloring.classes[j]
                    if not hit:
                        raise GraphError(f"vertex {v} has no neighbor in class {j}")
                    row[j] = vertices(hit)[0]
                witnesses[v] = row
        return cls(coloring, witnesses)

    def verify(self, g):
        """Re-check every witness edge and class membership."""
        classes = self.coloring.classes
        for i, cls_ in enumerate(classes):
            if not g.is_independent(cls_):
                return False
            for v in vertices(cls_):
                row = self.witnesses.get(v, {})
                for j in range(i):
                    w = row.get(j)
                    if w is None or not g.has_edge(v, w) or not classes[j] >> w & 1:
                        return False
        return True

    def to_json(self):
        return {
            "classes": self.coloring.as_lists(),
            "witnesses": {
                str(v): {str(j): w for j, w in sorted(row.items())}
                for v, row in sorted(self.witnesses.items())
            },
        }
