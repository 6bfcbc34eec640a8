"""Combinatorial simplices stored in canonical (sorted) vertex order."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class Simplex:
    """A k-simplex given by k+1 distinct vertex ids in increasing order.

    Orientation is not stored here: an arbitrarily ordered vertex
    sequence is normalized by :func:`canonicalize`, which returns the
    canonical simplex together with the parity sign of the reordering.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[int]):
        vs = tuple(vertices)
        if not vs:
            raise ValueError("a simplex needs at least one vertex")
        for v in vs:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"vertex ids must be non-negative ints, got {v!r}")
        for a, b in zip(vs, vs[1:]):
            if a >= b:
                raise ValueError(
                    f"vertices must be strictly increasing, got {vs}; "
                    "use canonicalize() for unordered input"
                )
        object.__setattr__(self, "vertices", vs)

    def __setattr__(self, name, value):
        raise AttributeError("Simplex is immutable")

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def faces(self) -> Iterator["Simplex"]:
        """Codimension-1 faces, in vertex-omission order (j = 0..k)."""
        if self.dim == 0:
            return
        vs = self.vertices
        for j in range(len(vs)):
            yield Simplex(vs[:j] + vs[j + 1 :])

    def sort_key(self):
        return (self.dim, self.vertices)

    def __eq__(self, other) -> bool:
        return isinstance(other, Simplex) and other.vertices == self.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __lt__(self, other: "Simplex") -> bool:
        return self.sort_key() < other.sort_key()

    def __le__(self, other: "Simplex") -> bool:
        return self.sort_key() <= other.sort_key()

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"Simplex({list(self.vertices)})"


def canonicalize(vertices: Sequence[int]) -> tuple[Simplex, int]:
    """Sort a vertex sequence and report the parity of the reordering.

    Returns ``(simplex, sign)`` with sign +1 when the input ordering
    differs from the sorted one by an even number of transpositions,
    -1 otherwise. Vertex sequences with duplicates are rejected.
    A single vertex always carries sign +1.
    """
    vs = tuple(vertices)
    if len(set(vs)) != len(vs):
        raise ValueError(f"duplicate vertex ids in {vs}")
    inversions = 0
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            if vs[i] > vs[j]:
                inversions += 1
    sign = 1 if inversions % 2 == 0 else -1
    return Simplex(sorted(vs)), sign
