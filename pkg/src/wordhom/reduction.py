"""Persistence by left-to-right boundary-column reduction over Z/p."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .chains import Chain
from .complexes import Filtration
from .fields import PrimeField


@dataclass(frozen=True)
class Interval:
    """Half-open lifetime [birth, death) of one homology class.

    ``death`` is ``math.inf`` for classes that never die. Indices
    locate the creating and (for finite intervals) killing simplex in
    the filtration; they may be None for intervals read back from disk.
    """

    dim: int
    birth: float
    death: float
    birth_index: int | None = None
    death_index: int | None = None

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.death)

    @property
    def is_zero_length(self) -> bool:
        return self.death == self.birth

    @property
    def length(self) -> float:
        return self.death - self.birth

    def alive_at(self, eps: float) -> bool:
        return self.birth <= eps < self.death

    def sort_key(self):
        return (self.dim, self.birth, self.death, self.birth_index is None, self.birth_index or 0)


class Barcode:
    """Per-dimension collections of persistence intervals."""

    def __init__(self, intervals: Iterator[Interval] | list[Interval]):
        by_dim: dict[int, list[Interval]] = {}
        for iv in intervals:
            if iv.death < iv.birth:
                raise ValueError(f"interval with death before birth: {iv}")
            by_dim.setdefault(iv.dim, []).append(iv)
        for group in by_dim.values():
            group.sort(key=Interval.sort_key)
        self._by_dim = {k: tuple(group) for k, group in sorted(by_dim.items())}

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(self._by_dim)

    def intervals(self, k: int, include_zero_length: bool = True) -> tuple[Interval, ...]:
        group = self._by_dim.get(k, ())
        if include_zero_length:
            return group
        return tuple(iv for iv in group if not iv.is_zero_length)

    def all_intervals(self, include_zero_length: bool = True) -> list[Interval]:
        out = []
        for k in self.dims:
            out.extend(self.intervals(k, include_zero_length))
        return out

    def alive_count(self, k: int, eps: float) -> int:
        """Number of dim-k intervals containing eps; equals the k-th
        Betti number of the complex at that scale."""
        return sum(1 for iv in self._by_dim.get(k, ()) if iv.alive_at(eps))

    def max_finite_value(self) -> float:
        best = 0.0
        for ivs in self._by_dim.values():
            for iv in ivs:
                best = max(best, iv.birth)
                if not iv.is_infinite:
                    best = max(best, iv.death)
        return best

    def __eq__(self, other) -> bool:
        if not isinstance(other, Barcode):
            return False
        mine = [(iv.dim, iv.birth, iv.death) for iv in self.all_intervals()]
        theirs = [(iv.dim, iv.birth, iv.death) for iv in other.all_intervals()]
        return mine == theirs

    def __repr__(self) -> str:
        counts = ", ".join(f"k={k}: {len(v)}" for k, v in self._by_dim.items())
        return f"Barcode({counts})"


def _sub_scaled(col: dict[int, int], other: dict[int, int], factor: int, p: int) -> dict[int, int]:
    """col - factor * other, dropping zeros (col is consumed)."""
    for r, v in other.items():
        nv = (col.get(r, 0) - factor * v) % p
        if nv:
            col[r] = nv
        else:
            col.pop(r, None)
    return col


class ReducedFiltration:
    """Outcome of the column reduction: pairings plus the data needed
    to recover representative cycles.

    ``columns[j]`` is the reduced boundary column of simplex j (rows
    index earlier simplices); ``combinations[j]`` records which columns
    were accumulated into j, i.e. the chain whose boundary columns[j] is.
    """

    def __init__(
        self,
        filtration: Filtration,
        field: PrimeField,
        columns: list[dict[int, int]],
        combinations: list[dict[int, int]],
        pairs: list[tuple[int, int]],
        essentials: list[int],
    ):
        self.filtration = filtration
        self.field = field
        self._columns = columns
        self._combinations = combinations
        self.pairs = tuple(pairs)
        self.essentials = tuple(essentials)

    def barcode(self) -> Barcode:
        entries = self.filtration.entries
        intervals = []
        for i, j in self.pairs:
            s, b = entries[i]
            _, d = entries[j]
            intervals.append(Interval(s.dim, b, d, i, j))
        for i in self.essentials:
            s, b = entries[i]
            intervals.append(Interval(s.dim, b, math.inf, i, None))
        return Barcode(intervals)

    def representative(self, interval: Interval) -> Chain:
        """A cycle alive exactly on the interval.

        For a class killed by a simplex, the reduced column of the
        killer; for a dim-0 class, the single younger vertex; for an
        essential class, the accumulated combination whose boundary
        vanished.
        """
        entries = self.filtration.entries
        i = interval.birth_index
        if i is None or not 0 <= i < len(entries):
            raise ValueError(f"interval {interval} does not belong to this reduction")
        if interval.death_index is None:
            if i not in self.essentials:
                raise ValueError(f"interval {interval} does not belong to this reduction")
            terms = {entries[c][0]: v for c, v in self._combinations[i].items()}
            return Chain(interval.dim, terms)
        j = interval.death_index
        if (i, j) not in self.pairs:
            raise ValueError(f"interval {interval} does not belong to this reduction")
        if interval.dim == 0:
            return Chain(0, {entries[i][0]: 1})
        terms = {entries[r][0]: v for r, v in self._columns[j].items()}
        return Chain(interval.dim, terms)

    def __repr__(self) -> str:
        return (
            f"ReducedFiltration({len(self._columns)} columns, "
            f"{len(self.pairs)} pairs, {len(self.essentials)} essential)"
        )


def reduce_filtration(filtration: Filtration, field: PrimeField) -> ReducedFiltration:
    """Standard left-to-right reduction with lowest-row bookkeeping.

    Columns are processed in filtration order; whenever a column shares
    its lowest nonzero row with an earlier reduced column, that column
    is subtracted off. A column that empties creates a class; one that
    survives kills the class created at its lowest row. Because rows
    are filtration-ordered, the class dying at a merge is always the
    younger one, with ties resolved by filtration position.
    """
    problems = filtration.validate()
    if problems:
        raise ValueError(f"filtration violates its invariants: {problems[:3]}")
    entries = filtration.entries
    index = {s: i for i, (s, _) in enumerate(entries)}
    p = field.p

    columns: list[dict[int, int]] = []
    combinations: list[dict[int, int]] = []
    pairs: list[tuple[int, int]] = []
    creators: list[int] = []
    low_owner: dict[int, int] = {}

    for j, (s, _) in enumerate(entries):
        col: dict[int, int] = {}
        for face_pos, face in enumerate(s.faces()):
            col[index[face]] = 1 if face_pos % 2 == 0 else p - 1
        combo = {j: 1}
        while col:
            low = max(col)
            owner = low_owner.get(low)
            if owner is None:
                break
            factor = col[low] * field.inv(columns[owner][low]) % p
            _sub_scaled(col, columns[owner], factor, p)
            _sub_scaled(combo, combinations[owner], factor, p)
        columns.append(col)
        combinations.append(combo)
        if col:
            low = max(col)
            low_owner[low] = j
            pairs.append((low, j))
        else:
            creators.append(j)

    killed = {i for i, _ in pairs}
    essentials = [i for i in creators if i not in killed]
    return ReducedFiltration(filtration, field, columns, combinations, pairs, essentials)
