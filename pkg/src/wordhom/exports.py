"""TSV serialization for barcodes, clusterings, sweeps, and cycles.

Every writer emits a leading ``#`` header block carrying the effective
configuration, so outputs are self-describing and reproducible runs
are byte-identical.
"""

from __future__ import annotations

import math
from typing import Mapping, TextIO

from .clustering import Clustering, SweepResult
from .corpus import AssociationCorpus, DataFormatError
from .reduction import Barcode, Interval, ReducedFiltration


def write_header(stream: TextIO, config: Mapping[str, object] | None) -> None:
    if not config:
        return
    for key in sorted(config):
        stream.write(f"# {key}={config[key]}\n")


def _fmt_value(x: float) -> str:
    return "inf" if math.isinf(x) else repr(x)


def write_barcode_tsv(
    stream: TextIO,
    barcode: Barcode,
    config: Mapping[str, object] | None = None,
    include_zero_length: bool = False,
) -> None:
    """Rows `k<TAB>birth<TAB>death`, death `inf` for essential classes,
    sorted by (k, birth, death); zero-length bars filtered by default."""
    write_header(stream, config)
    for iv in _sorted_intervals(barcode, include_zero_length):
        stream.write(f"{iv.dim}\t{iv.birth!r}\t{_fmt_value(iv.death)}\n")


def _sorted_intervals(barcode: Barcode, include_zero_length: bool) -> list[Interval]:
    out = []
    for k in barcode.dims:
        out.extend(barcode.intervals(k, include_zero_length=include_zero_length))
    out.sort(key=lambda iv: (iv.dim, iv.birth, iv.death))
    return out


def read_barcode_tsv(stream: TextIO) -> Barcode:
    intervals = []
    for lineno, raw in enumerate(stream, 1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise DataFormatError(lineno, f"expected 3 tab-separated fields, got {len(parts)}")
        try:
            k = int(parts[0])
            birth = float(parts[1])
            death = math.inf if parts[2] == "inf" else float(parts[2])
        except ValueError:
            raise DataFormatError(lineno, f"malformed barcode row {line!r}")
        intervals.append(Interval(k, birth, death))
    return Barcode(intervals)


def write_clustering_tsv(
    stream: TextIO,
    corpus: AssociationCorpus,
    clustering: Clustering,
    config: Mapping[str, object] | None = None,
) -> None:
    """Rows `word<TAB>cluster_id` in vertex-id order."""
    write_header(stream, config)
    for v, label in enumerate(clustering.labels):
        stream.write(f"{corpus.word(v)}\t{label}\n")


def write_sweep_tsv(
    stream: TextIO,
    result: SweepResult,
    config: Mapping[str, object] | None = None,
) -> None:
    """Rows `param<TAB>Q<TAB>clusters` plus a trailing argmax comment."""
    write_header(stream, config)
    for row in result.rows:
        stream.write(f"{row.param!r}\t{row.q!r}\t{row.n_clusters}\n")
    best = result.best
    stream.write(f"# argmax param={best.param!r} Q={best.q!r} clusters={best.n_clusters}\n")


def write_cycles_tsv(
    stream: TextIO,
    reduced: ReducedFiltration,
    config: Mapping[str, object] | None = None,
    include_zero_length: bool = False,
) -> None:
    """Representative cycles, one `k<TAB>coeff<TAB>v0,...,vk` row per
    term, grouped under a comment line naming the interval."""
    write_header(stream, config)
    barcode = reduced.barcode()
    for iv in _sorted_intervals(barcode, include_zero_length):
        stream.write(f"# interval k={iv.dim} birth={iv.birth!r} death={_fmt_value(iv.death)}\n")
        cycle = reduced.representative(iv)
        for simplex, coeff in cycle.items():
            verts = ",".join(map(str, simplex.vertices))
            stream.write(f"{iv.dim}\t{coeff}\t{verts}\n")


def write_filtration_tsv(stream, filtration, config: Mapping[str, object] | None = None) -> None:
    write_header(stream, config)
    filtration.to_tsv(stream)


def read_filtration_tsv(stream: TextIO) -> "Filtration":
    """Read `birth<TAB>v0,v1,...,vk` rows back into a filtration.

    Lets explicitly listed complexes (not necessarily clique-complete)
    enter the persistence pipeline.
    """
    from .complexes import Filtration
    from .simplices import Simplex

    entries = []
    for lineno, raw in enumerate(stream, 1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise DataFormatError(lineno, f"expected 2 tab-separated fields, got {len(parts)}")
        try:
            birth = float(parts[0])
            vertices = tuple(int(v) for v in parts[1].split(","))
            simplex = Simplex(vertices)
        except ValueError as exc:
            raise DataFormatError(lineno, str(exc))
        entries.append((simplex, birth))
    entries.sort(key=lambda e: (e[1], e[0].dim, e[0].vertices))
    max_dim = max((s.dim for s, _ in entries), default=0)
    max_eps = max((b for _, b in entries), default=0.0)
    return Filtration(entries, max_dim, max_eps)
