"""Census records and their text files.

One record per line, tab separated::

    isosig  g  k  h1_rank  volume  [tv]

``volume`` is printed with 12 decimals or ``-`` when absent.  The optional
``tv`` column is a ``;``-separated list of ``r=value`` pairs.  Files are
written once, sorted by signature, so reruns produce identical bytes.
"""

from dataclasses import dataclass, field
from pathlib import Path

HEADER = "# isosig\tg\tk\th1_rank\tvolume\ttv\n"


class RecordError(ValueError):
    pass


@dataclass(frozen=True)
class CensusRecord:
    isosig: str
    g: int
    k: int
    h1_rank: int
    volume: float = None
    tv: dict = field(default_factory=dict, compare=True, hash=False)

    @property
    def complexity(self):
        return self.g + self.k

    @property
    def heegaard_genus(self):
        # stated for the whole family, not computed from the triangulation
        return self.g + 1


def _fmt_volume(v):
    return "-" if v is None else f"{v:.12f}"


def encode_record(rec):
    fields = [rec.isosig, str(rec.g), str(rec.k), str(rec.h1_rank), _fmt_volume(rec.volume)]
    if rec.tv:
        fields.append(";".join(f"{r}={rec.tv[r]:.12f}" for r in sorted(rec.tv)))
    return "\t".join(fields)


def decode_record(line):
    parts = line.rstrip("\n").split("\t")
    if len(parts) not in (5, 6):
        raise RecordError(f"expected 5 or 6 fields, got {len(parts)}: {line!r}")
    try:
        g, k, rank = int(parts[1]), int(parts[2]), int(parts[3])
        volume = None if parts[4] == "-" else float(parts[4])
        tv = {}
        if len(parts) == 6 and parts[5]:
            for item in parts[5].split(";"):
                r, _, val = item.partition("=")
                tv[int(r)] = float(val)
    except ValueError as exc:
        raise RecordError(f"malformed record {line!r}") from exc
    return CensusRecord(parts[0], g, k, rank, volume, tv)


def build_records(table, volumes=True, tv_levels=()):
    """Turn a :class:`~mgk.census.CensusTable` into sorted records.

    Volumes are computed once per cell, since they only depend on (g, k).
    """
    from .homology import homology_h1
    from .isosig import decode_signature
    from .turaev_viro import TVParams, tv_value
    from .volume import manifold_volume

    cell_volume = {}
    out = []
    for sig, g, k in table.records():
        if volumes and (g, k) not in cell_volume:
            cell_volume[(g, k)] = manifold_volume(g, k).total
        T = decode_signature(sig)
        h1 = homology_h1(T)
        tv = {r: tv_value(T, TVParams(r)) for r in tv_levels}
        out.append(CensusRecord(sig, g, k, h1.rank, cell_volume.get((g, k)), tv))
    return out


def write_census(records, path):
    lines = [encode_record(r) for r in sorted(records, key=lambda r: r.isosig)]
    text = HEADER + "".join(line + "\n" for line in lines)
    Path(path).write_text(text, encoding="utf-8", newline="\n")
    return text


def read_census(path):
    records = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line and not line.startswith("#"):
            records.append(decode_record(line))
    return records
