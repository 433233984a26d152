"""Packaged catalog of the flat 4-manifold groups with lattice Z^4.

The default catalog ships as data/catalog.json (77 entries: the torus plus
76 nontrivial groups).  Set the environment variable FLAT4SPEC_CATALOG to the
path of an alternative JSON file to override it.

Loading revalidates every entry: the generators must close to a torsion-free
group with the stated holonomy order, and the stored Betti numbers,
orientability, diagonal-type flag and (for diagonal type) Sunada numbers must
match recomputation.  Validation failures raise CatalogError listing the
offending entry ids.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .group import (AffineIsometry, BieberbachGroup, GroupError, betti,
                    build_group, is_diagonal_type, is_orientable, sunada_tuple)

ENV_VAR = "FLAT4SPEC_CATALOG"
EXPECTED_COUNT = 77


class CatalogError(ValueError):
    pass


@dataclass
class CatalogEntry:
    id: str
    table: str
    holonomy: str
    group: BieberbachGroup
    betti: tuple[int, int]
    betti_printed: tuple[int, int]
    orientable: bool
    diagonal: bool
    sunada: tuple[int, ...] | None = None
    sunada_printed: tuple[int, ...] | None = None
    notes: str = ""


@dataclass
class Catalog:
    source: str
    entries: list[CatalogEntry] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def ids(self) -> list[str]:
        return [e.id for e in self.entries]

    def get(self, gid: str) -> CatalogEntry:
        for e in self.entries:
            if e.id == gid:
                return e
        raise KeyError(f"no group {gid!r} in catalog {self.source}")

    def group(self, gid: str) -> BieberbachGroup:
        return self.get(gid).group

    def groups(self) -> list[BieberbachGroup]:
        return [e.group for e in self.entries]


def _entry_group(raw: dict) -> BieberbachGroup:
    gens = [
        AffineIsometry.make(
            g["matrix"], [Fraction(t) for t in g["translation"]]
        )
        for g in raw["generators"]
    ]
    return build_group(gens, name=raw["id"], metadata={"table": raw.get("table", "")})


def _validate_entry(raw: dict) -> CatalogEntry:
    for key in ("id", "holonomy", "generators", "betti", "orientable", "diagonal"):
        if key not in raw:
            raise CatalogError(f"missing field {key!r}")
    G = _entry_group(raw)
    computed_beta = (betti(G, 1), betti(G, 2))
    if computed_beta != tuple(raw["betti"]):
        raise CatalogError(
            f"betti mismatch: stored {raw['betti']}, computed {list(computed_beta)}"
        )
    if is_orientable(G) != bool(raw["orientable"]):
        raise CatalogError("orientability mismatch")
    diagonal = is_diagonal_type(G)
    if diagonal != bool(raw["diagonal"]):
        raise CatalogError("diagonal-type mismatch")
    sunada = sunada_printed = None
    if diagonal:
        sunada = sunada_tuple(G)
        if "sunada" in raw and tuple(raw["sunada"]) != sunada:
            raise CatalogError(
                f"sunada mismatch: stored {raw['sunada']}, computed {list(sunada)}"
            )
        if "sunada_printed" in raw:
            sunada_printed = tuple(raw["sunada_printed"])
    return CatalogEntry(
        id=raw["id"],
        table=raw.get("table", ""),
        holonomy=raw["holonomy"],
        group=G,
        betti=computed_beta,
        betti_printed=tuple(raw.get("betti_printed", raw["betti"])),
        orientable=bool(raw["orientable"]),
        diagonal=diagonal,
        sunada=sunada,
        sunada_printed=sunada_printed,
        notes=raw.get("notes", ""),
    )


def catalog_path() -> str:
    """Path of the catalog file that load_catalog() will read."""
    override = os.environ.get(ENV_VAR)
    if override:
        return override
    return str(resources.files("flat4spec").joinpath("data/catalog.json"))


def load_catalog(path: str | None = None) -> Catalog:
    """Load and validate a catalog (default: packaged file or $FLAT4SPEC_CATALOG)."""
    src = path if path is not None else catalog_path()
    try:
        data = json.loads(Path(src).read_text())
    except OSError as exc:
        raise CatalogError(f"cannot read catalog {src}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CatalogError(f"catalog {src} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or "entries" not in data:
        raise CatalogError(f"catalog {src} has no 'entries' list")

    entries = []
    bad: dict[str, str] = {}
    seen: set[str] = set()
    for i, raw in enumerate(data["entries"]):
        gid = raw.get("id", f"<entry {i}>") if isinstance(raw, dict) else f"<entry {i}>"
        if gid in seen:
            bad[gid] = "duplicate id"
            continue
        seen.add(gid)
        try:
            entries.append(_validate_entry(raw))
        except (CatalogError, GroupError, ValueError, KeyError, TypeError) as exc:
            bad[gid] = str(exc)
    if bad:
        listing = "; ".join(f"{gid}: {msg}" for gid, msg in sorted(bad.items()))
        raise CatalogError(f"invalid catalog entries: {listing}")

    declared = data.get("count")
    if declared is not None and declared != len(entries):
        raise CatalogError(
            f"catalog declares {declared} entries but contains {len(entries)}"
        )
    return Catalog(source=src, entries=entries)
