"""Oriented girth-cycle listings and obstruction chains shipped as text files."""

from __future__ import annotations

from importlib import resources

from ..oac import OrientedCycleSet
from .builders import build_labeled, canonical_name
from .notation import parse_listing

OAC_FIXTURES = ("k4", "k33", "q3", "pappus", "dodecahedral", "desargues", "coxeter", "tutte")
OBSTRUCTION_FIXTURES = ("petersen", "heawood")


class NoFixture(LookupError):
    pass


def _read(filename: str) -> str:
    return resources.files(__package__).joinpath("data", filename).read_text(encoding="utf-8")


def fixture_listing(name: str, as_printed: bool = False) -> list[tuple[str, tuple[int, ...]]]:
    """Named oriented cycles in file order.

    Cycles flagged ``@reverse`` in the data file are read backwards unless
    ``as_printed`` asks for the listing exactly as transcribed.
    """
    key = canonical_name(name)
    if key not in OAC_FIXTURES:
        raise NoFixture(f"no oriented cycle listing for {key}; it admits no orientation assignment"
                        if key in ("petersen", "heawood", "foster") else
                        f"no oriented cycle listing for {key}")
    return parse_listing(_read(f"{key}.txt"), build_labeled(key).scheme, as_printed)


def fixture_oac(name: str, as_printed: bool = False) -> OrientedCycleSet:
    listing = fixture_listing(name, as_printed)
    return OrientedCycleSet.from_directed([c for _, c in listing], [n for n, _ in listing])


def obstruction_chain(name: str) -> list[tuple[str, tuple[int, ...]]]:
    """Closed chain of girth cycles whose shared paths force a contradiction."""
    key = canonical_name(name)
    if key not in OBSTRUCTION_FIXTURES:
        raise NoFixture(f"no obstruction chain shipped for {key}")
    return parse_listing(_read(f"{key}_obstruction.txt"), build_labeled(key).scheme)
