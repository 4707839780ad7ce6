from ..configurations import fano_plane
from .builders import NAMES, CatalogGraph, UnknownGraph, build, build_labeled, canonical_name
from .fixtures import OAC_FIXTURES, NoFixture, fixture_listing, fixture_oac, obstruction_chain
from .notation import LabeledVertexScheme, NotationError, parse_listing
from .table import TABLE, CatalogEntry, expected_row

__all__ = [
    "NAMES", "CatalogGraph", "UnknownGraph", "build", "build_labeled", "canonical_name",
    "OAC_FIXTURES", "NoFixture", "fixture_listing", "fixture_oac", "obstruction_chain",
    "LabeledVertexScheme", "NotationError", "parse_listing",
    "TABLE", "CatalogEntry", "expected_row", "fano_plane",
]
