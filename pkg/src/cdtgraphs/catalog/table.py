"""Expected parameters of the twelve cubic distance-transitive graphs."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .builders import NAMES, canonical_name


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    n: int
    d: int
    g: int
    k: int
    eta: int
    a: int
    b: bool
    h: bool
    kappa: int

    def __post_init__(self):
        if self.kappa not in (0, 1, 2, 3):
            raise ValueError("kappa must be 0, 1, 2 or 3")

    def eta_formula(self) -> int:
        """Girth-cycle count predicted from n, g and k: 2^(k-2) * 3n / g."""
        num = 2 ** (self.k - 2) * 3 * self.n
        if num % self.g:
            raise ValueError(f"{self.name}: 2^(k-2)*3n is not divisible by g")
        return num // self.g

    def as_dict(self) -> dict:
        return asdict(self)


#              n    d   g  k  eta    a    b  h  kappa
_ROWS = {
    "k4":           (4,   1,  3, 2,   4,   24,  0, 1, 1),
    "k33":          (6,   2,  4, 3,   9,   72,  1, 1, 2),
    "q3":           (8,   3,  4, 2,   6,   48,  1, 1, 1),
    "petersen":     (10,  2,  5, 3,  12,  120,  0, 0, 0),
    "heawood":      (14,  3,  6, 4,  28,  336,  1, 1, 0),
    "pappus":       (18,  4,  6, 3,  18,  216,  1, 1, 3),
    "dodecahedral": (20,  5,  5, 2,  12,  120,  0, 1, 1),
    "desargues":    (20,  5,  6, 3,  20,  240,  1, 1, 3),
    "coxeter":      (28,  4,  7, 3,  24,  336,  0, 0, 3),
    "tutte":        (30,  4,  8, 5,  90, 1440,  1, 1, 2),
    "foster":       (90,  8, 10, 5, 216, 4320,  1, 1, 0),
    "biggs-smith":  (102, 7,  9, 4, 136, 2448,  0, 1, 3),
}

TABLE: dict[str, CatalogEntry] = {
    name: CatalogEntry(name, n, d, g, k, eta, a, bool(b), bool(h), kappa)
    for name, (n, d, g, k, eta, a, b, h, kappa) in _ROWS.items()
}
assert tuple(TABLE) == NAMES


def expected_row(name: str) -> CatalogEntry:
    return TABLE[canonical_name(name)]
