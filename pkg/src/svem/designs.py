"""Coded experimental designs and full-quadratic model-matrix expansion.

Designs are plain coded-level matrices (rows = runs, columns = factors) with
a `kind` tag. Screening designs (DSD) are built from embedded conference
matrices via the fold-over construction [C; -C; 0...]; Box-Behnken designs
use the all-pairs construction; space-filling designs are seeded uniform
draws on [-1, 1]^K.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .streams import SFD_POINTS, substream

DSD = "dsd"
BBD = "bbd"
CCD = "ccd"
SFD = "sfd"
CUSTOM = "custom"

INTERCEPT = "intercept"
MAIN = "main"
QUADRATIC = "quadratic"
INTERACTION = "interaction"

# Conference matrices (Paley construction), one per supported order.
# Each satisfies C^T C = (order - 1) * I; the test suite re-verifies this
# identity by direct multiplication.
_CONFERENCE_6 = (
    (0, 1, 1, 1, 1, 1),
    (1, 0, 1, -1, -1, 1),
    (1, 1, 0, 1, -1, -1),
    (1, -1, 1, 0, 1, -1),
    (1, -1, -1, 1, 0, 1),
    (1, 1, -1, -1, 1, 0),
)

_CONFERENCE_8 = (
    (0, 1, 1, 1, 1, 1, 1, 1),
    (-1, 0, -1, -1, 1, -1, 1, 1),
    (-1, 1, 0, -1, -1, 1, -1, 1),
    (-1, 1, 1, 0, -1, -1, 1, -1),
    (-1, -1, 1, 1, 0, -1, -1, 1),
    (-1, 1, -1, 1, 1, 0, -1, -1),
    (-1, -1, 1, -1, 1, 1, 0, -1),
    (-1, -1, -1, 1, -1, 1, 1, 0),
)

_CONFERENCE_10 = (
    (0, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    (1, 0, 1, 1, 1, -1, -1, 1, -1, -1),
    (1, 1, 0, 1, -1, 1, -1, -1, 1, -1),
    (1, 1, 1, 0, -1, -1, 1, -1, -1, 1),
    (1, 1, -1, -1, 0, 1, 1, 1, -1, -1),
    (1, -1, 1, -1, 1, 0, 1, -1, 1, -1),
    (1, -1, -1, 1, 1, 1, 0, -1, -1, 1),
    (1, 1, -1, -1, 1, -1, -1, 0, 1, 1),
    (1, -1, 1, -1, -1, 1, -1, 1, 0, 1),
    (1, -1, -1, 1, -1, -1, 1, 1, 1, 0),
)

_CONFERENCE_12 = (
    (0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    (-1, 0, -1, 1, -1, -1, -1, 1, 1, 1, -1, 1),
    (-1, 1, 0, -1, 1, -1, -1, -1, 1, 1, 1, -1),
    (-1, -1, 1, 0, -1, 1, -1, -1, -1, 1, 1, 1),
    (-1, 1, -1, 1, 0, -1, 1, -1, -1, -1, 1, 1),
    (-1, 1, 1, -1, 1, 0, -1, 1, -1, -1, -1, 1),
    (-1, 1, 1, 1, -1, 1, 0, -1, 1, -1, -1, -1),
    (-1, -1, 1, 1, 1, -1, 1, 0, -1, 1, -1, -1),
    (-1, -1, -1, 1, 1, 1, -1, 1, 0, -1, 1, -1),
    (-1, -1, -1, -1, 1, 1, 1, -1, 1, 0, -1, 1),
    (-1, 1, -1, -1, -1, 1, 1, 1, -1, 1, 0, -1),
    (-1, -1, 1, -1, -1, -1, 1, 1, 1, -1, 1, 0),
)

CONFERENCE_MATRICES = {
    6: _CONFERENCE_6,
    8: _CONFERENCE_8,
    10: _CONFERENCE_10,
    12: _CONFERENCE_12,
}


def default_factor_names(k: int) -> list[str]:
    return [f"X{i + 1}" for i in range(k)]


@dataclass
class Design:
    """A coded design: N runs by K factors, levels typically in [-1, 1]."""

    kind: str
    factors: list[str]
    runs: np.ndarray

    def __post_init__(self):
        self.runs = np.asarray(self.runs, dtype=float)
        if self.runs.ndim != 2:
            raise ValueError("design runs must be a 2-D matrix")
        if self.runs.shape[1] != len(self.factors):
            raise ValueError(
                f"run matrix has {self.runs.shape[1]} columns but "
                f"{len(self.factors)} factor names"
            )

    @property
    def n_runs(self) -> int:
        return self.runs.shape[0]

    @property
    def n_factors(self) -> int:
        return self.runs.shape[1]


@dataclass(frozen=True)
class Term:
    """One column of the full-quadratic basis."""

    kind: str
    i: int | None = None
    j: int | None = None

    def __post_init__(self):
        if self.kind == INTERCEPT and (self.i is not None or self.j is not None):
            raise ValueError("intercept term carries no factor index")
        if self.kind in (MAIN, QUADRATIC) and (self.i is None or self.j is not None):
            raise ValueError(f"{self.kind} term carries exactly one factor index")
        if self.kind == INTERACTION:
            if self.i is None or self.j is None or not self.i < self.j:
                raise ValueError("interaction term requires indices i < j")

    def name(self, factors: list[str]) -> str:
        if self.kind == INTERCEPT:
            return "Intercept"
        if self.kind == MAIN:
            return factors[self.i]
        if self.kind == QUADRATIC:
            return f"{factors[self.i]}*{factors[self.i]}"
        return f"{factors[self.i]}*{factors[self.j]}"


def full_quadratic_terms(k: int) -> list[Term]:
    """Fixed term order: intercept, mains, quadratics, then interactions."""
    terms = [Term(INTERCEPT)]
    terms += [Term(MAIN, i) for i in range(k)]
    terms += [Term(QUADRATIC, i) for i in range(k)]
    terms += [Term(INTERACTION, i, j) for i in range(k) for j in range(i + 1, k)]
    return terms


@dataclass
class ModelMatrix:
    """Full-quadratic expansion of a design, column 0 all ones."""

    terms: list[Term]
    values: np.ndarray
    source_kind: str
    factors: list[str] = field(default_factory=list)

    @property
    def n_terms(self) -> int:
        return len(self.terms)

    @property
    def n_rows(self) -> int:
        return self.values.shape[0]

    def term_names(self) -> list[str]:
        return [t.name(self.factors) for t in self.terms]


def n_quadratic_terms(k: int) -> int:
    """Predictor count P of the full-quadratic model, intercept excluded."""
    return 2 * k + k * (k - 1) // 2


def make_dsd(k: int, fake_factors: int = 2, center_runs: int = 1) -> Design:
    """Build a definitive screening design from a conference matrix.

    The order-m conference matrix (m = k + fake_factors) is stacked with its
    negation and `center_runs` all-zero rows, then truncated to the first k
    columns, giving N = 2m + center_runs runs.
    """
    if k < 3:
        raise ValueError("definitive screening designs need at least 3 factors")
    if center_runs < 1:
        raise ValueError("center_runs must be at least 1")
    if fake_factors < 0:
        raise ValueError("fake_factors must be non-negative")
    m = k + fake_factors
    if m % 2 != 0 or m not in CONFERENCE_MATRICES:
        raise ValueError(
            f"no conference matrix of order {m} is available; "
            f"k + fake_factors must be one of {sorted(CONFERENCE_MATRICES)}"
        )
    conf = np.array(CONFERENCE_MATRICES[m], dtype=float)
    runs = np.vstack([conf, -conf, np.zeros((center_runs, m))])[:, :k]
    return Design(kind=DSD, factors=default_factor_names(k), runs=runs)


def _default_bbd_centers(k: int) -> int:
    return 6 if k == 5 else 3


def make_bbd(k: int, center_runs: int | None = None) -> Design:
    """Build a Box-Behnken design via the all-pairs construction.

    Every factor pair (i, j) contributes four runs with (x_i, x_j) over
    {-1, +1}^2 and all other factors at zero; N = 2k(k-1) + center_runs.
    """
    if k < 3:
        raise ValueError("Box-Behnken designs need at least 3 factors")
    if center_runs is None:
        center_runs = _default_bbd_centers(k)
    if center_runs < 1:
        raise ValueError("center_runs must be at least 1")
    rows = []
    for i in range(k):
        for j in range(i + 1, k):
            for si in (-1.0, 1.0):
                for sj in (-1.0, 1.0):
                    row = np.zeros(k)
                    row[i] = si
                    row[j] = sj
                    rows.append(row)
    rows.extend(np.zeros(k) for _ in range(center_runs))
    return Design(kind=BBD, factors=default_factor_names(k), runs=np.vstack(rows))


def make_sfd(k: int, n_runs: int, seed: int) -> Design:
    """Draw a uniform space-filling design on [-1, 1]^k, reproducible from seed."""
    if n_runs < 1:
        raise ValueError("n_runs must be at least 1")
    rng = substream(seed, SFD_POINTS)
    runs = rng.uniform(-1.0, 1.0, size=(n_runs, k))
    return Design(kind=SFD, factors=default_factor_names(k), runs=runs)


def expand_full_quadratic(design: Design) -> ModelMatrix:
    """Expand a design into the full-quadratic model matrix.

    Column order is the fixed term order; quadratic columns are elementwise
    squares of the main columns and interaction columns elementwise products.
    """
    k = design.n_factors
    if k < 1:
        raise ValueError("design must have at least one factor")
    x = design.runs
    terms = full_quadratic_terms(k)
    cols = [np.ones(x.shape[0])]
    cols += [x[:, i] for i in range(k)]
    cols += [x[:, i] * x[:, i] for i in range(k)]
    cols += [x[:, i] * x[:, j] for i in range(k) for j in range(i + 1, k)]
    values = np.column_stack(cols)
    return ModelMatrix(
        terms=terms,
        values=values,
        source_kind=design.kind,
        factors=list(design.factors),
    )
