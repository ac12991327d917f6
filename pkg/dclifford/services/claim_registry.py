"""Runner for the catalogue of checkable identities.

Each ``ClaimRecord`` pairs a statement ``lhs == rhs`` with a sampler that
produces inputs per grid cell. The runner walks the grid in a fixed order,
stops at the first inequality and reduces the outcomes into a ``ClaimReport``.
"""
from __future__ import annotations

import fnmatch
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from dclifford import __version__
from dclifford.core.config import settings
from dclifford.core.exceptions import ConfigurationError, DCliffordException, RejectedInputError
from dclifford.core.logging import get_logger, log_structured
from dclifford.services.exact_algebra import CliffordElement, as_rational, format_rational, positive_mesh
from dclifford.services.factorial_powers import FamilySign
from dclifford.services.lattice_polynomial import LatticePolynomial, format_polynomial
from dclifford.services.sampling import claim_rng

logger = get_logger(__name__)


class Expectation(str, Enum):
    EXACT = "expected-exact"
    HYPOTHESIS = "hypothesis"
    NEGATIVE = "negative-witness"


class Status(str, Enum):
    CONFIRMED = "confirmed"
    REFUTED = "refuted"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class GridCell:
    """One parameter combination: dimension, degree, mesh width, operator sign."""
    n: int
    k: int
    h: Fraction
    sign: int

    @property
    def family(self) -> FamilySign:
        return FamilySign.matched_to(self.sign)

    @property
    def label(self) -> str:
        return f"n={self.n} k={self.k} h={format_rational(self.h)} sign={'+' if self.sign > 0 else '-'}"


Inputs = Dict[str, LatticePolynomial]
Sampler = Callable[[GridCell, random.Random, int], Iterable[Inputs]]
Check = Callable[[GridCell, Inputs], Tuple[Any, Any]]


def no_inputs(cell: GridCell, rng: random.Random, trials: int) -> Iterable[Inputs]:
    """Sampler for statements that only depend on the cell."""
    yield {}


@dataclass(frozen=True)
class ClaimRecord:
    """A statement ``lhs == rhs`` over a parameter grid.

    ``dimensions``, ``degrees``, ``mesh_widths`` and ``signs`` replace the
    grid's values when set. ``max_degree`` and ``max_trials`` only cap them.
    ``applies`` drops cells where the statement is undefined.
    """
    id: str
    anchor: str
    group: str
    expectation: Expectation
    check: Check
    sampler: Sampler = no_inputs
    probes: Tuple[Tuple[GridCell, Inputs], ...] = ()
    dimensions: Optional[Tuple[int, ...]] = None
    degrees: Optional[Tuple[int, ...]] = None
    mesh_widths: Optional[Tuple[Fraction, ...]] = None
    signs: Optional[Tuple[int, ...]] = None
    min_degree: int = 0
    max_degree: Optional[int] = None
    max_trials: Optional[int] = None
    applies: Optional[Callable[[GridCell], bool]] = None


@dataclass(frozen=True)
class Grid:
    dimensions: Tuple[int, ...]
    max_degree: int
    mesh_widths: Tuple[Fraction, ...]
    trials: int

    @classmethod
    def from_settings(
        cls,
        dimensions: Optional[Sequence[int]] = None,
        max_degree: Optional[int] = None,
        mesh_widths: Optional[Sequence[Any]] = None,
        trials: Optional[int] = None,
    ) -> "Grid":
        """Default grid from settings, with per-run overrides."""
        dims = tuple(dimensions) if dimensions else tuple(settings.dimensions())
        meshes = tuple(positive_mesh(h) for h in mesh_widths) if mesh_widths else tuple(settings.mesh_widths())
        degree = settings.grid_max_degree if max_degree is None else max_degree
        count = settings.random_trials if trials is None else trials
        if any(n < 1 for n in dims):
            raise ConfigurationError(f"grid dimensions must be positive, got {list(dims)}")
        if degree < 0 or count < 0:
            raise ConfigurationError("grid degree and trial count must be non-negative")
        return cls(dims, degree, meshes, count)

    def cells(self, record: ClaimRecord) -> List[GridCell]:
        """Cells ordered by n, k, h (as given), then sign ``+`` before ``-``."""
        dims = record.dimensions or self.dimensions
        top = self.max_degree if record.max_degree is None else min(self.max_degree, record.max_degree)
        degrees = record.degrees if record.degrees is not None else tuple(range(record.min_degree, top + 1))
        meshes = record.mesh_widths or self.mesh_widths
        signs = record.signs or (1, -1)
        cells = [
            GridCell(n, k, h, sign)
            for n in dims for k in degrees for h in meshes for sign in signs
        ]
        if record.applies is None:
            return cells
        return [cell for cell in cells if record.applies(cell)]

    def trials_for(self, record: ClaimRecord) -> int:
        if record.max_trials is None:
            return self.trials
        return min(self.trials, record.max_trials)


@dataclass(frozen=True)
class Witness:
    cell: GridCell
    inputs: Inputs
    lhs: str
    rhs: str


@dataclass
class ClaimResult:
    id: str
    anchor: str
    group: str
    expectation: Expectation
    status: Status
    cells: int = 0
    samples: int = 0
    witness: Optional[Witness] = None
    diagnostic: Optional[str] = None


@dataclass
class ClaimReport:
    seed: int
    filter: str
    grid: Grid
    claims: List[ClaimResult] = field(default_factory=list)
    version: str = __version__

    @property
    def counts(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in Status}
        for claim in self.claims:
            counts[claim.status.value] += 1
        return counts

    @property
    def ok(self) -> bool:
        """Every expected-exact claim confirmed."""
        return all(
            c.status is Status.CONFIRMED
            for c in self.claims if c.expectation is Expectation.EXACT
        )


def render(value: Any) -> str:
    """Canonical text for the values a check compares."""
    if isinstance(value, LatticePolynomial):
        return format_polynomial(value)
    if isinstance(value, CliffordElement):
        return value.format()
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (tuple, list)):
        return "(" + ", ".join(render(v) for v in value) + ")"
    return str(value)


def _catalogue() -> Tuple[ClaimRecord, ...]:
    from dclifford.services.claim_catalogue import CATALOGUE
    return CATALOGUE


def list_claims(pattern: str = "*") -> List[ClaimRecord]:
    return [record for record in _catalogue() if fnmatch.fnmatchcase(record.id, pattern)]


def get_claim(claim_id: str) -> ClaimRecord:
    for record in _catalogue():
        if record.id == claim_id:
            return record
    raise RejectedInputError(f"unknown claim id '{claim_id}'")


def _disagreement(record: ClaimRecord, cell: GridCell, inputs: Inputs) -> Optional[Witness]:
    lhs, rhs = record.check(cell, inputs)
    if lhs == rhs:
        return None
    return Witness(cell, dict(inputs), render(lhs), render(rhs))


def _samples(record: ClaimRecord, grid: Grid, rng: random.Random):
    for cell, inputs in record.probes:
        yield None, cell, inputs
    trials = grid.trials_for(record)
    for cell in grid.cells(record):
        first = True
        for inputs in record.sampler(cell, rng, trials):
            yield (cell if first else None), cell, inputs
            first = False


def evaluate_claim(record: ClaimRecord, grid: Grid, seed: int) -> ClaimResult:
    """Walk probes and grid until the first inequality; never raises."""
    result = ClaimResult(record.id, record.anchor, record.group, record.expectation, Status.CONFIRMED)
    rng = claim_rng(seed, record.id)
    cell = None
    witness = None
    try:
        for new_cell, cell, inputs in _samples(record, grid, rng):
            if new_cell is not None:
                result.cells += 1
            result.samples += 1
            witness = _disagreement(record, cell, inputs)
            if witness is not None:
                break
    except DCliffordException as exc:
        result.status = Status.INFEASIBLE
        result.diagnostic = f"{cell.label}: {exc.detail}" if cell else exc.detail
        return result
    except Exception as exc:
        logger.error(f"claim {record.id} raised {exc.__class__.__name__}: {exc}")
        result.status = Status.INFEASIBLE
        where = f"{cell.label}: " if cell else ""
        result.diagnostic = f"{where}unexpected {exc.__class__.__name__}: {exc}"
        return result

    if result.samples == 0:
        result.status = Status.INFEASIBLE
        result.diagnostic = "no grid cell applies to this claim"
    elif record.expectation is Expectation.NEGATIVE:
        if witness is None:
            result.status = Status.INFEASIBLE
            result.diagnostic = "no counterexample found within the grid"
        else:
            result.witness = witness
    elif witness is not None:
        result.status = Status.REFUTED
        result.witness = witness
    return result


def run_registry(
    pattern: str = "*",
    grid: Optional[Grid] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
) -> ClaimReport:
    """Evaluate every claim matching ``pattern``.

    Claims run independently (optionally on a thread pool) and the report
    keeps catalogue order, so identical arguments give identical reports.
    """
    grid = grid or Grid.from_settings()
    seed = settings.default_seed if seed is None else seed
    workers = workers or settings.registry_workers
    records = list_claims(pattern)
    log_structured(logger, "info", "running claim registry", {
        "filter": pattern, "claims": len(records), "seed": seed, "workers": workers,
    })
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda r: evaluate_claim(r, grid, seed), records))
    else:
        results = [evaluate_claim(r, grid, seed) for r in records]
    for result in results:
        log_structured(logger, "info", f"claim {result.id}", {
            "status": result.status.value, "samples": result.samples,
        })
    return ClaimReport(seed, pattern, grid, results)


def replay_witness(claim_id: str, witness: Witness) -> bool:
    """Re-evaluate a stored witness; True when the same inequality comes back."""
    record = get_claim(claim_id)
    lhs, rhs = record.check(witness.cell, witness.inputs)
    return lhs != rhs and render(lhs) == witness.lhs and render(rhs) == witness.rhs


def format_report_table(report: ClaimReport) -> str:
    """Plain-text table, one row per claim, followed by a summary line."""
    header = ("id", "group", "expectation", "status", "samples")
    rows = [
        (c.id, c.group, c.expectation.value, c.status.value, str(c.samples))
        for c in report.claims
    ]
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(header, widths)).rstrip()]
    for claim, row in zip(report.claims, rows):
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        if claim.witness is not None:
            w = claim.witness
            lines.append(f"    witness at {w.cell.label}: {w.lhs} != {w.rhs}")
        if claim.diagnostic:
            lines.append(f"    {claim.diagnostic}")
    counts = report.counts
    lines.append(
        f"{len(report.claims)} claims: {counts['confirmed']} confirmed, "
        f"{counts['refuted']} refuted, {counts['infeasible']} infeasible; "
        f"expected-exact {'ok' if report.ok else 'FAILED'}"
    )
    return "\n".join(lines)


def parse_grid_list(text: Optional[str], kind: str) -> Optional[List[Any]]:
    """Parse a comma-separated CLI override (``"1,2"`` or ``"1,1/2"``)."""
    if text is None:
        return None
    items = [item.strip() for item in text.split(",") if item.strip()]
    if not items:
        raise ConfigurationError(f"empty {kind} list")
    if kind == "dimensions":
        try:
            return [int(item) for item in items]
        except ValueError:
            raise ConfigurationError(f"dimensions must be integers, got '{text}'")
    return [as_rational(item) for item in items]
