from fractions import Fraction

import pytest

from dclifford.core.exceptions import ConfigurationError, RejectedInputError
from dclifford.services.claim_registry import (
    ClaimRecord,
    Expectation,
    Grid,
    GridCell,
    Status,
    Witness,
    evaluate_claim,
    format_report_table,
    get_claim,
    list_claims,
    parse_grid_list,
    replay_witness,
    run_registry,
)
from dclifford.services.quaternion_dirac import TranscriptionResolution, TranscriptionVerdict

ONE = Fraction(1)


def _record(check, expectation=Expectation.EXACT, **overrides):
    return ClaimRecord("T1", "test statement", "tests", expectation, check, **overrides)


def _raise(error):
    def check(cell, inputs):
        raise error

    return check


@pytest.fixture
def small_grid():
    return Grid((1, 2), 1, (ONE,), 0)


class TestCatalogue:
    def test_size_and_unique_ids(self):
        records = list_claims()
        assert len(records) == 99
        assert len({r.id for r in records}) == 99

    def test_second_part_claims_are_laplacian_or_quaternion(self):
        records = list_claims("Eq4*")
        assert records
        assert {r.group for r in records} <= {"laplacian", "quaternion"}

    def test_groups(self):
        groups = {r.group for r in list_claims()}
        assert groups == {
            "factorial", "fischer", "operators", "summation", "calculus", "powers", "laplacian", "quaternion",
        }

    def test_oracle_claims_are_capped(self):
        grid = Grid.from_settings()
        for claim_id in ("Dirac-stencil", "Eq9", "Eq13", "Eq14", "Eq15", "Eq16", "Def3.1-euler", "Def3.1-gamma"):
            record = get_claim(claim_id)
            assert grid.trials_for(record) == 0
            assert max(c.k for c in grid.cells(record)) == 3
        for claim_id in ("Eq2", "Eq3"):
            record = get_claim(claim_id)
            assert grid.trials_for(record) == 2
            assert max(c.k for c in grid.cells(record)) == 2

    def test_lookup(self):
        assert get_claim("Eq41").expectation is Expectation.EXACT
        with pytest.raises(RejectedInputError, match="unknown claim id 'Eq99'"):
            get_claim("Eq99")


class TestGrid:
    def test_cell_order(self):
        grid = Grid((1, 2), 1, (ONE, Fraction(1, 2)), 0)
        cells = grid.cells(_record(lambda c, i: (0, 0)))
        assert len(cells) == 16
        assert [c.label for c in cells[:5]] == [
            "n=1 k=0 h=1 sign=+",
            "n=1 k=0 h=1 sign=-",
            "n=1 k=0 h=1/2 sign=+",
            "n=1 k=0 h=1/2 sign=-",
            "n=1 k=1 h=1 sign=+",
        ]

    def test_record_overrides(self, small_grid):
        record = _record(lambda c, i: (0, 0), dimensions=(3,), signs=(-1,), min_degree=1, max_degree=4)
        cells = small_grid.cells(record)
        assert cells == [GridCell(3, 1, ONE, -1)]

    def test_trials_are_capped(self):
        grid = Grid((1,), 1, (ONE,), 10)
        assert grid.trials_for(_record(lambda c, i: (0, 0), max_trials=3)) == 3
        assert grid.trials_for(_record(lambda c, i: (0, 0))) == 10

    def test_inapplicable_cells_are_dropped(self, small_grid):
        record = _record(lambda c, i: (0, 0), applies=lambda c: c.sign > 0)
        assert [c.sign for c in small_grid.cells(record)] == [1, 1, 1, 1]

    def test_family_follows_the_sign(self):
        assert GridCell(1, 0, ONE, 1).family.value == "-"
        assert GridCell(1, 0, ONE, -1).family.value == "+"

    def test_from_settings(self):
        grid = Grid.from_settings()
        assert grid.dimensions == (1, 2, 3)
        assert grid.mesh_widths == (ONE, Fraction(1, 2), Fraction(1, 4))
        assert Grid.from_settings(dimensions=[2], trials=0).dimensions == (2,)
        with pytest.raises(ConfigurationError, match="must be positive"):
            Grid.from_settings(dimensions=[0])
        with pytest.raises(ConfigurationError, match="non-negative"):
            Grid.from_settings(max_degree=-1)

    def test_parse_grid_list(self):
        assert parse_grid_list(None, "dimensions") is None
        assert parse_grid_list("1, 2", "dimensions") == [1, 2]
        assert parse_grid_list("1,1/2", "mesh widths") == [ONE, Fraction(1, 2)]
        with pytest.raises(ConfigurationError, match="empty dimensions list"):
            parse_grid_list(" , ", "dimensions")
        with pytest.raises(ConfigurationError, match="must be integers"):
            parse_grid_list("1,x", "dimensions")


class TestEvaluation:
    def test_confirmed(self, small_grid):
        result = evaluate_claim(_record(lambda c, i: (c.n, c.n)), small_grid, 0)
        assert result.status is Status.CONFIRMED
        assert result.cells == 8
        assert result.samples == 8
        assert result.witness is None

    def test_first_inequality_is_the_witness(self, small_grid):
        result = evaluate_claim(_record(lambda c, i: (c.k, 0)), small_grid, 0)
        assert result.status is Status.REFUTED
        assert result.samples == 3
        assert result.witness.cell.label == "n=1 k=1 h=1 sign=+"
        assert (result.witness.lhs, result.witness.rhs) == ("1", "0")

    def test_rejected_input_is_infeasible(self, small_grid):
        result = evaluate_claim(_record(_raise(RejectedInputError("boom"))), small_grid, 0)
        assert result.status is Status.INFEASIBLE
        assert result.diagnostic == "n=1 k=0 h=1 sign=+: boom"

    def test_unexpected_errors_are_contained(self, small_grid):
        result = evaluate_claim(_record(_raise(ValueError("boom"))), small_grid, 0)
        assert result.status is Status.INFEASIBLE
        assert result.diagnostic == "n=1 k=0 h=1 sign=+: unexpected ValueError: boom"

    def test_empty_grid(self, small_grid):
        result = evaluate_claim(_record(lambda c, i: (0, 0), degrees=()), small_grid, 0)
        assert result.status is Status.INFEASIBLE
        assert result.diagnostic == "no grid cell applies to this claim"

    def test_negative_claim_without_witness(self, small_grid):
        result = evaluate_claim(_record(lambda c, i: (0, 0), Expectation.NEGATIVE), small_grid, 0)
        assert result.status is Status.INFEASIBLE
        assert result.diagnostic == "no counterexample found within the grid"

    def test_negative_claim_with_witness(self):
        result = evaluate_claim(get_claim("W-noninverse"), Grid((1,), 1, (ONE,), 1), 0)
        assert result.status is Status.CONFIRMED
        assert result.witness.cell.label == "n=1 k=0 h=1 sign=+"
        assert (result.witness.lhs, result.witness.rhs) == ("0", "e0")

    def test_probe_before_the_grid(self):
        result = evaluate_claim(get_claim("Eq24"), Grid((1,), 2, (ONE,), 0), 0)
        assert result.status is Status.REFUTED
        assert (result.cells, result.samples) == (0, 1)
        assert result.witness.cell == GridCell(1, 2, ONE, 1)
        assert (result.witness.lhs, result.witness.rhs) == ("-2 X1^(1) e0", "X1^(2) e0")

    @pytest.mark.parametrize("claim_id", ["Eq25", "Eq26"])
    def test_singular_cells_are_skipped_before_the_witness(self, claim_id):
        grid = Grid((1,), 2, (ONE, Fraction(1, 2)), 0)
        result = evaluate_claim(get_claim(claim_id), grid, 0)
        assert result.status is Status.REFUTED
        assert result.diagnostic is None
        assert (result.cells, result.samples) == (4, 4)
        assert result.witness.cell == GridCell(1, 1, ONE, 1)
        assert result.witness.lhs != result.witness.rhs
        assert replay_witness(claim_id, result.witness)

    def test_gamma_of_variable_skips_the_singular_cell(self):
        grid = Grid((1,), 2, (ONE, Fraction(1, 2)), 0)
        result = evaluate_claim(get_claim("Eq33"), grid, 0)
        assert result.status is Status.CONFIRMED
        assert result.diagnostic is None
        assert result.cells == 3

    def test_gamma_claims_use_a_table_reading(self):
        grid = Grid((3,), 1, (ONE,), 0)
        assert evaluate_claim(get_claim("Eq4-gamma-resolved"), grid, 0).status is Status.CONFIRMED
        assert evaluate_claim(get_claim("Eq4-gamma-repairs"), grid, 0).status is Status.CONFIRMED
        assert evaluate_claim(get_claim("Eq4-gamma-printed"), grid, 0).status is Status.REFUTED

    def test_unresolved_gamma_table_cannot_confirm(self, monkeypatch):
        rejected = TranscriptionVerdict("printed", False, "X1^(1) e0", "-2 X1^(1) e23")
        monkeypatch.setattr(
            "dclifford.services.claim_catalogue.resolve_gamma_transcription",
            lambda variant, h: TranscriptionResolution(variant, None, (rejected,)),
        )
        result = evaluate_claim(get_claim("Eq4-gamma-resolved"), Grid((3,), 1, (ONE,), 0), 0)
        assert result.status is Status.REFUTED
        assert result.witness.lhs == "no consistent reading: printed fails on X1^(1) e0"
        assert result.witness.rhs == "a consistent reading"

    def test_quaternion_factorization_is_confirmed(self):
        result = evaluate_claim(get_claim("Eq41"), Grid((1,), 1, (ONE,), 1), 0)
        assert result.status is Status.CONFIRMED
        assert result.cells == 4


class TestReports:
    def test_exact_failures_flip_ok(self, small_grid, monkeypatch):
        records = [_record(lambda c, i: (c.k, 0)), _record(lambda c, i: (c.k, 0), Expectation.HYPOTHESIS)]
        monkeypatch.setattr("dclifford.services.claim_registry._catalogue", lambda: tuple(records))
        report = run_registry("*", small_grid, 0)
        assert report.counts == {"confirmed": 0, "refuted": 2, "infeasible": 0}
        assert not report.ok

    def test_deterministic_and_worker_independent(self):
        grid = Grid((1, 2), 2, (ONE, Fraction(1, 2)), 2)
        first = run_registry("P[1-4]", grid, seed=3)
        again = run_registry("P[1-4]", grid, seed=3)
        threaded = run_registry("P[1-4]", grid, seed=3, workers=3)
        assert first.claims == again.claims == threaded.claims
        assert [c.id for c in first.claims] == ["P1", "P2", "P3", "P4"]
        assert first.ok

    def test_replay(self):
        report = run_registry("Eq24", Grid((1,), 2, (ONE,), 0), seed=0)
        witness = report.claims[0].witness
        assert replay_witness("Eq24", witness)
        tampered = Witness(witness.cell, witness.inputs, "0", witness.rhs)
        assert not replay_witness("Eq24", tampered)

    def test_table(self):
        report = run_registry("Eq24", Grid((1,), 2, (ONE,), 0), seed=0)
        assert format_report_table(report) == (
            "id    group     expectation  status   samples\n"
            "Eq24  calculus  hypothesis   refuted  1\n"
            "    witness at n=1 k=2 h=1 sign=+: -2 X1^(1) e0 != X1^(2) e0\n"
            "1 claims: 0 confirmed, 1 refuted, 0 infeasible; expected-exact ok"
        )
