"""Printed tables reproduced from the library and from the command line."""

import pytest

from chebfield import cli, modd
from chebfield.minpoly import minimal_poly, zeros_power_basis
from chebfield.polycore import render
from reference import golden_lines, golden_rows


def cli_text(*argv):
    code, text, _ = cli.run(list(argv))
    assert code == 0
    return text.splitlines()


def test_minimal_polynomials_table():
    rows = golden_rows("minimal_polynomials.txt")
    assert len(rows) == 30
    for n_text, printed in rows:
        assert render(minimal_poly(int(n_text))) == printed
    assert cli_text("minpoly", "--range", "1..30") == golden_lines("minimal_polynomials.txt")


def test_coefficient_rows_table():
    assert cli_text("minpoly", "--coeffs", "--range", "1..15") == golden_lines("coefficient_rows.txt")
    assert list(minimal_poly(13).coeffs) == [-1, -3, 6, 4, -5, -1, 1]


def test_zero_table():
    assert cli_text("zeros", "--range", "1..30") == golden_lines("zero_coordinates.txt")
    assert len(zeros_power_basis(30).rows) == 8


def test_cycle_table():
    assert cli_text("cycles", "--range", "1..40") == golden_lines("modd_cycles.txt")


def _compare_group_rows(computed, printed):
    assert [r.n for r in computed] == [int(p[0]) for p in printed]
    for row, (n, order, signature, cycles, group) in zip(computed, printed):
        assert (row.order, row.signature, row.cycle_count) == (int(order), signature, int(cycles)), n
        assert modd.AbelianType.from_text(row.group) == modd.AbelianType.from_text(group), n


def test_modn_non_cyclic_table():
    printed = golden_rows("modn_non_cyclic.txt")
    assert len(printed) == 50
    _compare_group_rows(modd.non_cyclic_rows(range(1, 101), "modn"), printed)


def test_modd_non_cyclic_table():
    printed = golden_rows("modd_non_cyclic.txt")
    assert len(printed) == 30
    _compare_group_rows(modd.non_cyclic_rows(range(1, 101), "modd"), printed)


@pytest.mark.parametrize("name, which", [("modn_non_cyclic.txt", "modn"), ("modd_non_cyclic.txt", "modd")])
def test_galois_command_matches_columns(name, which):
    lines = cli_text("galois", which)
    computed = [line.split("\t") for line in lines]
    printed = golden_rows(name)
    assert [c[:4] for c in computed] == [p[:4] for p in printed]
