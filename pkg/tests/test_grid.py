"""Tests for the grid model: blocking, propositions, addability, maximality."""
from __future__ import annotations

from fractions import Fraction

import pytest

from settle.grid import Boundary, Configuration, Dims, Prop

IMPERMISSIBLE = ("#...", "###.", ".###", "###.", "..##")
PERMISSIBLE = ("#...", "###.", "..##", "###.", "..##")
MAXIMAL = ("#.##", "###.", "#.##", "###.", "#.##")


def from_rows(rows: tuple[str, ...], boundary: Boundary = Boundary.FREE) -> Configuration:
    dims = Dims(len(rows), len(rows[0]), boundary)
    cells = [
        (i, j)
        for i, row in enumerate(rows, start=1)
        for j, ch in enumerate(row, start=1)
        if ch == "#"
    ]
    return Configuration.from_cells(dims, cells)


class TestDims:
    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Dims(0, 4)
        with pytest.raises(ValueError):
            Dims(4, -1)

    def test_boundary_default_is_free(self):
        assert Dims(2, 2).boundary is Boundary.FREE


class TestBlocking:
    def test_impermissible_fixture_blocked_cells(self):
        config = from_rows(IMPERMISSIBLE)
        assert config.blocked_cells() == [(2, 2), (3, 3)]
        assert not config.is_permissible()

    def test_permissible_fixture_has_no_blocked_cells(self):
        config = from_rows(PERMISSIBLE)
        assert config.blocked_cells() == []
        assert config.is_permissible()

    def test_full_grid_is_impermissible_when_wide_enough(self):
        config = Configuration.full(Dims(2, 3))
        assert config.is_blocked(1, 2)
        assert not config.is_permissible()

    def test_full_two_column_grid_is_permissible(self):
        # either the east or the west neighbor is always off-grid in Free mode
        config = Configuration.full(Dims(4, 2))
        assert config.is_permissible()
        assert config.is_maximal()

    def test_bricked_borders_count_as_occupied(self):
        config = Configuration.full(Dims(1, 2))
        bricked = Configuration.full(Dims(1, 2, Boundary.BRICKED))
        assert config.is_permissible()
        assert not bricked.is_permissible()

    def test_south_row_never_blocked_in_free_mode(self):
        config = Configuration.full(Dims(1, 5))
        assert config.is_permissible()


class TestPropositions:
    def test_center_proposition_requires_all_three(self):
        config = from_rows(("#.#", "...", ".#."))
        # (1,2): east and west occupied, south (2,2) empty
        assert not config.proposition(Prop.CENTER, 1, 2)
        config2 = from_rows(("#.#", ".#.", "..."))
        assert config2.proposition(Prop.CENTER, 1, 2)

    def test_east_proposition_matches_hand_example(self):
        config = from_rows(("..##", "..#.", "...."))
        assert config.proposition(Prop.EAST, 1, 2)
        assert not config.proposition(Prop.EAST, 2, 2)

    def test_west_proposition_matches_hand_example(self):
        config = from_rows(("##..", ".#..", "...."))
        assert config.proposition(Prop.WEST, 1, 3)
        assert not config.proposition(Prop.WEST, 2, 3)

    def test_north_proposition_needs_three_above(self):
        config = from_rows(("###", "...", "..."))
        assert config.proposition(Prop.NORTH, 2, 2)
        assert not config.proposition(Prop.NORTH, 3, 2)

    def test_offgrid_neighbor_makes_proposition_false(self):
        config = Configuration.full(Dims(3, 3, Boundary.BRICKED))
        # east neighbor of column n, west neighbor of column 1, north
        # neighbor of row 1 are all off-grid: false even in Bricked mode
        assert not config.proposition(Prop.EAST, 1, 3)
        assert not config.proposition(Prop.WEST, 1, 1)
        assert not config.proposition(Prop.NORTH, 1, 2)

    def test_offgrid_term_takes_boundary_value(self):
        free = Configuration.full(Dims(2, 2))
        bricked = Configuration.full(Dims(2, 2, Boundary.BRICKED))
        # center proposition at (2,1): west term (2,0) and south term (3,1)
        # are off-grid
        assert not free.proposition(Prop.CENTER, 2, 1)
        assert bricked.proposition(Prop.CENTER, 2, 1)

    def test_propositions_at_keys(self):
        config = from_rows(PERMISSIBLE)
        props = config.propositions_at(3, 1)
        assert set(props) == set(Prop)


class TestAddability:
    def test_permissible_fixture_addable_cells(self):
        config = from_rows(PERMISSIBLE)
        assert (1, 2) in config.addable_cells()
        assert not config.is_maximal()

    def test_addable_rejects_occupied_cell(self):
        config = from_rows(PERMISSIBLE)
        with pytest.raises(ValueError):
            config.is_addable(1, 1)

    def test_maximal_fixture(self):
        config = from_rows(MAXIMAL)
        assert config.is_maximal()
        assert config.occupancy() == 15
        assert config.addable_cells() == []

    def test_empty_single_cell_bricked_is_maximal(self):
        # all four sides bricked: the lone lot is covered by its center
        # proposition, so the empty grid admits nothing
        config = Configuration.empty(Dims(1, 1, Boundary.BRICKED))
        assert config.is_maximal()
        assert Configuration.empty(Dims(1, 1)).is_maximal() is False


class TestGreedyComplete:
    def test_completes_to_maximal_superset(self):
        config = from_rows(PERMISSIBLE)
        done = config.greedy_complete()
        assert done.is_maximal()
        assert set(config.cells()) <= set(done.cells())

    def test_empty_grid_completes(self):
        done = Configuration.empty(Dims(3, 3)).greedy_complete()
        assert done.is_maximal()

    def test_rejects_impermissible_input(self):
        with pytest.raises(ValueError):
            from_rows(IMPERMISSIBLE).greedy_complete()


class TestAccessors:
    def test_out_of_range_coordinates_raise(self):
        config = from_rows(MAXIMAL)
        for i, j in [(0, 1), (6, 1), (1, 0), (1, 5)]:
            with pytest.raises(ValueError):
                config.is_occupied(i, j)

    def test_cells_are_row_major(self):
        config = from_rows(("#.#", ".#."))
        assert config.cells() == [(1, 1), (1, 3), (2, 2)]

    def test_with_and_without_house(self):
        config = Configuration.empty(Dims(2, 2))
        one = config.with_house(2, 1)
        assert one.is_occupied(2, 1)
        assert one.with_house(2, 1) == one
        assert one.without_house(2, 1) == config

    def test_density_is_exact(self):
        config = from_rows(MAXIMAL)
        assert config.density() == Fraction(3, 4)

    def test_mirror_is_involutive_and_preserves_verdicts(self):
        config = from_rows(IMPERMISSIBLE)
        mirrored = config.mirror_ew()
        assert mirrored.mirror_ew() == config
        assert mirrored.blocked_cells() == [(2, 3), (3, 2)]
