"""CSV surface tests: wide/long parsing with coordinate-bearing errors and
exact round-trips."""

import numpy as np
import pytest

from rmpower.csvio import (
    curve_to_csv,
    dataset_to_wide_csv,
    parse_curve_csv,
    parse_long_csv,
    parse_wide_csv,
)
from rmpower.errors import CsvError
from rmpower.power import EffectSpec, TestKind, power_curve


class TestParseWide:
    def test_fixture_shapes(self, one_group_csv_path):
        data = parse_wide_csv(one_group_csv_path.read_text())
        assert data.n_groups == 1
        assert data.group_sizes == (5,)
        assert data.n_times == 5
        assert data.time_labels == ("baseline", "day4", "day7", "day14", "day21")

    def test_three_group_fixture(self, three_groups_csv_path):
        data = parse_wide_csv(three_groups_csv_path.read_text())
        assert data.n_groups == 3
        assert data.group_sizes == (5, 5, 5)
        assert [block.label for block in data.groups] == ["g1", "g2", "g3"]

    def test_group_order_by_first_appearance(self):
        text = (
            "group,subject,t1,t2\n"
            "b,s1,1,2\n"
            "a,s1,3,4\n"
            "b,s2,5,6\n"
            "a,s2,7,8\n"
        )
        data = parse_wide_csv(text)
        assert [block.label for block in data.groups] == ["b", "a"]

    def test_empty_file(self):
        with pytest.raises(CsvError, match="no data rows"):
            parse_wide_csv("")

    def test_header_only(self):
        with pytest.raises(CsvError, match="no data rows"):
            parse_wide_csv("group,subject,t1,t2\n")

    def test_bad_header(self):
        with pytest.raises(CsvError, match="header"):
            parse_wide_csv("id,subject,t1,t2\n1,s1,1,2\n")

    def test_duplicate_pair_named(self):
        text = "group,subject,t1,t2\ng1,s1,1,2\ng1,s1,3,4\ng1,s2,5,6\n"
        with pytest.raises(CsvError, match=r"line 3.*'g1'.*'s1'"):
            parse_wide_csv(text)

    def test_bad_number_carries_line_and_column(self):
        text = "group,subject,t1,t2\ng1,s1,1,2\ng1,s2,1,oops\n"
        with pytest.raises(CsvError, match="line 3, column 4"):
            parse_wide_csv(text)

    def test_short_row_carries_line(self):
        text = "group,subject,t1,t2\ng1,s1,1,2\ng1,s2,1\n"
        with pytest.raises(CsvError, match="line 3"):
            parse_wide_csv(text)

    def test_round_trip(self, three_groups_csv_path):
        data = parse_wide_csv(three_groups_csv_path.read_text())
        text = dataset_to_wide_csv(data)
        again = parse_wide_csv(text)
        assert again.time_labels == data.time_labels
        for block_a, block_b in zip(data.groups, again.groups):
            assert block_a.label == block_b.label
            assert block_a.subjects == block_b.subjects
            assert np.array_equal(block_a.values, block_b.values)


class TestParseLong:
    def test_equivalent_to_wide(self, one_group_csv_path):
        wide = parse_wide_csv(one_group_csv_path.read_text())
        lines = ["group,subject,time,value"]
        for block in wide.groups:
            for subject, row in zip(block.subjects, block.values):
                for label, value in zip(wide.time_labels, row):
                    lines.append(f"{block.label},{subject},{label},{float(value)!r}")
        data = parse_long_csv("\n".join(lines))
        assert data.time_labels == wide.time_labels
        assert np.array_equal(data.groups[0].values, wide.groups[0].values)

    def test_missing_cell_named(self):
        text = (
            "group,subject,time,value\n"
            "g1,s1,t1,1\ng1,s1,t2,2\n"
            "g1,s2,t1,3\n"
        )
        with pytest.raises(CsvError, match=r"'g1'.*'s2'.*'t2'"):
            parse_long_csv(text)

    def test_duplicate_cell_rejected(self):
        text = "group,subject,time,value\ng1,s1,t1,1\ng1,s1,t1,2\n"
        with pytest.raises(CsvError, match="duplicate cell"):
            parse_long_csv(text)

    def test_bad_header(self):
        with pytest.raises(CsvError, match="header"):
            parse_long_csv("a,b,c,d\n1,2,3,4\n")


class TestCurveCsv:
    def test_round_trip_exact(self):
        curve = power_curve(
            TestKind.WITHIN, 4, 5, EffectSpec(), [0.1, 0.25, 0.4], [8, 24, 48]
        )
        again = parse_curve_csv(curve_to_csv(curve))
        assert again == curve

    def test_header_enforced(self):
        with pytest.raises(CsvError):
            parse_curve_csv("x,y,z\n1,2,3\n")
