"""Tests for the b-file processor component."""

import pytest

from src.components.bfile_processor import BFileProcessor, get_bfile_processor
from src.utils.exceptions import BFileParseError, BFileStructureError


class TestBFileProcessor:
    """Test suite for b-file parsing and range selection."""

    @pytest.fixture
    def processor(self):
        """Create a b-file processor instance."""
        return BFileProcessor()

    def test_parse_skips_comments_and_blanks(self, processor):
        """Test comment and blank lines are ignored."""
        lines = ["# A002324\n", "\n", "1 1\n", "2 0\n", "  3   1  \n"]
        entries = processor.parse_bfile(lines)
        assert [(e.index, e.value) for e in entries] == [(1, 1), (2, 0), (3, 1)]

    def test_parse_negative_values(self, processor):
        """Test signed values are accepted."""
        entries = processor.parse_bfile(["0 0", "1 -3"])
        assert entries[1].value == -3

    def test_malformed_line_reports_line_number(self, processor):
        """Test a malformed line raises with its 1-based line number."""
        with pytest.raises(BFileParseError) as exc_info:
            processor.parse_bfile(["# header", "1 1", "2 x"])
        assert exc_info.value.line_number == 3
        assert "line 3" in str(exc_info.value)

    def test_extra_column_is_malformed(self, processor):
        """Test lines must hold exactly two integers."""
        with pytest.raises(BFileParseError):
            processor.parse_bfile(["1 1 1"])

    def test_non_increasing_indices(self, processor):
        """Test repeated or decreasing indices are refused."""
        with pytest.raises(BFileStructureError):
            processor.parse_bfile(["1 1", "1 0"])
        with pytest.raises(BFileStructureError):
            processor.parse_bfile(["2 1", "1 0"])

    def test_empty_file(self, processor):
        """Test a file with only comments is refused."""
        with pytest.raises(BFileParseError) as exc_info:
            processor.parse_bfile(["# nothing here", ""])
        assert exc_info.value.line_number is None

    def test_load_bfile(self, processor, bfile_factory):
        """Test loading from a local path."""
        path = bfile_factory("1 1\n2 0\n3 1\n")
        assert len(processor.load_bfile(path)) == 3

    def test_load_missing_file(self, processor, tmp_path):
        """Test a missing path surfaces as OSError."""
        with pytest.raises(OSError):
            processor.load_bfile(str(tmp_path / "absent.txt"))

    def test_select_range(self, processor):
        """Test selecting a contiguous sub-range."""
        entries = processor.parse_bfile([f"{n} {n % 3}" for n in range(0, 11)])
        selected = processor.select_range(entries, 3, 6)
        assert [e.index for e in selected] == [3, 4, 5, 6]

    def test_select_range_outside_span(self, processor):
        """Test ranges beyond the file are refused."""
        entries = processor.parse_bfile(["1 1", "2 0"])
        with pytest.raises(BFileStructureError):
            processor.select_range(entries, 1, 3)

    def test_select_range_reports_gaps(self, processor):
        """Test missing indices are listed."""
        entries = processor.parse_bfile(["1 1", "2 0", "5 0", "6 0"])
        with pytest.raises(BFileStructureError) as exc_info:
            processor.select_range(entries, 1, 6)
        assert exc_info.value.gaps == [3, 4]

    def test_default_range(self, processor):
        """Test the default range starts at 1 and is capped."""
        entries = processor.parse_bfile([f"{n} 0" for n in range(0, 50)])
        assert processor.default_range(entries, 10_000) == (1, 49)
        assert processor.default_range(entries, 20) == (1, 20)

    def test_default_range_empty(self, processor):
        """Test a file holding only index 0 has no usable range."""
        entries = processor.parse_bfile(["0 1"])
        with pytest.raises(BFileStructureError):
            processor.default_range(entries, 100)

    def test_singleton(self):
        """Test the global processor is shared."""
        assert get_bfile_processor() is get_bfile_processor()
