"""B-file processor for reading OEIS ``n a(n)`` sequence files."""

import re
from pathlib import Path
from typing import Iterable, List, Tuple

from src.models import BFileEntry
from src.utils.exceptions import BFileParseError, BFileStructureError
from src.utils.logger import get_logger

logger = get_logger(__name__)


class BFileProcessor:
    """Parses and validates OEIS b-files supplied as local files or text streams."""

    def __init__(self):
        """Initialize the b-file processor."""
        self.line_pattern = re.compile(r"^\s*(-?\d+)\s+(-?\d+)\s*$")

    def parse_bfile(self, stream: Iterable[str]) -> List[BFileEntry]:
        """
        Parse b-file lines.

        Blank lines and lines starting with ``#`` are skipped; every other line must
        hold exactly two integers.

        Args:
            stream: Iterable of text lines (an open file works)

        Returns:
            Entries in file order

        Raises:
            BFileParseError: On a malformed line, or a file with no entries
            BFileStructureError: On repeated or decreasing indices
        """
        entries: List[BFileEntry] = []
        for line_num, line in enumerate(stream, start=1):
            text = line.strip()

            # Skip empty lines and comments
            if not text or text.startswith("#"):
                continue

            match = self.line_pattern.match(text)
            if not match:
                raise BFileParseError(f"expected 'n a(n)', got {text[:40]!r}", line_num)

            entry = BFileEntry(index=int(match.group(1)), value=int(match.group(2)))
            if entries and entry.index <= entries[-1].index:
                raise BFileStructureError(
                    f"line {line_num}: index {entry.index} does not increase "
                    f"(previous {entries[-1].index})"
                )
            entries.append(entry)

        if not entries:
            raise BFileParseError("b-file holds no entries")

        logger.info(
            f"Parsed {len(entries)} b-file entries, indices "
            f"{entries[0].index}..{entries[-1].index}"
        )
        return entries

    def load_bfile(self, file_path: str) -> List[BFileEntry]:
        """
        Load and parse a local b-file.

        Args:
            file_path: Path to the b-file

        Returns:
            Entries in file order
        """
        path = Path(file_path)
        with open(path, "r", encoding="utf-8") as f:
            return self.parse_bfile(f)

    def select_range(
        self, entries: List[BFileEntry], lo: int, hi: int
    ) -> List[BFileEntry]:
        """
        Entries with ``lo <= index <= hi``, requiring every index to be present.

        Raises:
            BFileStructureError: If the range leaves the file's span or has gaps
        """
        first, last = entries[0].index, entries[-1].index
        if lo < first or hi > last:
            raise BFileStructureError(
                f"requested range {lo}..{hi} is outside the file span {first}..{last}"
            )
        selected = [e for e in entries if lo <= e.index <= hi]
        present = {e.index for e in selected}
        gaps = [n for n in range(lo, hi + 1) if n not in present]
        if gaps:
            shown = ", ".join(str(n) for n in gaps[:20])
            more = f" (+{len(gaps) - 20} more)" if len(gaps) > 20 else ""
            raise BFileStructureError(f"missing indices: {shown}{more}", gaps=gaps)
        return selected

    def default_range(self, entries: List[BFileEntry], max_index: int) -> Tuple[int, int]:
        """Largest range starting at 1 (or the first index above 0) capped at ``max_index``."""
        lo = max(1, entries[0].index)
        hi = min(entries[-1].index, max_index)
        if hi < lo:
            raise BFileStructureError(
                f"b-file indices {entries[0].index}..{entries[-1].index} hold nothing "
                f"in 1..{max_index}"
            )
        return lo, hi


# Global processor instance
_bfile_processor = None


def get_bfile_processor() -> BFileProcessor:
    """Get the global b-file processor instance."""
    global _bfile_processor
    if _bfile_processor is None:
        _bfile_processor = BFileProcessor()
    return _bfile_processor
