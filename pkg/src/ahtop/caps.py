"""Enumeration caps shared by the search-heavy modules.

Every exhaustive construction takes a ``cap`` argument defaulting to
DEFAULT_ENUMERATION_CAP and fails loudly (never silently truncates) when
the enumeration would exceed it.
"""

DEFAULT_ENUMERATION_CAP = 10_000_000


class EnumerationCapError(RuntimeError):
    """Raised when an enumeration would exceed its configured cap."""

    def __init__(self, what: str, count, cap: int):
        self.what = what
        self.count = count
        self.cap = cap
        super().__init__(f"{what}: {count} states exceeds cap {cap}")
