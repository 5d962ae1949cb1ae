"""Catalog of 4x4 sign matrices with orthonormal columns.

Among the sixteen vectors in {+1/2, -1/2}^4, the eight whose first entry is
positive split into exactly two sets of four mutually orthogonal columns.
Ordering each set's columns in all 4! ways gives 2 * 24 = 48 distinct
matrices, labelled A_1234 ... B_4321 by column order.  Labels group into
subsets A1..A4 and B1..B4 according to which column comes first.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

import numpy as np

# Class A columns: each pair differs in exactly two positions.
_COLUMNS_A = (
    (1, 1, 1, 1),
    (1, -1, -1, 1),
    (1, -1, 1, -1),
    (1, 1, -1, -1),
)
# Class B columns: each pair differs in exactly two positions as well, but no
# signed column permutation maps one class onto the other.
_COLUMNS_B = (
    (1, 1, 1, -1),
    (1, 1, -1, 1),
    (1, -1, 1, 1),
    (1, -1, -1, -1),
)

_LABEL_RE = re.compile(r"^([AB])_([1-4]{4})$")


@dataclass(frozen=True)
class FamilyLabel:
    """Identifier like A_1234: column class plus the order its columns appear in."""

    kind: str
    perm: tuple[int, int, int, int]

    def __post_init__(self):
        if self.kind not in ("A", "B"):
            raise ValueError(f"column class must be 'A' or 'B', got {self.kind!r}")
        if sorted(self.perm) != [1, 2, 3, 4]:
            raise ValueError(f"{self.perm} is not a permutation of (1, 2, 3, 4)")

    @classmethod
    def parse(cls, text: str) -> "FamilyLabel":
        m = _LABEL_RE.match(text)
        if m is None:
            raise ValueError(f"malformed label {text!r}, expected e.g. 'A_1234'")
        return cls(m.group(1), tuple(int(c) for c in m.group(2)))

    @property
    def subset(self) -> str:
        """Subset name A1..B4, determined by the leading column."""
        return f"{self.kind}{self.perm[0]}"

    def __str__(self) -> str:
        return f"{self.kind}_{''.join(str(p) for p in self.perm)}"


@dataclass(frozen=True, eq=False)
class LinearSystemSpec:
    """One catalog entry: the matrix, its canonical right-hand side, and a rendering."""

    label: FamilyLabel
    matrix: np.ndarray
    y: np.ndarray
    equations: tuple[str, ...]

    @property
    def subset(self) -> str:
        return self.label.subset


def base_columns(kind: str) -> list[np.ndarray]:
    """The four reference columns of class 'A' or 'B', in index order 1..4."""
    if kind == "A":
        raw = _COLUMNS_A
    elif kind == "B":
        raw = _COLUMNS_B
    else:
        raise ValueError(f"column class must be 'A' or 'B', got {kind!r}")
    return [np.array(col, dtype=float) / 2.0 for col in raw]


def matrix_for(label: FamilyLabel) -> np.ndarray:
    """Build the matrix named by `label`; the result is marked read-only."""
    cols = base_columns(label.kind)
    out = np.column_stack([cols[p - 1] for p in label.perm])
    out.setflags(write=False)
    return out


def equations_for(label: FamilyLabel, y=None) -> list[str]:
    """Render the system A x = y with denominators cleared, one string per row."""
    a = matrix_for(label)
    rhs = np.zeros(4) if y is None else np.asarray(y, dtype=float).reshape(-1)
    if y is None:
        rhs[0] = 1.0
    if rhs.size != 4:
        raise ValueError(f"y must have length 4, got {rhs.size}")
    lines = []
    for i in range(4):
        coeffs = 2.0 * a[i]
        if np.max(np.abs(np.abs(coeffs) - 1.0)) > 1e-12:
            raise ValueError("equation rendering expects rows with entries +-1/2")
        terms = []
        for j, c in enumerate(coeffs):
            sign = "+" if c > 0 else "-"
            if not terms:
                terms.append(f"x{j + 1}" if c > 0 else f"-x{j + 1}")
            else:
                terms.append(f"{sign} x{j + 1}")
        lines.append(f"{' '.join(terms)} = {2.0 * rhs[i]:g}")
    return lines


def enumerate_family() -> list[LinearSystemSpec]:
    """All 48 systems, class A first, permutations in lexicographic order."""
    e1 = np.zeros(4)
    e1[0] = 1.0
    e1.setflags(write=False)
    out = []
    for kind in ("A", "B"):
        for perm in itertools.permutations((1, 2, 3, 4)):
            label = FamilyLabel(kind, perm)
            out.append(
                LinearSystemSpec(
                    label=label,
                    matrix=matrix_for(label),
                    y=e1,
                    equations=tuple(equations_for(label)),
                )
            )
    return out
