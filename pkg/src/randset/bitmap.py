"""Fixed-width bitsets backed by Python integers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class WidthMismatchError(ValueError):
    pass


def iter_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@dataclass(frozen=True, slots=True)
class Bitmap:
    """A set of indices in ``[0, width)``.

    Set operations require both operands to have the same width and raise
    :class:`WidthMismatchError` otherwise.
    """

    width: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.width < 0:
            raise ValueError(f"negative width {self.width}")
        if self.bits < 0 or self.bits >> self.width:
            raise ValueError(f"bits outside width {self.width}")

    @classmethod
    def from_indices(cls, width: int, indices: Iterable[int]) -> Bitmap:
        bits = 0
        for i in indices:
            if not 0 <= i < width:
                raise ValueError(f"index {i} outside width {width}")
            bits |= 1 << i
        return cls(width, bits)

    @classmethod
    def full(cls, width: int) -> Bitmap:
        return cls(width, (1 << width) - 1)

    def _check(self, other: Bitmap) -> None:
        if self.width != other.width:
            raise WidthMismatchError(f"width {self.width} != {other.width}")

    def __and__(self, other: Bitmap) -> Bitmap:
        self._check(other)
        return Bitmap(self.width, self.bits & other.bits)

    def __or__(self, other: Bitmap) -> Bitmap:
        self._check(other)
        return Bitmap(self.width, self.bits | other.bits)

    def __sub__(self, other: Bitmap) -> Bitmap:
        self._check(other)
        return Bitmap(self.width, self.bits & ~other.bits)

    def __invert__(self) -> Bitmap:
        return Bitmap(self.width, ((1 << self.width) - 1) & ~self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __contains__(self, index: object) -> bool:
        return isinstance(index, int) and 0 <= index < self.width and bool(self.bits >> index & 1)

    def issubset(self, other: Bitmap) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def with_bit(self, index: int) -> Bitmap:
        if not 0 <= index < self.width:
            raise ValueError(f"index {index} outside width {self.width}")
        return Bitmap(self.width, self.bits | 1 << index)

    def __repr__(self) -> str:
        return f"Bitmap({self.width}, {{{', '.join(map(str, self))}}})"


# Aliases that document which index space a bitmap lives in.
NodeBitmap = Bitmap
EdgeBitmap = Bitmap
FeatureBitmap = Bitmap
