"""Set partitions and integer partitions as small immutable values."""

from dataclasses import dataclass

from .bits import iter_bits, lowest, popcount


@dataclass(frozen=True, order=True)
class SetPartition:
    """A partition of ``{0, ..., n-1}``; blocks are bitmasks sorted by least element."""

    n: int
    blocks: tuple

    @classmethod
    def from_blocks(cls, n, blocks):
        masks = []
        for b in blocks:
            masks.append(b if isinstance(b, int) else sum(1 << i for i in b))
        masks = [m for m in masks if m]
        masks.sort(key=lowest)
        return cls(n, tuple(masks))

    @classmethod
    def from_labels(cls, labels):
        """Partition whose blocks are the fibres of ``labels`` (a list over points)."""
        groups = {}
        for i, lab in enumerate(labels):
            groups[lab] = groups.get(lab, 0) | 1 << i
        return cls.from_blocks(len(labels), groups.values())

    def is_valid(self):
        seen = 0
        for b in self.blocks:
            if not b or seen & b:
                return False
            seen |= b
        return seen == (1 << self.n) - 1

    def block_of(self):
        """List mapping each point to the position of its block."""
        where = [0] * self.n
        for k, b in enumerate(self.blocks):
            for i in iter_bits(b):
                where[i] = k
        return where

    def refines(self, other):
        """True when every block of ``self`` sits inside a block of ``other``."""
        return all(any(b & ~c == 0 for c in other.blocks) for b in self.blocks)

    def meet(self, other):
        return SetPartition.from_blocks(
            self.n, [b & c for b in self.blocks for c in other.blocks if b & c]
        )

    def shape(self):
        return IntPartition.from_parts(popcount(b) for b in self.blocks)

    def as_lists(self):
        return [list(iter_bits(b)) for b in self.blocks]

    def __str__(self):
        # one-based, matching the usual 12|34|5|6 notation
        return "|".join("".join(str(i + 1) if self.n < 10 else f"{i + 1}," for i in iter_bits(b)).rstrip(",")
                        for b in self.blocks)


@dataclass(frozen=True, order=True)
class IntPartition:
    """A multiset of positive integers, stored in descending order."""

    parts: tuple

    @classmethod
    def from_parts(cls, parts):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive")
        return cls(parts)

    @property
    def total(self):
        return sum(self.parts)

    def __str__(self):
        return "".join(map(str, self.parts)) if all(p < 10 for p in self.parts) else \
            "+".join(map(str, self.parts))
