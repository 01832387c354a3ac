from __future__ import annotations

import heapq
from dataclasses import dataclass, field


@dataclass(slots=True)
class IndexWorklist:
    """Set of eligible indices over ``range(capacity)`` that pops its smallest member.

    Membership lives in a byte per index; the heap may hold stale entries for
    discarded indices, which ``pop`` skips.
    """

    capacity: int
    _heap: list[int] = field(default_factory=list, init=False, repr=False)
    _member: bytearray = field(init=False, repr=False)
    _size: int = field(default=0, init=False)

    def __post_init__(self) -> None:
        self._member = bytearray(self.capacity)

    def __len__(self) -> int:
        return self._size

    def __bool__(self) -> bool:
        return self._size > 0

    def __contains__(self, index: int) -> bool:
        return bool(self._member[index])

    def push(self, index: int) -> None:
        """Mark ``index`` eligible; no-op when already present."""
        if self._member[index]:
            return
        self._member[index] = 1
        self._size += 1
        heapq.heappush(self._heap, index)

    def discard(self, index: int) -> None:
        if not self._member[index]:
            return
        self._member[index] = 0
        self._size -= 1

    def pop(self) -> int:
        """Remove and return the lowest eligible index."""
        if not self._size:
            raise IndexError("pop from an empty worklist")
        while True:
            index = heapq.heappop(self._heap)
            if self._member[index]:
                self.discard(index)
                return index
