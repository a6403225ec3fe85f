from dataclasses import dataclass


@dataclass
class OpCounters:
    """Running tally of integer additions and doublings performed by a kernel.

    A doubling is a multiplication by +-2 (including the ``2**i - 2*c`` update,
    whose constant offset is not counted as a separate sum).
    """

    sums: int = 0
    doublings: int = 0

    def reset(self) -> None:
        self.sums = 0
        self.doublings = 0
