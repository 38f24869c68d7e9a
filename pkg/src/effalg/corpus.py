# Copyright (C) 2024 Nice Zombies
"""Shipped structures with known isomorphism status."""
from __future__ import annotations

__all__: list[str] = [
    "DYADIC",
    "DYADIC_SHIFTED",
    "E0_FAMILY",
    "E0_PARTITION",
    "INTEGERS",
    "ISOMORPHIC_TYPES",
    "TRIADIC",
    "TYPES",
]

from effalg._oracles import BitStream

INTEGERS: str = ""
"""The integers: no prime divides ``1``.

>>> from effalg import DivisibilityType
>>> from effalg.corpus import INTEGERS
>>> DivisibilityType.parse(INTEGERS).entry(2)
0
"""

DYADIC: str = "2:inf"
"""The dyadic rationals ``Z[1/2]``.

>>> from effalg import DivisibilityType
>>> from effalg.corpus import DYADIC
>>> DivisibilityType.parse(DYADIC).entry(2)
inf
"""

DYADIC_SHIFTED: str = "2:inf,3:1,5:2"
"""``Z[1/2]`` scaled by ``1/75``, another presentation of :data:`DYADIC`.

>>> from effalg import DivisibilityType, iso_rank1
>>> from effalg.corpus import DYADIC, DYADIC_SHIFTED
>>> iso_rank1(
...     DivisibilityType.parse(DYADIC),
...     DivisibilityType.parse(DYADIC_SHIFTED),
...     10,
... ).status.value
'isomorphic'
"""

TRIADIC: str = "3:inf"
"""The triadic rationals ``Z[1/3]``, not isomorphic to :data:`DYADIC`."""

TYPES: dict[str, str] = {
    "integers": INTEGERS,
    "dyadic": DYADIC,
    "dyadic-shifted": DYADIC_SHIFTED,
    "triadic": TRIADIC,
}
"""Named rank-1 types, usable on the command line."""

ISOMORPHIC_TYPES: frozenset[frozenset[str]] = frozenset({
    frozenset({"dyadic", "dyadic-shifted"}),
})
"""The pairs of distinct names in :data:`TYPES` with isomorphic groups."""

E0_FAMILY: tuple[BitStream, ...] = tuple(map(BitStream.parse, (
    "0", "1", "0110", "01101(0)", "(1)", "0(1)", "(01)", "11(01)",
)))
"""Eight eventually periodic streams in three classes of eventual equality.

>>> from effalg.corpus import E0_FAMILY
>>> E0_FAMILY[0].e0_equivalent(E0_FAMILY[2])
True
"""

E0_PARTITION: tuple[tuple[int, ...], ...] = ((0, 1, 2, 3), (4, 5), (6, 7))
"""The classes of :data:`E0_FAMILY`, by index."""
