# Copyright (C) 2024 Nice Zombies
"""Built-in operational signatures."""
from __future__ import annotations

__all__: list[str] = ["FIELD", "GROUP"]

from effalg._diagrams import Signature, Symbol

GROUP: Signature = Signature("group", (
    Symbol("e", 0), Symbol("+", 2), Symbol("-", 1),
))
"""Abelian groups: identity ``e``, addition ``+`` and negation ``-``.

>>> from effalg.signatures import GROUP
>>> [(symbol.name, symbol.kind) for symbol in GROUP.symbols]
[('e', 'constant'), ('+', 'operation'), ('-', 'operation')]
"""

FIELD: Signature = Signature("field", (
    Symbol("0", 0), Symbol("1", 0), Symbol("+", 2), Symbol("-", 2),
    Symbol("*", 2),
))
"""Fields: constants ``0`` and ``1``, binary ``+``, ``-`` and ``*``.

>>> from effalg.signatures import FIELD
>>> FIELD.arity("-")
2
"""
