"""Identifier ordering and the flat text encoding of composite identifiers.

Identifiers are plain hashable values: strings for hand-written instances,
nested tuples of those for constructed ones.  Strings made of digits sort
numerically so that ``"10"`` comes after ``"9"``.
"""

from __future__ import annotations

from typing import Any, Hashable, Iterable

_RESERVED = set(" \t\n\r(),=:#>")


def order_key(x: Any) -> tuple:
    if isinstance(x, bool):
        return (0, int(x), "")
    if isinstance(x, int):
        return (0, x, "")
    if isinstance(x, str):
        if x.isdigit():
            return (0, int(x), x)
        return (1, 0, x)
    if isinstance(x, tuple):
        return (2, tuple(order_key(e) for e in x))
    if x is None:
        return (-1,)
    raise TypeError(f"unsupported identifier {x!r}")


def ordered(xs: Iterable[Hashable]) -> list:
    return sorted(xs, key=order_key)


def least(xs: Iterable[Hashable]):
    return min(xs, key=order_key)


def encode(x: Any) -> str:
    """Flatten an identifier to the token used in documents."""
    if isinstance(x, str):
        if not x or any(ch in _RESERVED for ch in x):
            raise ValueError(f"identifier {x!r} cannot be written as a token")
        return x
    if isinstance(x, bool):
        return str(int(x))
    if isinstance(x, int):
        return str(x)
    if isinstance(x, tuple):
        return "(" + ",".join(encode(e) for e in x) + ")"
    raise TypeError(f"unsupported identifier {x!r}")


def is_token(s: str) -> bool:
    """True if ``s`` is a well-formed identifier token (balanced parentheses allowed)."""
    depth = 0
    prev = "("
    for ch in s:
        if ch == "(":
            if prev not in "(,":
                return False
            depth += 1
        elif ch == ")":
            if depth == 0 or prev in "(,":
                return False
            depth -= 1
        elif ch == ",":
            if depth == 0 or prev in "(,":
                return False
        elif ch in _RESERVED:
            return False
        prev = ch
    return depth == 0 and bool(s)
