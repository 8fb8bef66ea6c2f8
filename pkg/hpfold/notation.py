"""
Expansion of the compact exponent notation used for words and move strings,
e.g. "(011)^3 1^10" or "urdrdldrr u^4 l^4 dd".
"""
from typing import List, Tuple

from hpfold.errors import InputError


def expand(text: str, alphabet: str) -> str:
    """
    Expand symbols, parenthesised groups and "^n" repetition into a flat string.

    Whitespace separates tokens, so "0^5 1" is five zeros then a one.

    Args:
        text: notation to expand
        alphabet: the symbols allowed outside of the notation itself

    Returns:
        The flat string over the alphabet
    """
    result, pos = _parse_sequence(text, 0, alphabet)
    if pos != len(text):
        raise InputError(f"Unbalanced ')' at position {pos} in {text!r}")
    return result


def _parse_sequence(text: str, pos: int, alphabet: str) -> Tuple[str, int]:
    parts: List[str] = []
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == ")":
            break
        if ch == "(":
            inner, pos = _parse_sequence(text, pos + 1, alphabet)
            if pos >= len(text) or text[pos] != ")":
                raise InputError(f"Missing ')' in {text!r}")
            pos += 1
            unit = inner
        elif ch == "^":
            raise InputError(f"Malformed exponent at position {pos} in {text!r}")
        elif ch in alphabet:
            unit = ch
            pos += 1
        else:
            raise InputError(f"Unknown symbol {ch!r} (alphabet {alphabet!r})")

        if pos < len(text) and text[pos] == "^":
            start = pos + 1
            end = start
            while end < len(text) and text[end].isdigit():
                end += 1
            if end == start:
                raise InputError(f"Malformed exponent at position {pos} in {text!r}")
            unit = unit * int(text[start:end])
            pos = end
        parts.append(unit)
    return "".join(parts), pos


def compress(flat: str, min_run: int = 3) -> str:
    """Run-length compress a flat string into "x^n" tokens for runs of min_run or more"""
    out: List[str] = []
    i = 0
    while i < len(flat):
        j = i
        while j < len(flat) and flat[j] == flat[i]:
            j += 1
        run = j - i
        out.append(f"{flat[i]}^{run}" if run >= min_run else flat[i] * run)
        i = j
    return " ".join(out) if any("^" in token for token in out) else "".join(out)
