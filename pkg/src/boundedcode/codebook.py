"""Canonical D-ary codewords from a length vector, plus encode/decode."""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Iterable, Sequence

from .model import CodingError, check_radix, kraft_sum

_DIGITS = string.digits + string.ascii_lowercase


class DecodeError(CodingError):
    pass


@dataclass(frozen=True)
class Codebook:
    """Codewords as digit tuples, aligned with the caller's symbol order."""

    codewords: tuple[tuple[int, ...], ...]
    radix: int

    @property
    def lengths(self) -> list[int]:
        return [len(c) for c in self.codewords]

    def strings(self) -> list[str]:
        return [format_codeword(c, self.radix) for c in self.codewords]

    @classmethod
    def from_strings(cls, words: Iterable[str], radix: int) -> "Codebook":
        return cls(tuple(parse_codeword(w, radix) for w in words), radix)


def format_codeword(word: Sequence[int], radix: int) -> str:
    """One character per digit for radix <= 36, else dot-separated decimals."""
    if radix <= len(_DIGITS):
        return "".join(_DIGITS[d] for d in word)
    return ".".join(str(d) for d in word)


def parse_codeword(text: str, radix: int) -> tuple[int, ...]:
    if radix > len(_DIGITS):
        digits = tuple(int(t) for t in text.split(".")) if text else ()
    else:
        digits = tuple(_DIGITS.index(ch) if ch in _DIGITS else -1 for ch in text.lower())
    if any(not 0 <= d < radix for d in digits):
        raise CodingError(f"codeword {text!r} has a digit outside base {radix}")
    return digits


def assign_canonical(lengths: Sequence[int], radix: int) -> Codebook:
    """Canonical code: shortest first, consecutive base-D values within a length.

    Symbols are numbered in (length, index) order; each codeword is the
    previous one plus one, padded with zeros to its own length.
    """
    check_radix(radix)
    if kraft_sum(lengths, radix) > 1:
        raise CodingError("lengths violate the Kraft inequality")
    order = sorted(range(len(lengths)), key=lambda i: (lengths[i], i))
    words: list[tuple[int, ...]] = [()] * len(lengths)
    value, prev = 0, None
    for i in order:
        l = lengths[i]
        if prev is not None:
            value = (value + 1) * radix ** (l - prev)
        prev = l
        words[i] = _to_digits(value, l, radix)
    return Codebook(tuple(words), radix)


def _to_digits(value: int, length: int, radix: int) -> tuple[int, ...]:
    out = [0] * length
    for k in range(length - 1, -1, -1):
        value, out[k] = divmod(value, radix)
    assert value == 0
    return tuple(out)


def encode(symbols: Iterable[int], book: Codebook) -> list[int]:
    """Concatenate the codewords of 0-based ``symbols``."""
    out: list[int] = []
    words = book.codewords
    for s in symbols:
        if not 0 <= s < len(words):
            raise CodingError(f"symbol {s} not in codebook")
        out.extend(words[s])
    return out


def _trie(book: Codebook) -> dict:
    root: dict = {}
    for sym, word in enumerate(book.codewords):
        node = root
        for d in word:
            node = node.setdefault(d, {})
            if "sym" in node:
                raise CodingError("codebook is not prefix-free")
        if node:
            raise CodingError("codebook is not prefix-free")
        node["sym"] = sym
    return root


def decode(stream: Iterable[int] | str, book: Codebook) -> list[int]:
    """Inverse of :func:`encode`.  Raises :class:`DecodeError` on a digit
    that leads nowhere or a partial codeword at the end.

    A one-symbol book has the empty codeword, so every message encodes to
    the empty stream and decodes to ``[]``.
    """
    if isinstance(stream, str):
        stream = parse_codeword(stream, book.radix) if stream else ()
    root = _trie(book)
    if "sym" in root:
        # single empty codeword: nothing is ever emitted
        if any(True for _ in stream):
            raise DecodeError("stream not empty for an empty-codeword book")
        return []
    out: list[int] = []
    node = root
    for d in stream:
        node = node.get(d)
        if node is None:
            raise DecodeError(f"digit {d} does not continue any codeword")
        if "sym" in node:
            out.append(node["sym"])
            node = root
    if node is not root:
        raise DecodeError("stream ends inside a codeword")
    return out


def verify(book: Codebook, l_min: int | None = None,
           l_max: int | None = None, lengths: Sequence[int] | None = None) -> list[dict]:
    """List every violated property; empty means the codebook is valid."""
    problems: list[dict] = []
    words = book.codewords
    seen: dict[tuple[int, ...], int] = {}
    for i, w in enumerate(words):
        if w in seen:
            problems.append({"kind": "duplicate", "symbols": [seen[w], i]})
        else:
            seen[w] = i
    ranked = sorted(range(len(words)), key=lambda i: words[i])
    # in lexicographic order a prefix sorts right before its extensions
    for a in range(len(ranked)):
        wa = words[ranked[a]]
        for b in range(a + 1, len(ranked)):
            wb = words[ranked[b]]
            if wb[:len(wa)] != wa:
                break
            if wb != wa:
                problems.append({"kind": "prefix", "symbols": [ranked[a], ranked[b]]})
    k = kraft_sum([len(w) for w in words], book.radix)
    if k > 1:
        problems.append({"kind": "kraft", "value": f"{k.numerator}/{k.denominator}"})
    for i, w in enumerate(words):
        if l_min is not None and len(w) < l_min or l_max is not None and len(w) > l_max:
            problems.append({"kind": "bounds", "symbol": i, "length": len(w)})
        if lengths is not None and i < len(lengths) and lengths[i] != len(w):
            problems.append({"kind": "length", "symbol": i, "length": len(w),
                             "expected": lengths[i]})
    if lengths is not None and len(lengths) != len(words):
        problems.append({"kind": "count", "codewords": len(words), "lengths": len(lengths)})
    return problems
