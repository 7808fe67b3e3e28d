"""Canonical codewords, encoding, decoding and verification."""

from boundedcode import (
    CodingProblem, assign_canonical, decode, encode, solve, verify,
)

text = "abracadabra alakazam"
alphabet = sorted(set(text))
counts = [text.count(ch) for ch in alphabet]
r = solve(CodingProblem.create(counts, radix=3, l_max=3))
book = assign_canonical(r.lengths, 3)
for ch, word in zip(alphabet, book.strings()):
    print(repr(ch), word)

message = [alphabet.index(ch) for ch in text]
stream = encode(message, book)
print("encoded", len(text), "symbols in", len(stream), "ternary digits")
assert "".join(alphabet[i] for i in decode(stream, book)) == text

print("violations:", verify(book, l_max=3, lengths=r.lengths))
broken = book.from_strings(["0", "01", "2"], 3)
print("a broken book:", verify(broken))
