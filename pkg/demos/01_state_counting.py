"""How 64 ordered codons collapse into 20 base-content classes.

Walks the two counting formulas, enumerates the classes for the
nucleotide alphabet, and checks that the class sizes partition the
full set of ordered words.
"""

from codonlab import (
    RNA_ALPHABET,
    arrangements,
    class_size,
    enumerate_multisets,
    multiset_count,
)

K, R = len(RNA_ALPHABET), 3

print(f"Alphabet: {''.join(RNA_ALPHABET)}  (k = {K}), word length r = {R}")
print(f"Ordered words   k^r        = {arrangements(K, R)}")
print(f"Content classes C(k+r-1,r) = {multiset_count(K, R)}")
print()

classes = enumerate_multisets(K, R, alphabet=RNA_ALPHABET)
print(f"The {len(classes)} classes and how many ordered words each one absorbs:")
for cls in classes:
    bag = ", ".join(f"{a}x{n}" for a, n in zip(cls.alphabet, cls.counts) if n)
    print(f"  {cls.canonical_word}  size {class_size(cls)}  ({bag})")

total = sum(class_size(c) for c in classes)
print()
print(f"Sum of class sizes: {total}  (equals k^r: {total == arrangements(K, R)})")
print()

print("The same pair of counts over a small grid:")
print("k\\r |" + "".join(f" {r:>7}" for r in range(1, 6)))
for k in range(2, 7):
    row = "".join(f" {arrangements(k, r):>3}/{multiset_count(k, r):<3}" for r in range(1, 6))
    print(f"  {k} |{row}")
print("(each cell is ordered words / content classes)")
