"""Braid words, the left canonical form, and exact group arithmetic.

Braids on n strands are written as words over the generators s1 .. s(n-1)
and their inverses S1 .. S(n-1). Words are only spellings: the group element
behind a word is its unique left canonical form, a power of the fundamental
half twist followed by left-weighted permutation factors. Equality of braids
is equality of those forms.
"""

import braidauth as ba

n = 4

# The two defining relations, seen through the canonical form.
lhs = ba.normalize(ba.word(n, "s1 s2 s1"))
rhs = ba.normalize(ba.word(n, "s2 s1 s2"))
print("s1 s2 s1 == s2 s1 s2 ?", ba.equals(lhs, rhs))

far_lhs = ba.normalize(ba.word(n, "s1 s3"))
far_rhs = ba.normalize(ba.word(n, "s3 s1"))
print("s1 s3    == s3 s1    ?", ba.equals(far_lhs, far_rhs))

# A canonical form is (strand count, twist power, factor tables).
x = ba.normalize(ba.word(n, "s1 S2 s3 s1 S2"))
print("\nx =", x)
print("canonical length:", ba.canonical_length(x))
print("re-expanded word:", ba.to_braidword(x).to_text())
print("re-normalizing the expansion returns the identical form:",
      ba.normalize(ba.to_braidword(x)) == x)

# The fundamental braid: its defining word, its permutation, its square.
print("\nfundamental word on 4 strands:", ba.delta_word(n).to_text())
print("as a canonical form:", ba.delta(n))
d = ba.delta(n)
print("delta * x == tau(x) * delta ?", ba.multiply(d, x) == ba.multiply(ba.tau(x), d))
d2 = ba.power(d, 2)
print("delta^2 commutes with x ?", ba.multiply(d2, x) == ba.multiply(x, d2))

# Group laws.
print("\nx * x^-1 =", ba.multiply(x, ba.inverse(x)))
print("(x^3 equals x*x*x) ?", ba.power(x, 3) == ba.multiply(x, ba.multiply(x, x)))

# Braids are torsion free: no nontrivial element has finite order.
y = ba.normalize(ba.word(n, "s1"))
print("s1^2 trivial?", ba.power(y, 2) == ba.identity(n))
print("s1^3 trivial?", ba.power(y, 3) == ba.identity(n))

# Permutation braids: positive braids where strands cross at most once are in
# bijection with permutation tables.
table = (2, 0, 3, 1)
w = ba.permutation_to_braidword(table)
print("\npositive word for", table, "is", w.to_text())
print("round trip gives the table back:", ba.braidword_to_permutation(w) == table)
