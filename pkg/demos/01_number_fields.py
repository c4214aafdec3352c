# %% [markdown]
# # Exact arithmetic in a number field
#
# Every coordinate in this package is exact.  Rationals are `Fraction`s and
# algebraic numbers live in `Q[u]/(f)` for a monic `f`.  Here `f` is a sextic.

# %%
from fractions import Fraction

from seshadri_config.field import NumberFieldSpec, make_field_context, parse_element, serialize_element

K = make_field_context(NumberFieldSpec([31, 36, 27, -4, 9, 0, 1]))
u = K.gen()
print("field degree:", K.degree)

# %% [markdown]
# Powers of `u` past the degree wrap around through the minimal polynomial.

# %%
print("u^6 =", u ** 6)
print("f(u) =", sum((u ** i * c for i, c in enumerate([31, 36, 27, -4, 9, 0, 1])), K.zero()))

# %% [markdown]
# Inverses come from the extended Euclidean algorithm on polynomials.

# %%
a = u ** 2 - Fraction(3, 7) * u + 2
b = a.inverse()
print("a =", a)
print("1/a =", b)
print("a * (1/a) =", a * b)

# %% [markdown]
# Elements serialize as JSON arrays of rational strings.

# %%
text = serialize_element(b)
print(text)
assert parse_element(text, K) == b
