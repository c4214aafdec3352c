# %% [markdown]
# # Simplicial line arrangements
#
# Only t-vectors are shipped, so the configurational constant and the
# combinatorial inequalities are all that can be checked.  A1(6) also ships
# with coordinates, and its Seshadri constant is certified.

# %%
from seshadri_config import catalog as cat
from seshadri_config.arrangement import (epsilon_config, f_numbers, format_tvector, hirzebruch_check,
                                         theorem_lower_bound, validate_combinatorics)
from seshadri_config.seshadri import compute_seshadri

print(f"{'name':<8}{'t':<16}{'f0,f1':<10}{'eps_C':<8}{'bound':<7}hirzebruch")
for name, _, _ in cat.SIMPLICIAL_TABLE:
    A = cat.simplicial(name)
    assert validate_combinatorics(A).passed
    f0, f1 = f_numbers(A)
    h = hirzebruch_check(A)
    print(f"{name:<8}{format_tvector(A.t):<16}{f'{f0},{f1}':<10}{str(epsilon_config(A)):<8}"
          f"{str(theorem_lower_bound(A)):<7}{h.status} {' '.join(h.messages)}")

# %%
r = compute_seshadri(cat.simplicial("A1(6)", geometric=True))
print("A1(6) certified eps =", r.exact, "via", r.certificate.kind)
