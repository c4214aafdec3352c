# %% [markdown]
# # Stars, quasi-pencils and the (6_5, 6_5) conics
#
# A d-star has only double points.  Its components realize the constant.

# %%
from seshadri_config import catalog as cat
from seshadri_config.arrangement import epsilon_config, format_tvector
from seshadri_config.seshadri import compute_seshadri, naive_equality_probe

for d in (1, 2):
    for k in (3, 4, 5):
        G = cat.star(d, k)
        r = compute_seshadri(G)
        print(f"star({d},{k}): t={format_tvector(G.t)}  eps_C={epsilon_config(G)}  eps={r.exact}")

# %% [markdown]
# Pencils with a few extra lines: the configurational value overshoots.

# %%
for G in (cat.quasi_pencil(5), cat.hl(6)):
    r = compute_seshadri(G)
    p = naive_equality_probe(G, r)
    print(f"{G.name}: t={format_tvector(G.t)}  eps_C={epsilon_config(G)}  eps={r.exact}  bs={p['bs']}")

# %% [markdown]
# Six points in general position and the six conics through five of them.

# %%
G = cat.pc65()
r = compute_seshadri(G)
print("points:", [str(p) for p in G.singular_points])
print(f"eps_C={epsilon_config(G)}  eps={r.exact}  Bezout bound {r.certificate.bezout_bound}")
