# %% [markdown]
# # Certificates as files
#
# A result serializes to JSON.  Verification rebuilds every ratio and bound
# from the stored points and curves, so a tampered file is caught.

# %%
import copy
import json
import tempfile
from pathlib import Path

from seshadri_config import catalog as cat
from seshadri_config.io import load_arrangement, save_arrangement
from seshadri_config.seshadri import compute_seshadri, verify_certificate

tmp = Path(tempfile.mkdtemp())
save_arrangement(cat.hesse_conics(), tmp / "hesse.json")
G = load_arrangement(tmp / "hesse.json")
data = json.loads(json.dumps(compute_seshadri(G).to_json()))
(tmp / "cert.json").write_text(json.dumps(data, indent=1))
print("stored:", verify_certificate(data))

# %%
bad = copy.deepcopy(data)
bad["lower"]["factors"][0]["curve"]["terms"][0]["coeff"][0] = "2"
print("tampered:", verify_certificate(bad))
