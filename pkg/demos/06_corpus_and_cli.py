# %% [markdown]
# # Custom corpora and the command line
#
# A manifest is a JSON list of builder specs. The same document drives the
# `partita` command.

# %%
import json
import subprocess
import sys
import tempfile
from pathlib import Path

from partita.corpus import load_manifest

doc = {"entries": [
    {"name": "F20", "kind": "semidirect", "order": 20,
     "params": {"acting": {"kind": "cyclic", "params": {"n": 4}},
                "normal": {"kind": "cyclic", "params": {"n": 5}}, "action": {"power": 2}}},
    {"name": "Z2xS3", "kind": "direct",
     "params": {"factors": [{"kind": "cyclic", "params": {"n": 2}}, {"kind": "symmetric", "params": {"n": 3}}]}},
]}
m = load_manifest(doc)
print([(e.name, e.group.order) for e in m])

# %% Run the CLI against it
path = Path(tempfile.mkdtemp()) / "mini.json"
path.write_text(json.dumps(doc))
for argv in (["catalog", "list"], ["group", "show", "F20"], ["verify", "all"]):
    r = subprocess.run([sys.executable, "-m", "partita", "--corpus", str(path), *argv],
                       capture_output=True, text=True)
    print("$ partita", " ".join(argv), f"(exit {r.returncode})")
    print(r.stdout)
