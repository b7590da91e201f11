"""Runs the CLI on bundled fixtures and validates each JSON report against the schema."""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

cli, schema_path, fixtures = sys.argv[1:4]
with open(schema_path) as f:
    schema = json.load(f)

runs = [("password", []), ("multi_client", []), ("pumping", []),
        ("pumping", ["--repair", "aggressive"]), ("password", ["--max-iters", "1"])]
with tempfile.TemporaryDirectory() as tmp:
    for i, (name, extra) in enumerate(runs):
        out = os.path.join(tmp, f"r{i}.json")
        d = os.path.join(fixtures, name)
        cmd = [cli, "verify", "--quiet", "--m1", f"{d}/m1.agr", "--m2", f"{d}/m2.agr",
               "--prop", f"{d}/prop.agr", "--json", out] + extra
        rc = subprocess.run(cmd).returncode
        if rc not in (0, 1, 2):
            sys.exit(f"{name}: exit {rc}")
        with open(out) as f:
            jsonschema.validate(json.load(f), schema)
        print(f"{name} {' '.join(extra)}: valid")
