"""Runs dgb on the sample problems and validates every JSON report."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def main():
    dgb, schema_path, problems = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    schema = json.loads(schema_path.read_text())
    runs = [
        ["compute", "--input", problems / "navier_stokes.dgb", "--adaptive", "--interreduce"],
        ["compute", "--input", problems / "navier_stokes.dgb", "--truncate", "2"],
        ["compute", "--input", problems / "navier_stokes.dgb", "--pair-budget", "0"],
        ["compute", "--input", problems / "orbit_product.dgb", "--adaptive"],
        ["compute", "--input", problems / "linear_relations.dgb"],
        ["symmetric", "--gens", problems / "twisted_cubic_8cycle.dgb", "--classical"],
    ]
    failed = 0
    for args in runs:
        cmd = [dgb] + [str(a) for a in args] + ["--json"]
        proc = subprocess.run(cmd, capture_output=True, text=True)
        try:
            jsonschema.validate(json.loads(proc.stdout), schema)
            print("ok  ", " ".join(cmd[1:]))
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            failed += 1
            print("FAIL", " ".join(cmd[1:]), "\n   ", str(e).splitlines()[0])
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
