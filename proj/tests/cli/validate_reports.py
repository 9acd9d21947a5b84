"""Runs each CLI subcommand and validates its JSON output against the report schema."""

import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]

RUNS = [
    ["project", "-p", "7", "-d", "all", "--format", "json"],
    ["project", "-p", "7", "--diagonal", "-d", "inf", "--format", "json"],
    ["size", "-p", "11", "--alpha", "2", "--beta", "1"],
    ["shift-check", "-p", "13"],
    ["special-dirs", "-p", "7", "--diagonal"],
    ["charsum", "-p", "3..31"],
    ["lebesgue", "-p", "3..101"],
    ["stabilizer", "-p", "5", "--method", "brute"],
    ["stabilizer", "-p", "31"],
    ["classify", "-p", "5", "--oracle"],
    ["verify", "-p", "3..13", "--all", "--observe"],
]

with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

failed = False
for args in RUNS:
    out = subprocess.run([cli, *args], capture_output=True, text=True)
    if out.returncode not in (0, 1):
        print(f"{' '.join(args)}: exit {out.returncode}\n{out.stderr}")
        failed = True
        continue
    errors = list(validator.iter_errors(json.loads(out.stdout)))
    for e in errors:
        print(f"{' '.join(args)}: {e.json_path}: {e.message}")
    failed |= bool(errors)

sys.exit(1 if failed else 0)
