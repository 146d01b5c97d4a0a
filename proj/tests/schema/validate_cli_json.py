#!/usr/bin/env python3
"""Runs the CLI in JSON mode and validates every document against its schema."""

import copy
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

CASES = [
    ("verify", ["verify", "--all"], 1),
    ("verify", ["verify", "--id", "thm1", "--id", "eq36", "--digits", "30"], 1),
    ("verify", ["verify", "--all", "--numeric-only", "--digits", "40"], 1),
    ("verify", ["--precision-cap", "64", "verify", "--id", "thm1"], 3),
    ("decompose", ["decompose", "1/(n(2n-1)(4n-3))"], 0),
    ("decompose", ["decompose", "1/n"], 0),
    ("closed-form", ["closed-form", "1/(n^2(n+1)^2)"], 0),
    ("closed-form", ["closed-form", "1/(n(5n-1))", "--digits", "20"], 0),
    ("eval", ["eval", "1/((2n-1)^2)", "--digits", "60"], 0),
    ("bench", ["bench"], 0),
    ("selftest", ["selftest", "--cases", "200"], 0),
    ("registry", ["export-registry"], 0),
]


def load_schemas(directory):
    schemas = {}
    for name in os.listdir(directory):
        if name.endswith(".schema.json"):
            with open(os.path.join(directory, name), encoding="utf-8") as f:
                schema = json.load(f)
            jsonschema.Draft202012Validator.check_schema(schema)
            schemas[name[: -len(".schema.json")]] = jsonschema.Draft202012Validator(schema)
    return schemas


def run(binary, args):
    proc = subprocess.run([binary, "--format", "json", *args], capture_output=True, text=True, check=False)
    return proc.returncode, proc.stdout, proc.stderr


def main():
    binary, schema_dir = sys.argv[1], sys.argv[2]
    schemas = load_schemas(schema_dir)
    failures = 0

    def fail(message):
        nonlocal failures
        failures += 1
        print("FAIL", message)

    documents = {}
    for kind, args, expected_code in CASES:
        code, out, err = run(binary, args)
        label = " ".join(args)
        if code != expected_code:
            fail(f"{label}: exit {code}, expected {expected_code}: {err.strip()}")
            continue
        try:
            doc = json.loads(out)
        except json.JSONDecodeError as e:
            fail(f"{label}: not JSON: {e}")
            continue
        errors = sorted(schemas[kind].iter_errors(doc), key=lambda e: list(e.path))
        for e in errors[:5]:
            fail(f"{label}: {'/'.join(map(str, e.path))}: {e.message}")
        if not errors:
            print("ok  ", label)
        documents.setdefault(kind, doc)

    # The schemas must reject malformed documents, not just accept anything.
    bad = copy.deepcopy(documents["verify"])
    bad["entries"][0]["verdict"] = "probably"
    if schemas["verify"].is_valid(bad):
        fail("verify schema accepted an unknown verdict")
    bad = copy.deepcopy(documents["decompose"])
    del bad["terms"]
    if schemas["decompose"].is_valid(bad):
        fail("decompose schema accepted a document without terms")

    # An exported registry read back gives the same audit.
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
        json.dump(documents["registry"], f)
        path = f.name
    try:
        _, a, _ = run(binary, ["verify", "--all", "--registry", path])
        _, b, _ = run(binary, ["verify", "--all"])
        if a != b:
            fail("audit of the exported registry differs from the built-in one")
        else:
            print("ok   export-registry round trip")
    finally:
        os.unlink(path)

    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
