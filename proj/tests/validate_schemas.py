"""Run representative CLI commands and validate their JSON against the shipped schemas."""

import argparse
import json
import pathlib
import subprocess
import sys

import jsonschema

GROUPS = [("GL", "2", "1,0"), ("GL", "3", "1,0,0"), ("GL", "4", "1,1,0,0"), ("PGL", "3", None), ("Sp", "4", None)]

OK_COMMANDS = []
for family, rank, mu in GROUPS:
    g = ["--family", family, "--rank", rank]
    OK_COMMANDS.append(("datum", ["datum", *g]))
    OK_COMMANDS.append(("report", ["verify", "newton", *g]))
    if mu:
        OK_COMMANDS += [
            ("poly", ["poly", *g, "--mu", mu]),
            ("poly", ["poly", *g, "--mu", mu, "--twist", "classical", "--basis", "double-coset"]),
            ("eval", ["eval", *g, "--mu", mu]),
            ("eval", ["eval", *g, "--mu", mu, "--field", "ell=11,v=4", "--s", ",".join(["2"] * int(rank))]),
            ("eval", ["eval", *g, "--mu", mu, "--field", "rat:v=3", "--s", ",".join(["1/2"] * int(rank))]),
            ("report", ["verify", "ch", *g, "--mu", mu, "--field", "ell=11,v=4", "--trials", "3"]),
            ("report", ["verify", "ch", *g, "--mu", mu, "--mode", "arbitrary", "--field", "rat:v=3", "--trials", "3"]),
            ("report", ["verify", "modell", *g, "--mu", mu, "--field", "ell=7,q=2,v=3", "--trials", "3"]),
        ]
OK_COMMANDS += [
    ("report", ["verify", "satake", "--family", "GL", "--rank", "2", "--max-norm", "2"]),
    ("report", ["verify", "satake", "--family", "GL", "--rank", "3"]),
    ("report", ["verify", "inertia", "--d", "3", "--trials", "3"]),
    ("report", ["verify", "inertia", "--d", "4", "--trials", "3", "--unipotent"]),
]

ERROR_COMMANDS = [
    (["datum", "--family", "XX"], 2),
    (["poly", "--family", "GL", "--rank", "2", "--mu", "2,0"], 2),
    (["poly", "--family", "GL", "--rank", "4", "--mu", "1,1,0,0", "--basis", "double-coset", "--max-support", "5"], 3),
    (["eval", "--family", "GL", "--rank", "2", "--mu", "1,0", "--field", "ell=10,v=3", "--s", "1,1"], 2),
    (["bogus"], 2),
]


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--hecke", required=True)
    ap.add_argument("--schemas", required=True)
    args = ap.parse_args()

    schemas = {}
    for name in ["datum", "poly", "eval", "report", "error"]:
        schema = json.loads((pathlib.Path(args.schemas) / f"{name}.schema.json").read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        schemas[name] = jsonschema.Draft202012Validator(schema)

    failures = 0
    for kind, cmd in OK_COMMANDS:
        proc = subprocess.run([args.hecke, *cmd], capture_output=True, text=True)
        docs = [json.loads(line) for line in proc.stdout.splitlines() if line.strip()]
        problems = [] if proc.returncode == 0 and docs else [f"exit {proc.returncode}, {len(docs)} documents"]
        for doc in docs:
            problems += [e.message for e in schemas[kind].iter_errors(doc)]
        if problems:
            failures += 1
            print("FAIL", " ".join(cmd), "::", problems[0])
    for cmd, code in ERROR_COMMANDS:
        proc = subprocess.run([args.hecke, *cmd], capture_output=True, text=True)
        problems = [] if proc.returncode == code and not proc.stdout else [f"exit {proc.returncode}, stdout {proc.stdout!r}"]
        try:
            problems += [e.message for e in schemas["error"].iter_errors(json.loads(proc.stderr))]
        except json.JSONDecodeError as exc:
            problems.append(f"stderr is not JSON: {exc}")
        if problems:
            failures += 1
            print("FAIL", " ".join(cmd), "::", problems[0])

    total = len(OK_COMMANDS) + len(ERROR_COMMANDS)
    print(f"{total - failures}/{total} commands produced schema-valid output")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
