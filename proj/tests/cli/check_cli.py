"""End-to-end checks of the ulamcodes command line: usage: check_cli.py BINARY SCHEMA"""

import json
import os
import random
import subprocess
import sys
import tempfile

import jsonschema

BIN, SCHEMA = sys.argv[1], sys.argv[2]
with open(SCHEMA) as f:
    VALIDATOR = jsonschema.Draft202012Validator(json.load(f))
failures = []


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True)


def run_json(*args):
    p = run("--format", "json", *args)
    check(p.returncode == 0, f"exit {p.returncode} for {args}: {p.stderr.strip()}")
    doc = json.loads(p.stdout)
    errors = list(VALIDATOR.iter_errors(doc))
    check(not errors, f"schema violation for {args}: {errors[:1]}")
    return doc


def check(cond, what):
    if not cond:
        failures.append(what)


def body(text):
    return [line for line in text.splitlines() if not line.startswith("#")]


def lcs(a, b):
    t = [[0] * (len(b) + 1) for _ in range(len(a) + 1)]
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            t[i + 1][j + 1] = t[i][j] + 1 if x == y else max(t[i][j + 1], t[i + 1][j])
    return t[-1][-1]


# distance
check(run_json("distance", "1 2 3", "3 2 1")["result"]["distance"] == 2, "distance reversal")
check(run_json("distance", "1 2 3", "1 2 3")["result"]["distance"] == 0, "distance identity")
rng = random.Random(5)
for _ in range(20):
    a, b = list(range(1, 6)), list(range(1, 6))
    rng.shuffle(a)
    rng.shuffle(b)
    r = run_json("distance", " ".join(map(str, a)), " ".join(map(str, b)))["result"]
    check(r["distance"] == 5 - lcs(a, b), f"distance {a} {b}")

# bounds
r = run_json("bounds", "--n", "5", "--d", "3", "--with-ip")["result"]
check(r["singleton_upper"] == 6 and r["ip_upper"] == 5, "bounds (5,3)")
r = run_json("bounds", "--n", "6", "--d", "3")["result"]
check(r["gv_lower"] == 2 and r["singleton_upper"] == 24, "bounds (6,3)")
r = run_json("bounds", "--n", "4", "--d", "1", "--with-sphere")["result"]
check(r["best_lower"] == 24 and r["best_upper"] == 24, "bounds (4,1)")
r = run_json("bounds", "--n", "30", "--d", "5")["result"]
check(r["singleton_upper"] == "403291461126605635584000000", "bounds beyond 64 bits")

# search, verify, code files
with tempfile.TemporaryDirectory() as tmp:
    code = os.path.join(tmp, "code.txt")
    r = run_json("search", "--n", "5", "--d", "3", "--code-out", code)["result"]
    check(r["size"] == 4 and r["optimality"] == "proven_maximum", "search (5,3)")
    check(run_json("verify", code)["result"]["min_distance"] >= 3, "verify found code")
    bad = os.path.join(tmp, "bad.txt")
    with open(bad, "w") as f:
        f.write("5 3\n1 2 3 4 5\n2 1 3 4 5\n")
    p = run("verify", bad)
    check(p.returncode == 3, f"verify violation exit {p.returncode}")
    check("1 2 3 4 5" in p.stderr and "2 1 3 4 5" in p.stderr, "violation names the pair")
    with open(bad, "w") as f:
        f.write("5 3\n1 2 3 4 5\n1 2 x 4 5\n")
    p = run("verify", bad)
    check(p.returncode == 1 and "line 3" in p.stderr, f"parse error exit {p.returncode}: {p.stderr}")

    out = os.path.join(tmp, "clt.txt")
    p = run("--seed", "2", "--samples", "50", "--out", out, "clt", "--n", "30")
    check(p.returncode == 0 and p.stdout == "", "clt --out")
    with open(out) as f:
        values = [float(v) for v in body(f.read())]
    check(len(values) == 50, "clt writes one value per line")

r = run_json("search", "--n", "6", "--d", "3", "--singleton")["result"]
check(r["verdict"] == "yes" and len(r["code"]) == 24, "singleton (6,3)")
doc = run_json("--max-nodes", "1000", "search", "--n", "7", "--d", "4")
check(doc["status"] == "bounded" and doc["result"]["optimality"] == "lower_bound_only", "bounded search exits 0")

# tables
cells = {(c["n"], c["d"]): c for c in run_json("tables", "--n", "4..6")["result"]["cells"]}
want = {(4, 2): (6, "yes"), (4, 3): (2, "yes"), (5, 2): (24, "yes"), (5, 3): (4, "no"), (5, 4): (2, "yes"),
        (6, 2): (120, "yes"), (6, 3): (24, "yes"), (6, 4): (4, "no"), (6, 5): (2, "yes")}
for nd, (value, verdict) in want.items():
    c = cells.get(nd, {})
    check(c.get("value") == value and c.get("status") == "proven" and c.get("singleton_optimal") == verdict,
          f"tables {nd}: {c}")
p = run("--format", "csv", "tables", "--n", "4..5")
check("n,d,status,value,upper_bound,cell,singleton_optimal,method,nodes" in p.stdout, "tables csv header")

# ball, lisdist, mc, clt
check([b["size"] for b in run_json("ball", "--n", "4")["result"]["balls"]] == [1, 10, 23, 24], "ball n=4")
check(body(run("lisdist", "--n", "3").stdout) == ["1 1", "2 4", "3 1"], "lisdist n=3 text")
r = run_json("--seed", "4", "--samples", "2000", "lisdist", "--n", "6", "--sampled")["result"]
check(r["kind"] == "sampled" and sum(c["count"] for c in r["counts"]) == 2000, "lisdist sampled")
r = run_json("--seed", "1", "--samples", "1000", "mc", "--n", "7", "--k", "1")["result"]
check(r["estimate"] == 1.0, "mc k=1")
check(set(run_json("--seed", "1", "--samples", "10", "clt", "--n", "1")["result"]["values"]) == {-1.0}, "clt n=1")

# determinism modulo elapsed time
for args in (["--seed", "9", "--samples", "5000", "mc", "--n", "6", "--k", "4"],
             ["--seed", "9", "--samples", "300", "--threads", "3", "clt", "--n", "40"],
             ["search", "--n", "6", "--d", "4"], ["bounds", "--n", "5", "--d", "3", "--with-ip", "--with-sphere"]):
    a, b = run_json(*args), run_json(*args)
    a.pop("elapsed_seconds")
    b.pop("elapsed_seconds")
    check(json.dumps(a) == json.dumps(b), f"nondeterministic output for {args}")
one = run_json("--seed", "9", "--samples", "5000", "--threads", "1", "mc", "--n", "6", "--k", "4")["result"]
four = run_json("--seed", "9", "--samples", "5000", "--threads", "4", "mc", "--n", "6", "--k", "4")["result"]
check(one == four, "mc thread invariance")

# export-lp
p = run("export-lp", "--n", "5", "--d", "3")
check(p.returncode == 0 and " sub_a1_l0: 6 x_1_1 + 3 x_2_1 + x_3_1 <= 12" in p.stdout, "export-lp rows")
check(sum(line.rstrip().endswith("<= 12") for line in p.stdout.splitlines()) == 15, "export-lp RHS 12 rows")

# exit codes and strict mode
check(run("bounds", "--n", "5").returncode == 1, "missing flag exit 1")
check(run("bounds", "--n", "5", "--d", "7").returncode == 1, "invalid params exit 1")
check(run("distance", "1 2 2", "1 2 3").returncode == 1, "bijection error exit 1")
check(run("lisdist", "--n", "12").returncode == 2, "capacity exit 2")
check(run("search", "--n", "11", "--d", "4").returncode == 2, "search capacity exit 2")
check(run("--strict", "mc", "--n", "5", "--k", "3").returncode == 1, "strict without seed")
check(run("--strict", "--seed", "1", "mc", "--n", "5", "--k", "3").returncode == 0, "strict with seed")
check(run("--strict", "bounds", "--n", "5", "--d", "3").returncode == 0, "strict deterministic command")
p = run("--seed", "3", "mc", "--n", "5", "--k", "3")
check(p.stdout.startswith("# ulamcodes ") and "seed 3" in p.stdout, "text header")

for f in failures:
    print("FAIL:", f)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
