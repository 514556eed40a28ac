"""End-to-end checks of the dgolod command line: exit codes, outputs, JSON schema."""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

BIN, SCHEMA = sys.argv[1], sys.argv[2]
with open(SCHEMA) as fh:
    schema = json.load(fh)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

failures = []
tmp = tempfile.mkdtemp(prefix="dgolod-cli-")


def write(name, text):
    path = os.path.join(tmp, name)
    with open(path, "w") as fh:
        fh.write(text)
    return path


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("DGOLOD_FIELD", None)
    full_env.update(env or {})
    p = subprocess.run([BIN, *args], capture_output=True, text=True, env=full_env, timeout=300)
    return p.returncode, p.stdout, p.stderr


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def run_json(*args, code, env=None):
    rc, out, err = run("--json", *args, env=env)
    expect(rc == code, f"{' '.join(args)} exits {code} (got {rc})")
    try:
        rep = json.loads(out)
    except json.JSONDecodeError as e:
        expect(False, f"{' '.join(args)} prints JSON ({e})")
        return {}
    errors = list(validator.iter_errors(rep))
    expect(not errors, f"{' '.join(args)} report validates" + (f": {errors[0].message}" if errors else ""))
    expect(rep.get("exit_code") == code, f"{' '.join(args)} report records exit code {code}")
    return rep


two_gen = write("two_gen.txt", "ring Q[x1,x2]\nx1*x2\nx2^2\n")
principal = write("principal.txt", "ring Q[x1,x2]\nx1*x2\n")
f5 = write("f5.txt", "ring F5[x,y]\nx^2+3*y^2\n")
bad = write("bad.txt", "ring Q[x]\nx+1\n")
syntax = write("syntax.txt", "ring Q[x1,x2]\nx1*x2, x2^2\n")
maximal = write("maximal.txt", "ring Q[x1,x2]\nx1\nx2\n")

# Fixtures.
rc, out, _ = run("fixtures", "--name", "paper-d-example")
expect(rc == 0, "paper-d-example exits 0")
for line in ["d^1(f) = x2^3 + x1*x3", "d^2(f) = x2*x3^3", "d^3(f) = x3*x4", "d^4(f) = 0"]:
    expect(line in out.splitlines(), f"paper-d-example prints '{line}'")
rep = run_json("fixtures", "--name", "paper-d-example", code=0)
expect(rep.get("results", {}).get("d") == ["x2^3 + x1*x3", "x2*x3^3", "x3*x4", "0"], "paper-d-example JSON values")

rc, out, _ = run("fixtures", "--name", "stretched:3,3,art")
expect(rc == 0, "stretched fixture exits 0")
stretched = write("stretched.txt", out)
rc, out, _ = run("check", stretched, "--mode", "d-sigma", "--perm", "3,1,2")
expect(rc == 0, "check --mode d-sigma --perm 3,1,2 on stretched n=3,s=3 exits 0")
expect("d_sigma-Golod: yes" in out, "stretched fixture is d_sigma-Golod")
run_json("fixtures", "--name", "stretched:4,2,open", code=0)
run_json("fixtures", "--name", "paper-ideal", code=0)
rep = run_json("fixtures", "--name", "sum-family:2,2:x1|x2", code=0)
expect(rep.get("results", {}).get("d_golod") is True, "sum-family power is d-Golod")
run_json("fixtures", "--name", "nosuch", code=2)
rep = run_json("fixtures", "--name", "paper-ideal", code=0, env={"DGOLOD_FIELD": "F7"})
expect(rep.get("results", {}).get("ideal_file", "").startswith("ring F7["), "DGOLOD_FIELD sets the fixture field")
rep = run_json("fixtures", "--name", "paper-ideal", code=0, env={"DGOLOD_THREADS": "3"})
expect(rep.get("threads") == 3, "DGOLOD_THREADS is echoed")

# Checks on (x1x2, x2^2).
rc, out, _ = run("check", two_gen, "--mode", "d")
expect(rc == 0, "(x1x2, x2^2) is d-Golod")
rc, out, _ = run("check", two_gen, "--mode", "strong")
expect(rc == 1 and "x1^2 not in I" in out, "(x1x2, x2^2) is not strongly d-Golod, witness x1^2")
rc, out, _ = run("check", two_gen, "--mode", "d-sigma", "--perm", "2,1")
expect(rc == 1, "(x1x2, x2^2) is not d_sigma-Golod for the transposition")
rc, _, _ = run("check", two_gen, "--mode", "d-sigma")
expect(rc == 2, "d-sigma without a permutation is a usage error")
for perm in ["1,2", "2,1"]:
    rc, _, _ = run("check", principal, "--mode", "d-sigma", "--perm", perm)
    expect(rc == 1, f"(x1x2) is not d_sigma-Golod for sigma = {perm}")
rep = run_json("check", two_gen, "--mode", "strong", code=1)
expect(rep.get("results", {}).get("violation", {}).get("product") == "x1^2", "JSON witness is x1^2")
expect(all(c["passed"] for c in rep.get("checks", [])), "certificate re-check passes")
rep = run_json("d-ideal", two_gen, "--perm", "2,1", code=0)
expect(rep.get("results", {}).get("generators") == ["x1", "x2"], "d_sigma(I) = (x1, x2)")
rep = run_json("d-ideal", two_gen, code=0)
expect(rep.get("results", {}).get("generators") == ["x2"], "d(I) = (x2)")

# Parsing.
rep = run_json("d-ideal", bad, code=2)
err = rep.get("error", {})
expect(err.get("kind") == "parse" and "constant term" in err.get("message", ""), "x+1 is rejected for its constant term")
expect(err.get("line") == 2, "constant-term error reports line 2")
rep = run_json("d-ideal", syntax, code=2)
expect(rep.get("error", {}).get("line") == 2 and rep.get("error", {}).get("column") == 6, "syntax error position")
rc, out, _ = run("d-ideal", f5)
expect(rc == 0 and "3*y" in out, "F5 ideal parses")
rc, _, _ = run("d-ideal", os.path.join(tmp, "missing.txt"))
expect(rc == 2, "missing file exits 2")
rc, _, _ = run("frobnicate")
expect(rc == 2, "unknown command exits 2")
rc, _, _ = run("check", two_gen)
expect(rc == 2, "missing --mode exits 2")

# Resolutions and Koszul cycles.
rep = run_json("betti", two_gen, "--print-complex", code=0)
expect(rep.get("results", {}).get("betti") == [1, 2, 1], "betti numbers of (x1x2, x2^2)")
run_json("betti", f5, code=3)
rep = run_json("koszul-cycles", two_gen, code=0)
texts = [c["text"] for c in rep.get("results", {}).get("cycles", [])]
expect(texts == ["z[1][1] = x2 dx1", "z[1][2] = x2 dx2", "z[2][1] = x2 dx1dx2"], "cycles of (x1x2, x2^2)")
run_json("koszul-cycles", two_gen, "--i", "2", code=0)
run_json("koszul-cycles", two_gen, "--i", "5", code=2)
for what in ["chain", "basis", "zero-map"]:
    run_json("verify", two_gen, "--what", what, code=0)
run_json("verify", two_gen, "--what", "zero-map", "--perm", "2,1", code=0)
run_json("verify", principal, "--what", "zero-map", "--perm", "2,1", code=0)
cplx = write("two_gen.cplx", "complex\nranks: 1 2 1\ndiff 1:\nx1*x2, x2^2\ndiff 2:\nx2\n-x1\n")
run_json("verify", two_gen, "--what", "basis", "--complex", cplx, code=0)
ci = write("ci.txt", "ring Q[x,y]\nx^2+y^2\nx*y\n")
ci_cplx = write("ci.cplx", "complex\nranks: 1 2 1\ndiff 1:\nx^2+y^2, x*y\ndiff 2:\nx*y\n-x^2-y^2\n")
run_json("verify", ci, "--what", "basis", "--complex", ci_cplx, code=0)
run_json("koszul-cycles", ci, "--complex", ci_cplx, code=0)
run_json("koszul-cycles", ci, code=3)

# Poincare series.
rep = run_json("poincare", stretched, "--trunc", "5", "--serre", "--golod-eq", "--profile", code=0)
res = rep.get("results", {})
expect(res.get("series") == [1, 3, 9, 27, 81, 243], "P_K of the stretched fixture")
expect(res.get("profile", {}).get("tau") == 3 and res.get("profile", {}).get("stretched") is True, "profile")
rep = run_json("poincare", ci, "--trunc", "4", "--golod-eq", code=1)
expect(rep.get("results", {}).get("golod_equality", {}).get("equal") is False, "complete intersection is not Golod")

# Monomial operations.
for op in ["power", "symbolic", "saturate", "closure", "decompose", "primes"]:
    run_json("ops", two_gen, "--op", op, "--k", "2", code=0)
for op in ["colon", "intersect", "sum", "product"]:
    run_json("ops", two_gen, "--op", op, "--with", maximal, code=0)
rep = run_json("ops", two_gen, "--op", "saturate", code=0)
expect(rep.get("results", {}).get("result") == ["x2"], "saturation of (x1x2, x2^2) by m is (x2)")
run_json("ops", two_gen, "--op", "colon", code=2)
run_json("ops", f5, "--op", "power", code=3)

# Global options after the subcommand, and the suite runner.
rc, out, _ = run("d-ideal", two_gen, "--json", "--field", "F3")
expect(rc == 0 and json.loads(out)["inputs"]["ideal_file"].startswith("ring F3["), "global options after the command")
a = run_json("suite", "--name", "product-rule", "--seed", "11", code=0)
b = run_json("suite", "--name", "product-rule", "--seed", "11", code=0)
expect(a.get("results") == b.get("results"), "same seed gives identical suite results")
run_json("suite", "--name", "3", code=0)
run_json("suite", "--name", "nosuch", code=2)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
