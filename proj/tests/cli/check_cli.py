"""Runs the orbicalc executable end to end: exit codes, output shape and
byte-stable batch reports."""
import json
import os
import subprocess
import sys
import tempfile

EXE = sys.argv[1]
DATA = sys.argv[2]
failures = []


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("ORBICALC_TRUNCATION", None)
    full_env.update(env or {})
    p = subprocess.run([EXE, *args], capture_output=True, text=True, env=full_env)
    return p.returncode, p.stdout


def no_numbers(doc):
    if isinstance(doc, bool) or doc is None or isinstance(doc, str):
        return True
    if isinstance(doc, (int, float)):
        return False
    items = doc.values() if isinstance(doc, dict) else doc
    return all(no_numbers(v) for v in items)


def expect(cond, what):
    if not cond:
        failures.append(what)


def check(args, code, env=None, result=None):
    rc, out = run(*args, env=env)
    expect(rc == code, f"{args}: exit {rc}, expected {code}")
    if rc in (0, 2, 3) and out:
        try:
            doc = json.loads(out)
        except json.JSONDecodeError:
            expect(False, f"{args}: output is not JSON")
            return None
        expect(no_numbers(doc), f"{args}: JSON number in output")
        if result:
            for key, value in result.items():
                expect(doc.get("result", {}).get(key) == value, f"{args}: {key} = {doc.get('result', {}).get(key)}")
        return doc
    return None


check(["pairing", "--wps", "2", "3", "5", "--degrees", "15", "15"], 0, result={"pairing": "15/2"})
check(["virtual-genus", "--wps", "2", "3", "5", "--degree", "15"], 0, result={"virtual_genus": "9/4"})
check(["adjunction-check", "--wps", "2", "3", "5", "--preset", "coordinate-line"], 0, result={"verdict": "equal"})
check(["sw-dim", "--wps", "2", "3", "5", "--degree", "2"], 0, result={"d": "0"})
check(["delta", "--m", "5", "--b", "3", "--c", "2"], 0, result={"delta": "4"})
check(["local-int", "(t^3, t^5)", "(t^3, 2*t^5)"], 0, result={"local_intersection": "15"})
check(["self-int", "--orders", "3", "5"], 0)
check(["index-dim", "--chern", "3"], 0)
check(["example111", "5"], 0)
check(["analyze", "--wps", "2", "3", "5"], 0)
check(["--trace", "analyze", "--wps", "2", "3", "7"], 0)

check(["pairing", "--wps", "2", "4", "5", "--degrees", "1", "1"], 2)
check(["delta", "--payload", '{"m": 0.5, "b": 3, "c": 2}'], 2)
check(["local-int", "(t^3, t^5)", "(t^3, t^5)"], 3)
check(["index-dim", "--chern", "1", "--point", "3", "1", "1"], 3)
check(["no-such-command"], 2)

# The environment override changes the truncation; a bad value is invalid.
check(["local-int", "(t^3, t^5)", "(t^3, 2*t^5)"], 3, env={"ORBICALC_TRUNCATION": "10"})
check(["local-int", "(t^3, t^5)", "(t^3, 2*t^5)"], 0, env={"ORBICALC_TRUNCATION": "16"})
check(["local-int", "(t^3, t^5)", "(t^3, 2*t^5)"], 2, env={"ORBICALC_TRUNCATION": "many"})

rc, _ = run("--help")
expect(rc == 0, "--help exits 0")

errors = os.path.join(DATA, "errors.json")
check(["batch", errors], 3)
check(["--file", errors], 3)

with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
    f.write('[\n  {"command": "delta",\n   "payload": {"m": 5,, "b": 3}}\n]\n')
    broken = f.name
doc = check(["batch", broken], 2)
expect(doc is not None and doc["error"].get("line") == "3", "parse error line")
os.unlink(broken)

for name in sorted(os.listdir(DATA)):
    path = os.path.join(DATA, name)
    first = run("batch", path)
    second = run("batch", path)
    expect(first == second, f"{name}: batch output differs between runs")
    expect(no_numbers(json.loads(first[1])), f"{name}: JSON number in output")

for f in failures:
    print("FAIL", f)
print(f"{'ok' if not failures else 'failed'}: {len(failures)} failures")
sys.exit(1 if failures else 0)
