# A small sweep written as JSON Lines and CSV, then read back with the stdlib.
import json
import tempfile
from pathlib import Path

from adhc_lab.harness import run_crosscheck, run_sweep

out = Path(tempfile.mkdtemp())
rep = run_sweep(range(6, 15), [0.4, 0.7, 1.0], 20, seed=1, extremal=[("c", 3), ("b", 3)])
rep.write(out / "sweep.jsonl")
rep.write(out / "sweep.csv", fmt="csv")

lines = (out / "sweep.jsonl").read_text().splitlines()
header = json.loads(lines[0])
print("schema", header["schema_version"], "rng", header["rng"])
print(json.loads(lines[-2]))

rows = [json.loads(x) for x in lines[1:-2]]
hyp = [r for r in rows if r["hypothesis"]]
print(len(hyp), "rows meet sigma+- >= (3n+2)/4;", sum(r["adhc_verdict"] == "FOUND" for r in hyp), "have an ADHC")
for r in rows:
    if r["source"] == "extremal":
        print(r["family"], r["s"], "sigma", r["sigma_pm"], "hypothesis", r["hypothesis"])

cc = run_crosscheck(6, 100, seed=5)
print("crosscheck n=6:", len(cc.summary["mismatches"]), "mismatches", "exit", cc.exit_code)
print("csv head:", (out / "sweep.csv").read_text().splitlines()[1])
