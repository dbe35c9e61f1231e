#!/usr/bin/env python3
# Copyright 2026 The vnfwdm Authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Solver adapter for SCIP.

Reads an LP/MPS model written by `vnfopt build`, solves it with SCIP and
writes a solution file that `vnfopt validate` understands:

    solution status: <status>
    objective value: <value>
    <variable> <value>
    ...

Uses PySCIPOpt when importable, else the `scip` binary on PATH.
"""

import argparse
import os
import shutil
import subprocess
import sys


def solve_with_pyscipopt(model_path, solution_path, time_limit):
    import pyscipopt  # noqa: PLC0415

    model = pyscipopt.Model()
    model.hideOutput()
    model.readProblem(model_path)
    model.setParam("limits/time", time_limit)
    model.optimize()
    status = model.getStatus()
    with open(solution_path, "w", encoding="utf-8") as out:
        out.write(f"solution status: {status}\n")
        if model.getNSols() == 0:
            return 0
        sol = model.getBestSol()
        out.write(f"objective value: {model.getSolObjVal(sol)!r}\n")
        for var in model.getVars():
            out.write(f"{var.name} {model.getSolVal(sol, var)!r}\n")
    return 0


def solve_with_binary(scip, model_path, solution_path, time_limit):
    commands = [
        f"read {model_path}",
        f"set limits time {time_limit}",
        "optimize",
        f"write solution {solution_path}",
        "quit",
    ]
    args = [scip, "-q"]
    for command in commands:
        args += ["-c", command]
    return subprocess.run(args, check=False).returncode


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--model", required=True)
    parser.add_argument("--solution", required=True)
    parser.add_argument("--time-limit", type=float, default=3600.0)
    args = parser.parse_args()
    if not os.path.exists(args.model):
        print(f"model file {args.model} not found", file=sys.stderr)
        return 2
    try:
        return solve_with_pyscipopt(args.model, args.solution, args.time_limit)
    except ImportError:
        pass
    scip = shutil.which("scip")
    if scip is None:
        print("neither PySCIPOpt nor the scip binary is available", file=sys.stderr)
        return 2
    return solve_with_binary(scip, args.model, args.solution, args.time_limit)


if __name__ == "__main__":
    sys.exit(main())
