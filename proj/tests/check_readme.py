#!/usr/bin/env python3
# Copyright 2026 The lrmlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs the console examples in README.md and compares their stdout."""

import json
import math
import re
import shlex
import subprocess
import sys


def blocks(text):
    for match in re.finditer(r"```console\n(.*?)```", text, re.S):
        lines = match.group(1).splitlines()
        if not lines or not lines[0].startswith("$ "):
            continue
        yield lines[0][2:], "\n".join(lines[1:])


def same(a, b):
    if isinstance(a, float) or isinstance(b, float):
        return isinstance(a, (int, float)) and isinstance(b, (int, float)) and math.isclose(
            a, b, rel_tol=1e-9, abs_tol=1e-12)
    if isinstance(a, dict) and isinstance(b, dict):
        return a.keys() == b.keys() and all(same(a[k], b[k]) for k in a)
    if isinstance(a, list) and isinstance(b, list):
        return len(a) == len(b) and all(same(x, y) for x, y in zip(a, b))
    return a == b


def main():
    binary, readme = sys.argv[1], sys.argv[2]
    with open(readme, encoding="utf-8") as f:
        examples = list(blocks(f.read()))
    if not examples:
        print("no console examples found")
        return 1
    failures = 0
    for command, expected in examples:
        args = shlex.split(command)
        assert args[0] == "lrmlab"
        run = subprocess.run([binary] + args[1:], capture_output=True, text=True, check=False)
        try:
            ok = run.returncode == 0 and same(json.loads(run.stdout), json.loads(expected))
        except json.JSONDecodeError:
            ok = run.returncode == 0 and run.stdout.strip() == expected.strip()
        print(("ok    " if ok else "FAIL  ") + command)
        if not ok:
            failures += 1
            print(run.stdout + run.stderr)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
