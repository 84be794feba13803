#!/usr/bin/env python3
#
# Copyright 2026 The quasifs Authors
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

"""Derives data/broken from data/corpus: one corrupted axiom per bundle.

expected.json maps each file to the axiom `quasifs validate --strict` must
name. usage: make_broken.py DATA_DIR
"""

import json
import sys
from pathlib import Path


def dump(value, indent=0):
    pad, inner = " " * indent, " " * (indent + 2)
    if isinstance(value, dict):
        items = [f"{inner}{json.dumps(k)}: {dump(v, indent + 2)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    flat = json.dumps(value)
    if isinstance(value, list) and len(flat) > 100 and any(isinstance(x, (list, dict)) for x in value):
        return "[\n" + ",\n".join(inner + dump(x, indent + 2) for x in value) + "\n" + pad + "]"
    return flat


def set_entry(entries, index, coeff):
    """Overwrites (or appends) the sparse entry at the given index tuple."""
    for e in entries:
        if e[:-1] == list(index):
            e[-1] = coeff
            return
    entries.append(list(index) + [coeff])


def counit(b):
    b["algebra"]["counit"][1] = "2"


def comult(b):
    # Delta(e_1) = e_1 (x) e_1 becomes e_1 (x) e_2 in k[Z/4]
    b["algebra"]["comult"] = [e for e in b["algebra"]["comult"] if e[0] != 1] + [[1, 1, 2, "1"]]


def antipode(b):
    # S(e_3) = e_3 instead of its inverse in k[S3] (e_3 is a 3-cycle)
    b["algebra"]["antipode"] = [e for e in b["algebra"]["antipode"] if e[0] != 3] + [[3, 3, "1"]]


def beta(b):
    b["algebra"]["beta"] = list(b["algebra"]["unit"])


def alpha(b):
    # every alpha is invariant in a commutative k^G, so this shows up in the
    # phi-normalization
    b["algebra"]["alpha"][1] = "2"


def phi_inv(b):
    set_entry(b["algebra"]["phi_inv"], (1, 1, 1), "1")


def phi_not_cocycle(b):
    # omega(1,1,1) = i on Z/4 with all other values 1 is normalized but
    # breaks the cocycle identity at (1,1,1,1); only the pentagon sees it.
    set_entry(b["algebra"]["phi"], (1, 1, 1), "z")
    set_entry(b["algebra"]["phi_inv"], (1, 1, 1), "-z")


def mult(b):
    # e_1 e_1 = e_0 instead of e_2 in k[Z/4]
    b["algebra"]["mult"] = [e for e in b["algebra"]["mult"] if e[:2] != [1, 1]] + [[1, 1, 0, "1"]]


MUTATIONS = [
    ("bad_counit", "z3", counit, "counit_left"),
    ("bad_comult", "z4", comult, "comult_multiplicative"),
    ("bad_antipode", "s3", antipode, "antipode_anti_multiplicative"),
    ("bad_beta", "z2w1", beta, "quasi_antipode_phi"),
    ("bad_alpha", "z4w1", alpha, "quasi_antipode_phi"),
    ("bad_phi_inv", "z2w1", phi_inv, "phi_inverse"),
    ("bad_pentagon", "z4w0", phi_not_cocycle, "pentagon"),
    ("bad_mult", "z4", mult, "mult_associative"),
]


def main():
    data = Path(sys.argv[1] if len(sys.argv) > 1 else "data")
    expected = {}
    for name, source, mutate, axiom in MUTATIONS:
        b = json.loads((data / "corpus" / f"{source}.bundle.json").read_text())
        mutate(b)
        b["provenance"] = f"{source} with one corrupted axiom: {axiom}"
        (data / "broken" / f"{name}.bundle.json").write_text(dump(b) + "\n")
        expected[f"{name}.bundle.json"] = axiom
    (data / "broken" / "expected.json").write_text(dump(expected) + "\n")


if __name__ == "__main__":
    main()
