#!/usr/bin/env python3
"""Smoke test for the superweyl_py extension module.

Builds the extension with cargo, imports it from the target directory and
exercises the main entry points on a handful of algebras.
"""

import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def build() -> Path:
    subprocess.run(
        ["cargo", "build", "-p", "superweyl-py", "--features", "extension-module"],
        cwd=REPO,
        check=True,
    )
    lib = REPO / "target" / "debug" / "libsuperweyl_py.so"
    if not lib.exists():  # e.g. macOS
        lib = REPO / "target" / "debug" / "libsuperweyl_py.dylib"
    if not lib.exists():
        sys.exit("extension library not found under target/debug")
    stage = Path(tempfile.mkdtemp(prefix="superweyl-py-"))
    shutil.copy(lib, stage / "superweyl_py.so")
    return stage


def main() -> None:
    sys.path.insert(0, str(build()))
    import superweyl_py as sw

    gl12 = sw.Algebra("gl(1|2)")
    assert gl12.count() == 6
    assert gl12.expected_count() == 6
    assert gl12.group_order() == 12
    assert gl12.coxeter_matrix() == [[1, 6], [6, 1]]
    assert gl12.product_order(0, 1) == 6

    spo23 = sw.Algebra("spo(2|3)")
    assert spo23.count() == 8
    seqs = {" ".join(s) for s in spo23.defining_sequences()}
    assert "b1 1" in seqs and "-1 b1" in seqs and len(seqs) == 8
    assert spo23.generator_labels() == ["r[-2d1]", "r[d1-e1]", "r[e1]"]

    d21 = sw.Algebra("D(2,1)")
    assert d21.count() == 32
    row = d21.coxeter_matrix()[1]
    assert row.count(12) == 3
    assert d21.dot().startswith("graph coxeter")

    try:
        sw.Algebra("spo(2|1)")
    except ValueError as e:
        assert "isotropic" in str(e)
    else:
        sys.exit("spo(2|1) must be rejected")

    ok, report = sw.verify("exceptional", strict=True)
    assert ok, report

    print("smoke: all checks passed")


if __name__ == "__main__":
    main()
