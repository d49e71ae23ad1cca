"""Smoke test for the Python bindings.

Uses an installed ``orientcount_py`` if there is one; otherwise builds the
extension with cargo and loads it from a temporary directory.
"""

import importlib
import pathlib
import shutil
import subprocess
import sys
import sysconfig
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load():
    try:
        return importlib.import_module("orientcount_py")
    except ImportError:
        pass
    subprocess.run(
        ["cargo", "build", "-p", "orientcount-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    lib = {"darwin": "liborientcount_py.dylib", "win32": "orientcount_py.dll"}.get(
        sys.platform, "liborientcount_py.so"
    )
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    dest = pathlib.Path(tempfile.mkdtemp()) / f"orientcount_py{suffix}"
    shutil.copy(ROOT / "target" / "debug" / lib, dest)
    sys.path.insert(0, str(dest.parent))
    return importlib.import_module("orientcount_py")


def main():
    oc = load()

    k3 = oc.Graph.complete(3)
    assert oc.count_orientations(k3) == 6
    assert oc.oracle_count(k3) == 6

    k44 = oc.Graph.complete_multipartite([4, 4])
    assert oc.count_orientations(k44) == 2**16
    assert oc.Graph.from_graph6(k44.graph6()) == k44

    assert [oc.k1ll_count(l) for l in range(1, 5)] == [6, 82, 2754, 271618]
    assert oc.count_orientations(oc.Graph.complete_multipartite([1, 4, 4])) == 271618

    k4_minus = oc.Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    value, arcs = oc.ext(k4_minus, [0, 2], [1, 3])
    assert value == 5 and len(arcs) == 2

    try:
        oc.ext(k4_minus, [0, 1], [1, 2])
    except ValueError:
        pass
    else:
        raise AssertionError("overlapping sets accepted")

    assert oc.canonical_form(oc.Graph(3, [(0, 1)])) == oc.canonical_form(oc.Graph(3, [(1, 2)]))
    assert len(oc.generate_all(5)) == 34

    best, maximizers = oc.find_maximizers(6)
    assert best == 720 and len(maximizers) == 1
    ok, summary = oc.verify_theorem(8)
    assert ok, summary

    assert all(passed for _, passed, _, _ in oc.certify_summary())
    passed, qualifying, top = oc.lemma_claim()
    assert passed and qualifying > 0 and top < 4096

    failed = [(i, s, f) for i, s, _, f in oc.audit_summary(40) if f and s == "claimed"]
    assert failed == [("ver4", "claimed", 1)], failed

    print("smoke test passed")


if __name__ == "__main__":
    main()
