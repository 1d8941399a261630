"""Smoke test for the g3tilt_py extension."""

import g3tilt_py as g


def main() -> None:
    family, case, ell, rep, _ = g.classify("-7/2|1/4,13/4,-7/2")
    assert (family, case, ell) == ("V", "I", "3"), (family, case, ell)
    assert g.linked(rep, "-7/2|1/4,13/4,-7/2")

    osp = dict(g.tilting("0|0", system="osp32"))
    assert osp == {"[0|0]": 1, "[-1|1]": 1, "[-1|-1]": 1}, osp

    table = g.tilting("-7/2|1/4,13/4,-7/2")
    derived, path = g.derive("-7/2|1/4,13/4,-7/2")
    assert sorted(table) == sorted(derived), (table, derived)
    assert path in {"seed", "tight", "decomposed"} or path.startswith("greedy")

    members = g.block_members("0|0,3/2,-3/2", -1, 1)
    assert all(g.casimir(m) == g.casimir(members[0]) for m in members)

    try:
        g.tilting("5/2|-1/2,-2,5/2")
    except RuntimeError as e:
        assert "CW18" in str(e)
    else:
        raise AssertionError("integral weights carry a label")

    try:
        g.classify("nonsense")
    except ValueError:
        pass
    else:
        raise AssertionError("parse errors raise ValueError")
    print("smoke test passed")


if __name__ == "__main__":
    main()
