"""Constructions behind the bundled catalogs of indecomposable modules.

Everything of total dimension at most five comes from the generic
constructors in quiver.py: simples, strings, diamonds, and diamonds with
one extra one-dimensional arm.  The dimension-six and dimension-seven
classes need explicit matrices; the base cases are entered here once and
the remaining ones derived through the reverse and transpose-dual
symmetries.  The list order is weakly increasing in total dimension so a
proper submodule always sits at a strictly smaller index.

scripts/generate_catalog.py serializes these lists into the data files
that load_catalog reads; the test suite certifies them independently by
brute-force enumeration over small prime fields.
"""

from __future__ import annotations

from .quiver import (
    Representation,
    diamond_module,
    make_representation,
    reverse,
    simple,
    socle_dims,
    string_module,
    top_dims,
    transpose_dual,
)


def _string(n: int, lo: int, hi: int, dirs: str):
    shape = "1" + "".join((">" if c == "f" else "<") + "1" for c in dirs)
    return string_module(n, lo, hi, dirs), f"string on vertices {lo}..{hi}, shape {shape}"


def diamond_with_arm(n: int, center: int, arm_vertex: int, direction: str) -> Representation:
    """A diamond at `center` glued to one extra simple at `arm_vertex`.

    The arm vertex must be adjacent to the diamond; `direction` says
    whether the connecting arrow is the forward ("f") or backward ("q")
    one on that edge.
    """
    base = diamond_module(n, center)
    dimv = list(base.dimv)
    if dimv[arm_vertex - 1] != 0:
        raise ValueError("arm vertex must lie outside the diamond")
    dimv[arm_vertex - 1] = 1
    f = [m.to_lists() for m in base.f]
    q = [m.to_lists() for m in base.q]
    edge = arm_vertex if arm_vertex < center else arm_vertex - 1  # 1-based
    if direction == "f":
        f[edge - 1], q[edge - 1] = [[1]], [[0]]
    elif direction == "q":
        f[edge - 1], q[edge - 1] = [[0]], [[1]]
    else:
        raise ValueError("direction must be 'f' or 'q'")
    return make_representation(n, dimv, f, q)


def _u34() -> Representation:
    # Socle (0,1,0,1); the bottom row (1,1) of the backward middle map is
    # what glues the fourth vertex to the diamond part.
    return make_representation(
        4,
        (1, 2, 2, 1),
        [[[0], [1]], [[1, 0], [0, 0]], [[0, 0]]],
        [[[1, 0]], [[0, 0], [1, 1]], [[0], [1]]],
    )


def _u37() -> Representation:
    # Identity in the middle: each basis line of vertex 2 moves to the
    # matching line of vertex 3, one through the diamond top, one through
    # the diamond bottom.
    return make_representation(
        4,
        (1, 2, 2, 1),
        [[[0], [1]], [[1, 0], [0, 1]], [[1, 0]]],
        [[[1, 0]], [[0, 0], [1, 0]], [[0], [1]]],
    )


def _u39() -> Representation:
    return make_representation(
        4,
        (2, 2, 2, 1),
        [[[1, 0], [-1, 0]], [[0, 0], [1, 0]], [[1, 0]]],
        [[[0, 0], [1, 1]], [[1, 0], [0, 0]], [[0], [1]]],
    )


def build_modules(n: int) -> list[tuple[Representation, str]]:
    """The ordered module list for A_n with a short shape note per entry."""
    if n == 1:
        return [(simple(1, 1), "simple at vertex 1")]
    if n == 2:
        return [
            (simple(2, 1), "simple at vertex 1"),
            (simple(2, 2), "simple at vertex 2"),
            _string(2, 1, 2, "f"),
            _string(2, 1, 2, "q"),
        ]
    if n == 3:
        mods = [(simple(3, v), f"simple at vertex {v}") for v in (1, 2, 3)]
        mods += [_string(3, 1, 2, "f"), _string(3, 2, 3, "f")]
        mods += [_string(3, 1, 2, "q"), _string(3, 2, 3, "q")]
        mods += [_string(3, 1, 3, d) for d in ("ff", "qq", "fq", "qf")]
        mods.append((diamond_module(3, 2), "diamond at vertex 2"))
        return mods
    if n != 4:
        raise ValueError("only A1..A4 are supported")

    mods = [(simple(4, v), f"simple at vertex {v}") for v in (1, 2, 3, 4)]
    for lo in (1, 2, 3):
        mods += [_string(4, lo, lo + 1, "f"), _string(4, lo, lo + 1, "q")]
    for lo in (1, 2):
        mods += [_string(4, lo, lo + 2, d) for d in ("ff", "qq", "fq", "qf")]
    mods += [
        (diamond_module(4, 2), "diamond at vertex 2"),
        (diamond_module(4, 3), "diamond at vertex 3"),
    ]
    mods += [_string(4, 1, 4, d) for d in
             ("fff", "ffq", "fqf", "fqq", "qff", "qfq", "qqf", "qqq")]
    mods += [
        (diamond_with_arm(4, 2, 4, "f"), "diamond at vertex 2 plus arrow 3>4"),
        (diamond_with_arm(4, 2, 4, "q"), "diamond at vertex 2 plus arrow 3<4"),
        (diamond_with_arm(4, 3, 1, "q"), "diamond at vertex 3 plus arrow 1<2"),
        (diamond_with_arm(4, 3, 1, "f"), "diamond at vertex 3 plus arrow 1>2"),
    ]
    u34, u37, u39 = _u34(), _u37(), _u39()
    u33 = transpose_dual(u34)
    mods += [
        (u33, "dimension-six class, transpose dual of entry 34"),
        (u34, "dimension-six class, explicit matrices"),
        (reverse(u33), "reverse of entry 33"),
        (reverse(u34), "reverse of entry 34"),
        (u37, "dimension-six class, explicit matrices"),
        (reverse(u37), "reverse of entry 37"),
        (u39, "dimension-seven sincere class, explicit matrices"),
        (reverse(u39), "reverse of entry 39"),
    ]
    return mods


def _int_rows(m) -> list[list[int]]:
    rows = []
    for row in m.to_lists():
        assert all(x.denominator == 1 for x in row)
        rows.append([int(x) for x in row])
    return rows


def build_entries(n: int) -> list[dict]:
    """JSON-ready entry dicts: integer matrices plus a notes line."""
    entries = []
    for i, (rep, shape) in enumerate(build_modules(n), start=1):
        top = "".join(str(d) for d in top_dims(rep))
        soc = "".join(str(d) for d in socle_dims(rep))
        entries.append({
            "id": i,
            "dimv": list(rep.dimv),
            "f": [_int_rows(m) for m in rep.f],
            "q": [_int_rows(m) for m in rep.q],
            "notes": f"{shape}; top {top}, socle {soc}",
        })
    return entries
