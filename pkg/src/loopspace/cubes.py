"""Block-label calculus for the cube cells of a standard simplex.

A cell is a sequence of blocks of increasing labels, consecutive blocks
sharing their junction value, e.g. ``[0,1,2][2,3]`` or, in the augmented
flavour, ``0,2][2,3]`` where the first block is allowed to start anywhere.
Faces split a block at a value (epsilon = 0) or delete a value
(epsilon = 1); degeneracies duplicate a value and re-index the ambient
label set.  This calculus is the ground truth for the cubical relation
systems used throughout the word and path models.
"""

from __future__ import annotations

from dataclasses import dataclass


class CubeError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CubeCellLabel:
    augmented: bool
    blocks: tuple[tuple[int, ...], ...]
    ambient: int

    def __post_init__(self):
        if not self.blocks or any(not b for b in self.blocks):
            raise CubeError("blocks must be non-empty")
        for b in self.blocks:
            if list(b) != sorted(set(b)):
                raise CubeError(f"block {b} is not strictly increasing")
        for left, right in zip(self.blocks, self.blocks[1:]):
            if left[-1] != right[0]:
                raise CubeError("consecutive blocks must share their junction")
        if self.blocks[-1][-1] != self.ambient:
            raise CubeError("last label must equal the ambient dimension")
        if not self.augmented and self.blocks[0][0] != 0:
            raise CubeError("non-augmented cells must start at 0")

    @property
    def positions(self) -> int:
        """Number of distinct label positions (junctions counted once)."""
        return sum(len(b) for b in self.blocks) - (len(self.blocks) - 1)

    @property
    def dim(self) -> int:
        return self.positions - len(self.blocks) - (0 if self.augmented else 1)

    @property
    def bead_dims(self) -> tuple[int, ...]:
        """Dimensions of the beads; the first bead may be 0-dimensional if augmented."""
        return tuple(len(b) - 1 for b in self.blocks)

    def __str__(self) -> str:
        head = ",".join(map(str, self.blocks[0]))
        first = head + "]" if self.augmented else "[" + head + "]"
        rest = "".join("[" + ",".join(map(str, b)) + "]" for b in self.blocks[1:])
        return first + rest

    def pattern(self) -> tuple:
        """Cell up to order-isomorphism of labels; degeneracies re-index labels,
        so relation checks involving them compare patterns."""
        seen: dict[int, int] = {}
        blocks = []
        for b in self.blocks:
            blocks.append(tuple(seen.setdefault(v, len(seen)) for v in b))
        return (self.augmented, tuple(blocks))


def top_cell(n: int, augmented: bool = False) -> CubeCellLabel:
    if n < (0 if augmented else 1):
        raise CubeError("n out of range")
    return CubeCellLabel(augmented, (tuple(range(n + 1)),), n)


def _face_slots(c: CubeCellLabel) -> list[tuple[int, int]]:
    """(block index, index within block) for each face coordinate, left to right.

    Interior elements of every block; additionally every element but the last
    of the first block when augmented.
    """
    slots = []
    for bi, b in enumerate(c.blocks):
        lo = 0 if (c.augmented and bi == 0) else 1
        slots.extend((bi, p) for p in range(lo, len(b) - 1))
    return slots


def _degeneracy_slots(c: CubeCellLabel) -> list[tuple[int, int]]:
    """(block index, index within block) for each degeneracy coordinate.

    Junction positions are addressed once, as position 0 of the right-hand
    block (the s_0 representative of the overlapping-slot identification).
    """
    slots = []
    last = len(c.blocks) - 1
    for bi, b in enumerate(c.blocks):
        hi = len(b) - 1 if bi == last else len(b) - 2
        slots.extend((bi, p) for p in range(0, hi + 1))
    return slots


def cube_face(c: CubeCellLabel, i: int, eps: int) -> CubeCellLabel:
    if eps not in (0, 1):
        raise CubeError("epsilon must be 0 or 1")
    slots = _face_slots(c)
    if not 1 <= i <= len(slots):
        raise CubeError(f"face index {i} out of range 1..{len(slots)}")
    bi, p = slots[i - 1]
    blocks = list(c.blocks)
    b = blocks[bi]
    if eps == 1:
        blocks[bi] = b[:p] + b[p + 1 :]
    else:
        blocks[bi : bi + 1] = [b[: p + 1], b[p:]]
    return CubeCellLabel(c.augmented, tuple(blocks), c.ambient)


def cube_degeneracy(c: CubeCellLabel, j: int) -> CubeCellLabel:
    slots = _degeneracy_slots(c)
    if not 1 <= j <= len(slots):
        raise CubeError(f"degeneracy index {j} out of range 1..{len(slots)}")
    bi, p = slots[j - 1]
    v = c.blocks[bi][p]
    # duplicate v at (bi, p), then shift every label > v up by one
    blocks = []
    for k, b in enumerate(c.blocks):
        bumped = tuple(x if x <= v else x + 1 for x in b)
        if k == bi:
            bumped = bumped[: p + 1] + (v + 1,) + bumped[p + 1 :]
        blocks.append(bumped)
    return CubeCellLabel(c.augmented, tuple(blocks), c.ambient + 1)


def psi(c: CubeCellLabel) -> tuple[int, ...]:
    """Project an augmented cell to the face of the simplex cut out by its first block."""
    if not c.augmented:
        raise CubeError("psi is only defined on augmented cells")
    return c.blocks[0]


# -- duplicate-label calculus ----------------------------------------------
#
# The strict calculus above re-indexes labels after a degeneracy, which is
# enough for faces and the projection but forgets which label was duplicated.
# Checking the face-degeneracy relations needs a faithful representation:
# blocks that are weakly increasing, where a repeated label is a duplicated
# position.  Cells are compared through a canonical form: constant blocks
# (other than the first block of an augmented cell) dissolve into free
# duplicates at their position, with one duplicate absorbed alongside the
# collapsed block, and the free duplicates at a junction may sit on either
# side, so the canonical form pools them and assigns them to the right-hand
# block.


@dataclass(frozen=True, order=True)
class DupCell:
    augmented: bool
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.blocks or any(not b for b in self.blocks):
            raise CubeError("blocks must be non-empty")
        for b in self.blocks:
            if list(b) != sorted(b):
                raise CubeError(f"block {b} is not weakly increasing")
        for left, right in zip(self.blocks, self.blocks[1:]):
            if left[-1] != right[0]:
                raise CubeError("consecutive blocks must share their junction")

    @property
    def positions(self) -> int:
        return sum(len(b) for b in self.blocks) - (len(self.blocks) - 1)

    @property
    def dim(self) -> int:
        return self.positions - len(self.blocks) - (0 if self.augmented else 1)

    def __str__(self) -> str:
        head = ",".join(map(str, self.blocks[0]))
        first = head + "]" if self.augmented else "[" + head + "]"
        rest = "".join("[" + ",".join(map(str, b)) + "]" for b in self.blocks[1:])
        return first + rest


def dup_from_strict(c: CubeCellLabel) -> DupCell:
    return DupCell(c.augmented, c.blocks)


def _run_length(b: tuple[int, ...]) -> tuple[tuple[int, ...], list[int]]:
    strict: list[int] = []
    mult: list[int] = []
    for v in b:
        if strict and strict[-1] == v:
            mult[-1] += 1
        else:
            strict.append(v)
            mult.append(1)
    return tuple(strict), mult


def dup_canonical(d: DupCell) -> DupCell:
    blocks = d.blocks
    base = None  # (core, counts without the trailing extras)
    if d.augmented:
        core, mult = _run_length(blocks[0])
        if len(core) == 1:
            base = (core, [1])
            start_pool = len(blocks[0]) - 1
        else:
            base = (core, mult[:-1] + [1])
            start_pool = mult[-1] - 1
        blocks = blocks[1:]
        dups = [start_pool]
    else:
        dups = [0]
    cores: list[tuple[int, ...]] = []
    middles: list[list[int]] = []
    for b in blocks:
        core, mult = _run_length(b)
        if len(core) == 1:
            # constant bead: dissolves, one duplicate absorbed with it
            dups[-1] += max(len(b) - 2, 0)
        else:
            dups[-1] += mult[0] - 1
            cores.append(core)
            middles.append([m - 1 for m in mult[1:-1]])
            dups.append(mult[-1] - 1)
    out: list[tuple[int, ...]] = []
    if base is not None:
        bc, counts = base
        out.append(tuple(v for v, m in zip(bc, counts) for _ in range(m)))
    for i, core in enumerate(cores):
        counts = [dups[i] + 1] + [m + 1 for m in middles[i]] + [1]
        if i == len(cores) - 1:
            counts[-1] += dups[i + 1]
        out.append(tuple(v for v, m in zip(core, counts) for _ in range(m)))
    if not cores:
        free = dups[0]
        if base is None:
            if free:
                raise CubeError("cell dissolved entirely with duplicates left")
        elif free:
            v = base[0][-1]
            out.append((v,) * (free + 2))
    if not out:
        raise CubeError("cell dissolved entirely; no block left")
    return DupCell(d.augmented, tuple(out))


def _dup_spans(d: DupCell) -> list[tuple[int, int]]:
    """(start position, end position) of each block, junctions shared."""
    spans = []
    acc = 0
    for b in d.blocks:
        spans.append((acc, acc + len(b) - 1))
        acc += len(b) - 1
    return spans


def dup_face_positions(d: DupCell) -> list[tuple[int, int, int]]:
    """(global position, block index, index in block) of each face coordinate.

    Every non-junction position except the two word ends; for augmented
    cells the start position is also a coordinate.
    """
    out = []
    spans = _dup_spans(d)
    for bi, b in enumerate(d.blocks):
        lo = 0 if (d.augmented and bi == 0) else 1
        for p in range(lo, len(b) - 1):
            out.append((spans[bi][0] + p, bi, p))
    return out


def dup_face(d: DupCell, i: int, eps: int) -> DupCell:
    if eps not in (0, 1):
        raise CubeError("epsilon must be 0 or 1")
    slots = dup_face_positions(d)
    if not 1 <= i <= len(slots):
        raise CubeError(f"face index {i} out of range 1..{len(slots)}")
    _, bi, p = slots[i - 1]
    blocks = list(d.blocks)
    b = blocks[bi]
    if eps == 1:
        blocks[bi] = b[:p] + b[p + 1 :]
    else:
        blocks[bi : bi + 1] = [b[: p + 1], b[p:]]
    return DupCell(d.augmented, tuple(blocks))


def dup_degeneracy_slots(d: DupCell) -> list[tuple[int, int]]:
    """(block index, index in block) for each position, junctions addressed
    once as index 0 of the right-hand block."""
    slots = []
    last = len(d.blocks) - 1
    for bi, b in enumerate(d.blocks):
        hi = len(b) - 1 if bi == last else len(b) - 2
        slots.extend((bi, p) for p in range(0, hi + 1))
    return slots


def dup_degeneracy(d: DupCell, j: int) -> DupCell:
    slots = dup_degeneracy_slots(d)
    if not 1 <= j <= len(slots):
        raise CubeError(f"degeneracy index {j} out of range 1..{len(slots)}")
    bi, p = slots[j - 1]
    blocks = list(d.blocks)
    b = blocks[bi]
    blocks[bi] = b[: p + 1] + (b[p],) + b[p + 1 :]
    return DupCell(d.augmented, tuple(blocks))


def all_cells(n: int, augmented: bool = False) -> list[CubeCellLabel]:
    """Every (nondegenerate) cell of the cube on Delta^n: the face closure of the top cell."""
    seen = {top_cell(n, augmented)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for c in frontier:
            for i in range(1, c.dim + 1):
                for eps in (0, 1):
                    f = cube_face(c, i, eps)
                    if f not in seen:
                        seen.add(f)
                        nxt.append(f)
        frontier = nxt
    return sorted(seen, key=lambda c: (-c.dim, c.blocks))
