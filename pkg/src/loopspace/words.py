"""Reduced composable words of simplices: the combinatorial loop model.

A word is a sequence of letters, each a simplex of the edge-inverted
presentation of dimension >= 1, composable in the sense that the last
vertex of each letter is the first vertex of the next.  The degree of a
letter is its simplex dimension minus one.  Canonical generators are
reduced words with nondegenerate letters; degenerate words arising from
faces and degeneracies are identified by junction shifts (a top degeneracy
of one letter equals an inner s_0 on the next), cancellation of adjacent
inverse edge pairs, and absorption of unit letters.  Because cancellations
can hide behind shifts in either direction, no one-directional rewriting
is confluent; the canonical form is instead the minimum of the finite
orbit of a word under all of these moves.
"""

from __future__ import annotations

from dataclasses import dataclass

from .simplicial import SimplexTerm, SimplicialPresentation


class WordError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class LoopWord:
    letters: tuple[SimplexTerm, ...]
    start: str
    end: str

    @property
    def degree(self) -> int:
        return sum(t.dim - 1 for t in self.letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def bidegree(self) -> tuple[int, int]:
        return (self.degree, len(self.letters))

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def has_degenerate_letter(self) -> bool:
        return any(t.degens for t in self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return ";".join(str(t) for t in self.letters)


def unit(at: str) -> LoopWord:
    return LoopWord((), at, at)


def _is_vertex_collapse(t: SimplexTerm) -> bool:
    # a bead mapped entirely to a vertex
    return t.generator.dim == 0


def _is_unit_letter(t: SimplexTerm) -> bool:
    # s_0 of a vertex: the only letter that absorbs outright
    return t.dim == 1 and t.generator.dim == 0


def check_composable(
    zx: SimplicialPresentation, letters: tuple[SimplexTerm, ...]
) -> tuple[str, str]:
    """Endpoints of a composable raw word; raises on a mismatch."""
    if not letters:
        raise WordError("empty raw word has no endpoints; use unit(at)")
    prev_max = None
    start = None
    for t in letters:
        if t.dim < 1:
            raise WordError(f"letter {t} must have dimension >= 1")
        lo, hi = zx.endpoints(t)
        if prev_max is not None and lo != prev_max:
            raise WordError(f"word not composable at {t}: {prev_max} != {lo}")
        if start is None:
            start = lo
        prev_max = hi
    return start, prev_max


def _cancellable(zx: SimplicialPresentation, a: SimplexTerm, b: SimplexTerm) -> bool:
    return (
        a.dim == 1
        and b.dim == 1
        and zx.has_op_partner(a)
        and zx.op_pairs[a.generator.name] == b.generator.name
    )


def reduce_word(
    zx: SimplicialPresentation,
    letters: tuple[SimplexTerm, ...],
    start: str | None = None,
) -> LoopWord:
    """Cancel adjacent inverse edge pairs and absorb unit letters (s_0 of a
    vertex).  Higher vertex-collapse letters are not dropped here; the shift
    normal form dissolves them without changing the degree."""
    if not letters:
        if start is None:
            raise WordError("reducing the empty word needs a start vertex")
        return unit(start)
    s, e = check_composable(zx, letters)
    if start is not None and start != s:
        raise WordError(f"declared start {start} does not match word start {s}")
    out = list(letters)
    changed = True
    while changed:
        changed = False
        for i, t in enumerate(out):
            if _is_unit_letter(t) and len(out) >= 2:
                del out[i]
                changed = True
                break
        if changed:
            continue
        for i in range(len(out) - 1):
            if _cancellable(zx, out[i], out[i + 1]):
                del out[i : i + 2]
                changed = True
                break
    if not out or (len(out) == 1 and _is_unit_letter(out[0])):
        return unit(s)
    return LoopWord(tuple(out), s, e)


def _strip_inner_s0(t: SimplexTerm) -> SimplexTerm:
    """Remove the innermost s_0 of a canonical degeneracy word."""
    if not t.degens or t.degens[0] != 0:
        raise WordError(f"{t} has no inner s_0")
    return SimplexTerm(tuple(d - 1 for d in t.degens[1:]), t.generator)


def _orbit_moves(
    zx: SimplicialPresentation, cur: tuple[SimplexTerm, ...], start: str
) -> list[tuple[SimplexTerm, ...]]:
    """All words one relation move away: junction shifts in both directions,
    cancellation of an adjacent inverse edge pair, absorption of a unit
    letter, and insertion of a unit letter.  An inserted unit is only useful
    as a landing pad for degeneracies migrating off a neighbouring letter,
    so insertion next to a vertex-collapse letter is skipped; this keeps
    every orbit finite."""
    out = []
    for i in range(len(cur) + 1):
        if i > 0 and _is_vertex_collapse(cur[i - 1]):
            continue
        if i < len(cur) and _is_vertex_collapse(cur[i]):
            continue
        v = start if i == 0 else zx.endpoints(cur[i - 1])[1]
        pad = zx.degenerate(zx.term(v), 0)
        out.append(cur[:i] + (pad,) + cur[i:])
    for i in range(len(cur) - 1):
        if _cancellable(zx, cur[i], cur[i + 1]):
            out.append(cur[:i] + cur[i + 2 :])
    if len(cur) >= 2:
        for i, t in enumerate(cur):
            if _is_unit_letter(t):
                out.append(cur[:i] + cur[i + 1 :])
    for i in range(len(cur) - 1):
        t, u = cur[i], cur[i + 1]
        if t.degens and t.degens[-1] == t.dim - 1 and t.dim >= 2:
            out.append(
                cur[:i]
                + (SimplexTerm(t.degens[:-1], t.generator), zx.degenerate(u, 0))
                + cur[i + 2 :]
            )
        if u.degens and u.degens[0] == 0 and u.dim >= 2:
            out.append(
                cur[:i]
                + (zx.degenerate(t, t.dim), _strip_inner_s0(u))
                + cur[i + 2 :]
            )
    return out


def orbit_minimum(
    zx: SimplicialPresentation,
    letters: tuple[SimplexTerm, ...],
    start: str | None = None,
) -> LoopWord:
    """The minimal element of the relation orbit of a raw word, by explicit
    search.  Exponential in the worst case; used as an oracle for the
    linear-time ``canonical``."""
    if not letters:
        if start is None:
            raise WordError("the empty word needs a start vertex")
        return unit(start)
    s, e = check_composable(zx, letters)
    seen: set[tuple[SimplexTerm, ...]] = set()
    stack = [letters]
    while stack:
        cur = stack.pop()
        if cur in seen:
            continue
        seen.add(cur)
        stack.extend(n for n in _orbit_moves(zx, cur, s) if n not in seen)
    best = min(seen, key=lambda c: (len(c), c))
    if not best or (len(best) == 1 and _is_unit_letter(best[0])):
        return unit(s)
    return LoopWord(best, s, e)


def _vertex_multiplicities(t: SimplexTerm) -> list[int]:
    """How many times each vertex of the underlying nondegenerate simplex
    appears in the degenerate simplex t."""
    vs = list(range(t.generator.dim + 1))
    for j in t.degens:  # innermost first
        vs.insert(j + 1, vs[j])
    mult = [0] * (t.generator.dim + 1)
    for v in vs:
        mult[v] += 1
    return mult


def _degens_from_multiplicities(mult: list[int]) -> tuple[int, ...]:
    """Canonical degeneracy word of the degenerate simplex with the given
    vertex multiplicities (inverse of _vertex_multiplicities)."""
    degens = []
    pos = 0
    for m in mult:
        for c in range(m):
            if c > 0:
                degens.append(pos - 1)
            pos += 1
    return tuple(degens)


def canonical(
    zx: SimplicialPresentation,
    letters: tuple[SimplexTerm, ...],
    start: str | None = None,
) -> LoopWord:
    """Canonical representative of the relation class of a raw word.

    The class of a word is determined by: its sequence of nondegenerate
    letter cores after all possible cancellations, and the number of
    duplicated vertices at each position along the word.  Vertex-collapse
    letters dissolve into duplicates at their position (shedding one, which
    is absorbed together with the collapsed core); an adjacent inverse pair
    of edge cores cancels exactly when the position between them carries no
    duplicates, pooling the duplicates of its outer positions.  The
    representative assigns the duplicates of each surviving junction to the
    right-hand letter as inner s_0 degeneracies.
    """
    if not letters:
        if start is None:
            raise WordError("the empty word needs a start vertex")
        return unit(start)
    s, e = check_composable(zx, letters)
    if start is not None and start != s:
        raise WordError(f"declared start {start} does not match word start {s}")
    # alternating structure: dups[0], core[0], dups[1], ..., core[k-1], dups[k]
    # where dups[i] counts free duplicates at the junction position and each
    # core carries the frozen duplicate counts of its interior vertices.
    dups: list[int] = [0]
    cores: list[SimplexTerm] = []
    middles: list[list[int]] = []
    for t in letters:
        mult = _vertex_multiplicities(t)
        if t.generator.dim == 0:
            # vertex-collapse letter: t.dim duplicates, one absorbed
            dups[-1] += t.dim - 1
        else:
            dups[-1] += mult[0] - 1
            cores.append(SimplexTerm((), t.generator))
            middles.append([m - 1 for m in mult[1:-1]])
            dups.append(mult[-1] - 1)
    changed = True
    while changed:
        changed = False
        for i in range(len(cores) - 1):
            if dups[i + 1] == 0 and _cancellable(zx, cores[i], cores[i + 1]):
                merged = dups[i] + dups[i + 2]
                del cores[i : i + 2]
                del middles[i : i + 2]
                dups[i : i + 3] = [merged]
                changed = True
                break
    if not cores:
        total = dups[0]
        if total == 0:
            return unit(s)
        v = zx.generators[s]
        letter = SimplexTerm(tuple(range(total + 1)), v)
        return LoopWord((letter,), s, s)
    out = []
    for i, c in enumerate(cores):
        mult = [dups[i] + 1] + [m + 1 for m in middles[i]] + [1]
        if i == len(cores) - 1:
            mult[-1] += dups[i + 1]
        out.append(SimplexTerm(_degens_from_multiplicities(mult), c.generator))
    return LoopWord(tuple(out), s, e)


def compose(zx: SimplicialPresentation, u: LoopWord, v: LoopWord) -> LoopWord:
    if u.end != v.start:
        raise WordError(f"cannot compose: {u.end} != {v.start}")
    return canonical(zx, u.letters + v.letters, u.start)


def invert(zx: SimplicialPresentation, w: LoopWord) -> LoopWord:
    """Inverse of a degree-0 word: reversed op-partners."""
    for t in w.letters:
        if t.dim != 1 or not zx.has_op_partner(t):
            raise WordError(f"letter {t} is not an invertible edge")
    letters = tuple(zx.op(t) for t in reversed(w.letters))
    if not letters:
        return unit(w.start)
    return canonical(zx, letters, w.end)


def power_decompose(zx: SimplicialPresentation, w: LoopWord) -> tuple[LoopWord, int]:
    """Shortest root r and exponent k >= 0 with r^k = w, for a degree-0 loop.

    The unit decomposes as (e, 0); a primitive word as (w, 1)."""
    if w.degree != 0:
        raise WordError(f"{w} has degree {w.degree}, not a group element")
    n = len(w.letters)
    if n == 0:
        return w, 0
    for d in range(1, n + 1):
        if n % d:
            continue
        root = LoopWord(w.letters[:d], w.start, zx.endpoints(w.letters[d - 1])[1])
        if root.end != root.start:
            continue
        power = unit(w.start)
        for _ in range(n // d):
            power = compose(zx, power, root)
        if power == w:
            return root, n // d
    return w, 1


# -- face and degeneracy operators ----------------------------------------


def _coordinate_letter(w: LoopWord, i: int) -> tuple[int, int]:
    """Map coordinate i in 1..degree to (letter index, local index)."""
    if not 1 <= i <= w.degree:
        raise WordError(f"coordinate {i} out of range 1..{w.degree}")
    acc = 0
    for k, t in enumerate(w.letters):
        deg = t.dim - 1
        if i <= acc + deg:
            return k, i - acc
        acc += deg
    raise AssertionError("unreachable")


def _front_face(zx: SimplicialPresentation, t: SimplexTerm, d: int) -> SimplexTerm:
    """The front d-face (first d+1 vertices), by iterated last faces."""
    while t.dim > d:
        t = zx.face(t, t.dim)
    return t


def _back_face(zx: SimplicialPresentation, t: SimplexTerm, d: int) -> SimplexTerm:
    """The back d-face (last d+1 vertices), by iterated zeroth faces."""
    while t.dim > d:
        t = zx.face(t, 0)
    return t


def letter_face(
    zx: SimplicialPresentation, t: SimplexTerm, i: int, eps: int
) -> tuple[SimplexTerm, ...]:
    """Face of a single letter at local coordinate i in 1..dim-1.

    eps = 1 is the inner face; eps = 0 the front/back split.
    """
    m = t.dim - 1
    if not 1 <= i <= m:
        raise WordError(f"letter coordinate {i} out of range 1..{m}")
    if eps == 1:
        return (zx.face(t, i),)
    return (_front_face(zx, t, i), _back_face(zx, t, t.dim - i))


def word_face_raw(
    zx: SimplicialPresentation, w: LoopWord, i: int, eps: int
) -> LoopWord:
    """Face at coordinate i without canonicalization (for relation checks,
    where slot indices refer to the raw representative)."""
    if eps not in (0, 1):
        raise WordError("epsilon must be 0 or 1")
    k, local = _coordinate_letter(w, i)
    replaced = letter_face(zx, w.letters[k], local, eps)
    letters = w.letters[:k] + replaced + w.letters[k + 1 :]
    return LoopWord(letters, w.start, w.end)


def word_face(zx: SimplicialPresentation, w: LoopWord, i: int, eps: int) -> LoopWord:
    raw = word_face_raw(zx, w, i, eps)
    return canonical(zx, raw.letters, raw.start)


def degeneracy_slots(w: LoopWord) -> int:
    """Number of degeneracy slots: degree + length + 1 (one per bead vertex,
    junctions identified)."""
    if not w.letters:
        return 2  # the two slots of the unit letter, which agree
    return w.degree + len(w.letters) + 1


def word_degeneracy(zx: SimplicialPresentation, w: LoopWord, j: int) -> LoopWord:
    """Insert a degeneracy at slot j; returns a raw (unreduced) word.

    Junction slots are addressed as s_0 of the right-hand letter.
    """
    if not 1 <= j <= degeneracy_slots(w):
        raise WordError(f"degeneracy slot {j} out of range")
    if not w.letters:
        x0 = zx.generators[w.start]
        e_letter = SimplexTerm((0,), x0)
        return LoopWord((zx.degenerate(e_letter, 0),), w.start, w.end)
    acc = 0
    for k, t in enumerate(w.letters):
        d = t.dim
        last = k == len(w.letters) - 1
        hi = acc + d + (1 if last else 0)
        if j <= hi:
            local = j - acc - 1
            letters = w.letters[:k] + (zx.degenerate(t, local),) + w.letters[k + 1 :]
            return LoopWord(letters, w.start, w.end)
        acc += d
    raise AssertionError("unreachable")


# -- enumeration -----------------------------------------------------------


def letter_pool(zx: SimplicialPresentation) -> list[SimplexTerm]:
    pool = []
    for d in range(1, zx.max_dim + 1):
        pool.extend(zx.term(g.name) for g in zx.generators_of_dim(d))
    return pool


def enumerate_words(
    zx: SimplicialPresentation,
    degree: int,
    max_length: int | None,
    start: str,
    end: str,
) -> list[LoopWord]:
    """All reduced words with nondegenerate letters of the given degree,
    length bound and endpoints, in deterministic order."""
    if max_length is None:
        if zx.generators_of_dim(1):
            raise WordError("unbounded enumeration needs a complex without edges")
        max_length = max(degree, 1)
    pool = letter_pool(zx)
    ends = {t: zx.endpoints(t) for t in pool}
    found: list[LoopWord] = []
    if degree == 0 and start == end:
        found.append(unit(start))

    def extend(prefix: list[SimplexTerm], at: str, deg_left: int):
        if len(prefix) >= max_length:
            return
        for t in pool:
            d = t.dim - 1
            if d > deg_left:
                continue
            lo, hi = ends[t]
            if lo != at:
                continue
            if prefix and _cancellable(zx, prefix[-1], t):
                continue
            prefix.append(t)
            if deg_left == d and hi == end:
                found.append(LoopWord(tuple(prefix), start, end))
            extend(prefix, hi, deg_left - d)
            prefix.pop()

    extend([], start, degree)
    found.sort(key=lambda w: (len(w.letters), w.letters))
    return found


def random_reduced_word(zx, rng, start: str, end: str, max_degree: int, max_length: int):
    """A random reduced word between the endpoints, or the unit on failure."""
    pool = letter_pool(zx)
    ends = {t: zx.endpoints(t) for t in pool}
    for _ in range(60):
        target_len = rng.randint(0 if start == end else 1, max_length)
        letters: list[SimplexTerm] = []
        at = start
        ok = True
        for k in range(target_len):
            options = [
                t
                for t in pool
                if ends[t][0] == at
                and t.dim - 1 + sum(x.dim - 1 for x in letters) <= max_degree
                and not (letters and _cancellable(zx, letters[-1], t))
            ]
            if not options:
                ok = False
                break
            pick = options[rng.randrange(len(options))]
            letters.append(pick)
            at = ends[pick][1]
        if ok and at == end and (letters or start == end):
            if not letters:
                return unit(start)
            return LoopWord(tuple(letters), start, end)
    if start == end:
        return unit(start)
    raise WordError(f"no word found from {start} to {end}")
