"""Cut-and-sew surgery on plane maps.

Operations run on a Workspace, a mutable copy of the twin and next
permutations that is allowed to pass through states that are not valid
plane maps (disconnected pieces, wrong Euler characteristic) between a
slit and the sewing that closes it.

Corners can carry ordered lists of marker tokens.  A marker anchored
to dart d sits in the corner before d; the list is ordered across the
corner from the side of the contour predecessor to the side of d.
Every operation moves markers along with the surgery, so a caller can
tag a corner, operate, and read off where the corner went.

Slitting a self-avoiding walk p_1 .. p_l doubles it into a left bank,
which keeps the original dart ids, and a right bank of fresh darts:
nl_k is the new twin of p_k and faces the channel backward, nr_k is
the new twin of the old twin of p_k and faces the channel forward.
Each walk vertex splits in two; the Slit records both dart cycles of
every split vertex, cut open at the channel mouth.  Sewing then glues
the banks back with a shift of one step, forward or backward, which is
what makes the composite change face degrees.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    CornerMismatch,
    InvalidWalk,
    LengthMismatch,
    NotDangling,
    NotDigon,
)
from .maps import PlaneMap


class Workspace:
    """Mutable dart structure with marker transport."""

    def __init__(self, m: PlaneMap) -> None:
        self.twin: dict[int, int] = dict(enumerate(m.twin))
        self.next: dict[int, int] = dict(enumerate(m.next))
        self.markers: dict[int, list] = {}
        self._fresh = m.n_darts

    def new_dart(self) -> int:
        d = self._fresh
        self._fresh += 1
        return d

    def sigma(self, d: int) -> int:
        return self.next[self.twin[d]]

    def prev_of(self, d: int) -> int:
        e = d
        while self.next[e] != d:
            e = self.next[e]
        return e

    def sigma_inv(self, d: int) -> int:
        return self.twin[self.prev_of(d)]

    def rotation_from(self, d: int) -> list[int]:
        out = [d]
        while (e := self.sigma(out[-1])) != d:
            out.append(e)
        return out

    def contour_from(self, d: int) -> list[int]:
        out = [d]
        while (e := self.next[out[-1]]) != d:
            out.append(e)
        return out

    def marks_of(self, d: int) -> list:
        return self.markers.setdefault(d, [])

    def delete(self, d: int) -> None:
        assert not self.markers.get(d), f"dart {d} dies carrying markers"
        del self.twin[d]
        del self.next[d]
        self.markers.pop(d, None)

    def add_marker(self, d: int, token, rank: int | None = None) -> None:
        lst = self.marks_of(d)
        lst.insert(len(lst) if rank is None else rank, token)

    def find_marker(self, token) -> tuple[int, int]:
        """Anchor dart and rank of a token; raises KeyError when absent."""
        for d, lst in self.markers.items():
            if token in lst:
                return d, lst.index(token)
        raise KeyError(token)


@dataclass
class Slit:
    """Bookkeeping of one slit walk.

    walk[k] is the left-bank copy of the k-th walk dart (original id),
    right_old[k] its old twin (right-bank copy, reversed), nl[k] and
    nr[k] the fresh twins.  banks_left[j] and banks_right[j] are the
    dart cycles of the two copies of walk vertex j, each listed from
    the channel mouth; for a blind slit the single cycle of the far
    vertex is in banks_left[-1].
    """

    walk: tuple[int, ...]
    right_old: tuple[int, ...]
    nl: tuple[int, ...]
    nr: tuple[int, ...]
    entry_dart: int
    exit_dart: int | None
    banks_left: list[list[int]] = field(default_factory=list)
    banks_right: list[list[int]] = field(default_factory=list)
    # set by slit_pinched: which bank the middle strip joined, and the
    # middle darts themselves
    side: str | None = None
    middles: frozenset = frozenset()

    @property
    def length(self) -> int:
        return len(self.walk)


def _arc(ws: Workspace, start: int, stop: int) -> list[int]:
    """Clockwise rays from start up to but not including stop."""
    out = []
    d = start
    while d != stop:
        out.append(d)
        d = ws.sigma(d)
    return out


def slit(
    ws: Workspace,
    walk,
    entry: tuple[int, int],
    exit: tuple[int, int] | None,
) -> Slit:
    """Cut along a self-avoiding walk of darts.

    entry is (dart, split): the cut starts inside the corner before
    that dart, with the first split markers of the corner going to the
    right bank.  exit is the same at the far end, or None for a blind
    slit that leaves the far vertex whole.  Walk vertices must be
    pairwise distinct and the corners must sit on the walk ends.
    """
    p = tuple(walk)
    if not p:
        raise InvalidWalk("empty walk")
    d_c, entry_split = entry
    for k, dart in enumerate(p):
        if dart not in ws.twin:
            raise InvalidWalk(f"unknown dart {dart}")
        if k and ws.twin[p[k - 1]] not in ws.rotation_from(dart):
            raise InvalidWalk("walk darts do not chain head to tail")
    vertex_keys = [frozenset(ws.rotation_from(d)) for d in p]
    vertex_keys.append(frozenset(ws.rotation_from(ws.twin[p[-1]])))
    if len(set(vertex_keys)) != len(vertex_keys):
        raise InvalidWalk("walk revisits a vertex")
    if d_c not in vertex_keys[0]:
        raise CornerMismatch("entry corner is not at the walk start")
    if exit is not None:
        d_ex, exit_split = exit
        if d_ex not in vertex_keys[-1]:
            raise CornerMismatch("exit corner is not at the walk end")
    else:
        d_ex = None

    l = len(p)
    twin_old = tuple(ws.twin[d] for d in p)
    nl = tuple(ws.new_dart() for _ in p)
    nr = tuple(ws.new_dart() for _ in p)

    # capture the vertex cycles of the banks before mutating
    banks_left: list[list[int]] = []
    banks_right: list[list[int]] = []
    banks_left.append(
        [d_c] + _arc(ws, ws.sigma(d_c), p[0]) + [p[0]]
        if d_c != p[0]
        else [p[0]]
    )
    banks_right.append([nr[0]] + _arc(ws, ws.sigma(p[0]), d_c))
    for k in range(l - 1):
        left = [nl[k]] + _arc(ws, ws.sigma(twin_old[k]), p[k + 1]) + [p[k + 1]]
        right = [nr[k + 1]] + _arc(ws, ws.sigma(p[k + 1]), twin_old[k])
        right.append(twin_old[k])
        banks_left.append(left)
        banks_right.append(right)
    if d_ex is not None:
        far_left = [nl[-1]] + _arc(ws, ws.sigma(twin_old[-1]), d_ex)
        if d_ex == twin_old[-1]:
            far_right = [d_ex]
        else:
            far_right = [d_ex] + _arc(ws, ws.sigma(d_ex), twin_old[-1])
            far_right.append(twin_old[-1])
        banks_left.append(far_left)
        banks_right.append(far_right)
    else:
        tip = [nl[-1]] + _arc(ws, ws.sigma(twin_old[-1]), twin_old[-1])
        tip.append(twin_old[-1])
        banks_left.append(tip)
        banks_right.append([])

    y = ws.prev_of(d_c)
    x = ws.prev_of(d_ex) if d_ex is not None else None

    # double the walk
    for k in range(l):
        ws.twin[p[k]] = nl[k]
        ws.twin[nl[k]] = p[k]
        ws.twin[twin_old[k]] = nr[k]
        ws.twin[nr[k]] = twin_old[k]
    for k in range(l - 1):
        ws.next[nr[k]] = nr[k + 1]
        ws.next[nl[k + 1]] = nl[k]
    ws.next[y] = nr[0]
    ws.next[nl[0]] = d_c
    if d_ex is not None:
        ws.next[nr[-1]] = d_ex
        ws.next[x] = nl[-1]
    else:
        ws.next[nr[-1]] = nl[-1]

    # split the markers of the mouth corners
    entry_marks = ws.markers.get(d_c, [])
    if entry_split:
        ws.markers[nr[0]] = entry_marks[:entry_split]
        ws.markers[d_c] = entry_marks[entry_split:]
    if d_ex is not None and exit_split:
        exit_marks = ws.markers.get(d_ex, [])
        ws.markers[nl[-1]] = exit_marks[:exit_split]
        ws.markers[d_ex] = exit_marks[exit_split:]

    s = Slit(p, twin_old, nl, nr, d_c, d_ex, banks_left, banks_right)
    for j, bank in enumerate(s.banks_left + s.banks_right):
        if bank:
            assert ws.rotation_from(bank[0]) == bank, (
                f"bank {j} of the slit is not a vertex cycle"
            )
    return s


def slit_pinched(
    ws: Workspace,
    spine_a,
    chain,
    spine_b,
    entry: tuple[int, int],
    exit: tuple[int, int],
    side: str,
) -> Slit:
    """Cut along a walk that doubles back through a dangling chain.

    The walk runs spine_a, descends the chain, climbs the same edges
    back and leaves along spine_b; when a spine is empty its mouth
    corner sits at the attachment vertex where the chain hangs.  Each
    chain edge splits in three: two outer copies keeping the original
    darts and a fresh middle pair, which lands on the left or right
    bank according to side.  The chain's far end stays a dangling tip
    carried by the outer copy, with the bare middle tip next to it.
    With both spines empty, entry and exit may even name the same
    corner; the two splits then cut one token list in three, and
    their order must agree with side.
    """
    sa, ch, sb = list(spine_a), list(chain), list(spine_b)
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    if not ch:
        raise InvalidWalk("a pinched slit needs a nonempty chain")
    d_c, entry_split = entry
    d_ex, exit_split = exit
    a, n_ch, b = len(sa), len(ch), len(sb)
    up = [ws.twin[x] for x in reversed(ch)]
    p = tuple(sa + ch + up + sb)
    length = len(p)
    for k, dart in enumerate(p):
        if dart not in ws.twin:
            raise InvalidWalk(f"unknown dart {dart}")
        if k and ws.twin[p[k - 1]] not in ws.rotation_from(dart):
            raise InvalidWalk("walk darts do not chain head to tail")
    down_keys = [frozenset(ws.rotation_from(d)) for d in sa + ch]
    down_keys.append(frozenset(ws.rotation_from(ws.twin[ch[-1]])))
    side_keys = [frozenset(ws.rotation_from(ws.twin[d])) for d in sb]
    if len(set(down_keys)) != len(down_keys):
        raise InvalidWalk("walk revisits a vertex")
    if len(set(side_keys)) != len(side_keys) or set(side_keys) & set(down_keys):
        raise InvalidWalk("walk revisits a vertex")
    if d_c not in down_keys[0]:
        raise CornerMismatch("entry corner is not at the walk start")
    exit_key = side_keys[-1] if sb else down_keys[a]
    if d_ex not in exit_key:
        raise CornerMismatch("exit corner is not at the walk end")
    same_corner = a == 0 and b == 0 and d_c == d_ex
    if same_corner:
        ordered = (
            exit_split <= entry_split
            if side == "left"
            else entry_split <= exit_split
        )
        assert ordered, "corner split order contradicts the pinch side"

    told = tuple(ws.twin[d] for d in p)
    x_new = [ws.new_dart() for _ in ch]
    y_new = [ws.new_dart() for _ in ch]
    mdn = [ws.new_dart() for _ in ch]
    mup = [ws.new_dart() for _ in ch]
    spine_pos = list(range(a)) + list(range(a + 2 * n_ch, length))
    snl = {s: ws.new_dart() for s in spine_pos}
    snr = {s: ws.new_dart() for s in spine_pos}

    nl = [0] * length
    nr = [0] * length
    for s in spine_pos:
        nl[s], nr[s] = snl[s], snr[s]
    for t in range(n_ch):
        pdn, pup = a + t, a + 2 * n_ch - 1 - t
        if side == "left":
            nl[pdn], nr[pdn] = x_new[t], mdn[t]
            nl[pup], nr[pup] = y_new[t], mup[t]
        else:
            nl[pdn], nr[pdn] = mup[t], y_new[t]
            nl[pup], nr[pup] = mdn[t], x_new[t]

    def gap(after: int, stop: int) -> list[int]:
        # original rays strictly between two cut points; empty when the
        # points coincide, unlike the wrapping _arc
        return [] if after == stop else _arc(ws, ws.sigma(after), stop)

    # capture every vertex copy as a ray cycle before mutating
    cycles: list[list[int]] = []
    if a:
        cycles.append(
            [d_c] + gap(d_c, p[0]) + [p[0]] if d_c != p[0] else [p[0]]
        )
        cycles.append([nr[0]] + _arc(ws, ws.sigma(p[0]), d_c))
    for s in range(a - 1):
        cycles.append([nl[s]] + gap(told[s], p[s + 1]) + [p[s + 1]])
        cycles.append([nr[s + 1]] + gap(p[s + 1], told[s]) + [told[s]])
    for t in range(n_ch - 1):
        et = told[a + t]
        cycles.append([x_new[t]] + gap(et, ch[t + 1]) + [ch[t + 1]])
        cycles.append([y_new[t + 1]] + gap(ch[t + 1], et) + [et])
        cycles.append([mup[t], mdn[t + 1]])
    e_last = told[a + n_ch - 1]
    cycles.append([x_new[-1]] + _arc(ws, ws.sigma(e_last), e_last) + [e_last])
    cycles.append([mup[-1]])

    d1 = ch[0]
    dep = sb[0] if b else None
    base_in = told[a - 1] if a else d_c
    out_anchor = dep if b else d_ex
    nr_b = nr[a + 2 * n_ch] if b else None
    if same_corner:
        cycles.append(
            [d_c] + gap(d_c, d1) + [d1] if d_c != d1 else [d1]
        )
        cycles.append([y_new[0]] + _arc(ws, ws.sigma(d1), d_c))
        cycles.append([mdn[0]])
    elif side == "left":
        if a:
            cycles.append([nl[a - 1]] + gap(base_in, d1) + [d1])
        else:
            cycles.append(
                [d_c] + gap(d_c, d1) + [d1] if d_c != d1 else [d1]
            )
        cycles.append(
            [y_new[0]] + gap(d1, out_anchor) + ([dep] if b else [])
        )
        fused = [mdn[0], nr_b if b else d_ex]
        fused += gap(out_anchor, base_in)
        if a and not (b == 0 and d_ex == base_in):
            fused.append(base_in)
        cycles.append(fused)
    elif b == 0 and a and d_ex == base_in:
        # exit corner right where the walk first arrives: the arrival
        # ray sits alone between the two cuts, next to the middle
        cycles.append([nl[a - 1]] + gap(base_in, d1) + [d1])
        cycles.append([y_new[0]] + gap(d1, base_in))
        cycles.append([mdn[0], d_ex])
    else:
        lead = nl[a - 1] if a else d_c
        fused = [lead] + gap(base_in, out_anchor)
        if b and dep != lead:
            fused.append(dep)
        fused.append(mdn[0])
        cycles.append(fused)
        head = [nr_b] if b else ([d_ex] if d_ex != d1 else [])
        cycles.append(head + gap(out_anchor, d1) + [d1])
        cap = [y_new[0]] + gap(d1, base_in)
        if a:
            cap.append(base_in)
        cycles.append(cap)

    for s in range(a + 2 * n_ch, length - 1):
        cycles.append([nl[s]] + gap(told[s], p[s + 1]) + [p[s + 1]])
        cycles.append([nr[s + 1]] + gap(p[s + 1], told[s]) + [told[s]])
    if b:
        cycles.append([nl[-1]] + _arc(ws, ws.sigma(told[-1]), d_ex))
        if d_ex == told[-1]:
            cycles.append([d_ex])
        else:
            cycles.append([d_ex] + gap(d_ex, told[-1]) + [told[-1]])

    # triple the chain, double the spines
    for t in range(n_ch):
        dt, et = ch[t], told[a + t]
        ws.twin[dt], ws.twin[x_new[t]] = x_new[t], dt
        ws.twin[et], ws.twin[y_new[t]] = y_new[t], et
        ws.twin[mdn[t]], ws.twin[mup[t]] = mup[t], mdn[t]
    for s in spine_pos:
        ws.twin[p[s]], ws.twin[snl[s]] = snl[s], p[s]
        ws.twin[told[s]], ws.twin[snr[s]] = snr[s], told[s]
    for cyc in cycles:
        for q, ray in enumerate(cyc):
            ws.next[ws.twin[ray]] = cyc[(q + 1) % len(cyc)]

    if same_corner:
        marks = ws.markers.get(d_c, [])
        if side == "left":
            far, near = marks[:exit_split], marks[exit_split:entry_split]
            stay = marks[entry_split:]
        else:
            near, far = marks[:entry_split], marks[entry_split:exit_split]
            stay = marks[exit_split:]
        if far:
            ws.markers[nl[-1]] = far
        if near:
            ws.markers[nr[0]] = near
        ws.markers[d_c] = stay
    else:
        entry_marks = ws.markers.get(d_c, [])
        if entry_split:
            ws.markers[nr[0]] = entry_marks[:entry_split]
            ws.markers[d_c] = entry_marks[entry_split:]
        exit_marks = ws.markers.get(d_ex, [])
        if exit_split:
            ws.markers[nl[-1]] = exit_marks[:exit_split]
            ws.markers[d_ex] = exit_marks[exit_split:]

    s = Slit(
        p,
        told,
        tuple(nl),
        tuple(nr),
        d_c,
        d_ex,
        cycles,
        [],
        side=side,
        middles=frozenset(mdn + mup),
    )
    for j, bank in enumerate(s.banks_left):
        assert ws.rotation_from(bank[0]) == bank, (
            f"copy {j} of the pinched slit is not a vertex cycle"
        )
    return s


def glue(ws: Workspace, a: int, b: int) -> None:
    """Identify two edges across the gap faced by darts a and b.

    Darts a and b die; their twins pair up.  Merges the corner before
    a into the corner before next(b) and symmetrically.
    """
    na, nb = ws.next[a], ws.next[b]
    assert na != a and nb != b, "cannot glue onto a degree-one contour"
    pa, pb = ws.prev_of(a), ws.prev_of(b)
    ta, tb = ws.twin[a], ws.twin[b]
    if nb != a:
        ws.markers[nb] = ws.markers.pop(a, []) + ws.markers.get(nb, [])
        ws.next[pa] = nb
    else:
        assert not ws.markers.get(a), "markers stranded on a glued hairpin"
        ws.markers.pop(a, None)
    if na != b:
        ws.markers[na] = ws.markers.pop(b, []) + ws.markers.get(na, [])
        ws.next[pb] = na
    else:
        assert not ws.markers.get(b), "markers stranded on a glued hairpin"
        ws.markers.pop(b, None)
    ws.twin[ta] = tb
    ws.twin[tb] = ta
    ws.delete(a)
    ws.delete(b)


def weld(ws: Workspace, bank_a: list[int], bank_b: list[int]) -> None:
    """Merge two vertices by splicing their cycles at the mouths."""
    if not bank_a or not bank_b:
        raise LengthMismatch("weld needs two nonempty vertex cycles")
    ea, eb = bank_a[-1], bank_b[-1]
    assert ws.sigma(ea) == bank_a[0] and ws.sigma(eb) == bank_b[0], (
        "weld banks are not closed vertex cycles"
    )
    ws.next[ws.twin[ea]] = bank_b[0]
    ws.next[ws.twin[eb]] = bank_a[0]


def sew_forward(ws: Workspace, s: Slit) -> None:
    """Reglue with the left bank shifted one step forward.

    Identifies left copy t with right copy t+1; nr[0] and nl[-1]
    survive.  A length-one walk has nothing to glue and merges the
    near-left vertex with the far-right vertex directly.
    """
    if s.exit_dart is None:
        raise InvalidWalk("forward sew needs a two-ended slit")
    if s.length == 1:
        weld(ws, s.banks_left[0], s.banks_right[1])
        return
    for t in range(s.length - 1):
        glue(ws, s.nl[t], s.nr[t + 1])


def sew_backward(ws: Workspace, s: Slit) -> None:
    """Reglue with the left bank shifted one step backward.

    Identifies left copy k with right copy k-1; nl[0] and nr[-1]
    survive.  Works for blind slits, where the far vertex was never
    split; a length-one walk again reduces to a single weld.  The
    tokens of the exit-left piece always end in the corner before
    nr[-1]: the glue cascade delivers them there, and the length-one
    case moves them explicitly because nl[0] doubles as the far left
    copy.
    """
    if s.length == 1:
        weld(ws, s.banks_left[1], s.banks_right[0])
        if s.exit_dart is not None and ws.markers.get(s.nl[0]):
            ws.markers[s.nr[0]] = (
                ws.markers.pop(s.nl[0]) + ws.markers.get(s.nr[0], [])
            )
        return
    for k in range(1, s.length):
        glue(ws, s.nl[k], s.nr[k - 1])


def sew_onto(ws: Workspace, s: Slit, r0: int) -> None:
    """Forward-shifted sew with dart r0 playing the zeroth right copy.

    Glues the edge of r0 against right copy 0, then left copy t
    against right copy t+1; among the fresh darts only nl[-1]
    survives, taking over the contour position before the exit dart.
    """
    if s.exit_dart is None:
        raise InvalidWalk("sewing onto an edge needs a two-ended slit")
    glue(ws, r0, s.nr[0])
    for t in range(s.length - 1):
        glue(ws, s.nl[t], s.nr[t + 1])


def suppress_pendant(ws: Workspace, beta: int, out_marker=None) -> int:
    """Erase the pendant edge whose leaf emits beta.

    Markers wrapped around the leaf land at the position the edge
    occupied, followed by out_marker when given.  Returns the dart
    whose preceding corner receives them.
    """
    if beta not in ws.twin or ws.sigma(beta) != beta:
        raise NotDangling(f"dart {beta} does not leave a leaf")
    alpha = ws.twin[beta]
    assert ws.next[alpha] == beta
    target = ws.next[beta]
    if target == alpha:
        raise NotDangling("the pendant edge is the whole component")
    tokens = ws.markers.pop(alpha, []) + ws.markers.pop(beta, [])
    if out_marker is not None:
        tokens.append(out_marker)
    ws.markers[target] = tokens + ws.markers.get(target, [])
    ws.next[ws.prev_of(alpha)] = target
    ws.delete(alpha)
    ws.delete(beta)
    return target


ARROW_KIND = "arrow"


def arrow(i: int) -> tuple:
    """Marker token for the marked corner of face i."""
    return (ARROW_KIND, i)


def is_arrow(token) -> bool:
    return isinstance(token, tuple) and bool(token) and token[0] == ARROW_KIND


def workspace_with_arrows(m: PlaneMap) -> Workspace:
    ws = Workspace(m)
    for i, d in enumerate(m.marked, start=1):
        ws.add_marker(d, arrow(i))
    return ws


def finish(ws: Workspace) -> tuple[PlaneMap, dict[int, int], dict[int, list]]:
    """Rebuild a plane map from the workspace.

    Faces are labelled by the arrow markers found on their contours;
    every contour must carry exactly one.  Returns the map, the dart
    renaming, and the surviving corner token lists (arrows included,
    in corner order) keyed by new dart id.
    """
    old = sorted(ws.twin)
    rename = {d: k for k, d in enumerate(old)}
    twin = [rename[ws.twin[d]] for d in old]
    next_ = [rename[ws.next[d]] for d in old]

    face = [0] * len(old)
    marked_at: dict[int, int] = {}
    seen: set[int] = set()
    for d in old:
        if d in seen:
            continue
        contour = ws.contour_from(d)
        seen.update(contour)
        labels = [
            (e, tok[1])
            for e in contour
            for tok in ws.markers.get(e, [])
            if is_arrow(tok)
        ]
        assert len(labels) == 1, (
            f"contour of {d} carries {len(labels)} arrows, wanted 1"
        )
        e, i = labels[0]
        assert i not in marked_at, f"face label {i} used twice"
        marked_at[i] = rename[e]
        for e in contour:
            face[rename[e]] = i
    r = len(marked_at)
    assert sorted(marked_at) == list(range(1, r + 1)), (
        f"face labels are {sorted(marked_at)}"
    )
    marked = [marked_at[i] for i in range(1, r + 1)]
    m = PlaneMap(twin, next_, face, marked)
    corners = {
        rename[d]: list(toks) for d, toks in ws.markers.items() if toks
    }
    return m, rename, corners


def edge_to_digon(m: PlaneMap, edge_index: int, mark_side: int) -> PlaneMap:
    """Split an edge in two and insert a digon face between the copies.

    The new face gets the next free label; mark_side 0 marks its
    corner on the side of the lower dart of the edge, 1 the other.
    """
    if mark_side not in (0, 1):
        raise ValueError("mark_side must be 0 or 1")
    edges = m.edges()
    if not 0 <= edge_index < len(edges):
        raise ValueError(f"no edge {edge_index}")
    d, t = edges[edge_index]
    n = m.n_darts
    nl, nt = n, n + 1
    twin = list(m.twin) + [0, 0]
    next_ = list(m.next) + [0, 0]
    face = list(m.face) + [m.n_faces + 1] * 2
    twin[d], twin[nl] = nl, d
    twin[t], twin[nt] = nt, t
    next_[nl], next_[nt] = nt, nl
    marked = list(m.marked) + [nl if mark_side == 0 else nt]
    return PlaneMap(twin, next_, face, marked)


def digon_to_edge(m: PlaneMap, i: int) -> tuple[PlaneMap, int, int]:
    """Erase a digon face, merging its two edges into one.

    Returns the new map with faces above i shifted down, the canonical
    index of the merged edge, and the mark side that edge_to_digon
    would need to restore the digon.
    """
    if not 1 <= i <= m.n_faces or m.degree(i) != 2:
        raise NotDigon(f"face {i} is not a digon")
    a, b = m.contour(i)
    ta, tb = m.twin[a], m.twin[b]
    if ta == b:
        raise NotDigon("the digon is the whole map")
    old = [d for d in range(m.n_darts) if d not in (a, b)]
    rename = {d: k for k, d in enumerate(old)}
    # ta and tb pair up; nothing else had a or b as twin or next
    twin = [
        rename[{ta: tb, tb: ta}.get(d, m.twin[d])] for d in old
    ]
    next_ = [rename[m.next[d]] for d in old]
    face = [m.face[d] - (m.face[d] > i) for d in old]
    marked = [
        rename[d] for j, d in enumerate(m.marked, start=1) if j != i
    ]
    m2 = PlaneMap(twin, next_, face, marked)
    lo = min(rename[ta], rename[tb])
    edge_index = m2.edges().index((lo, m2.twin[lo]))
    # contours start at the marked dart, so a is the marked corner's
    # dart and its twin ta must become the lower copy for side 0
    side = 0 if rename[ta] == lo else 1
    return m2, edge_index, side
