"""Command line surface: counting, enumeration, sampling, checks, export.

Every subcommand is deterministic given its flags (plus the seed for
sample).  Failed checks and bad inputs produce a diagnostic line on
stderr and a nonzero exit status.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Iterator

from .bijections import (
    grow_same,
    grow_two,
    shrink_same,
    shrink_two,
    transfer1_left,
    transfer1_right,
    transfer_left,
    transfer_right,
)
from .counting import (
    Identity,
    check_type,
    classify,
    edge_count,
    identity_sides,
    identity_target,
    odd_positions,
    tutte_count,
    vertex_count,
)
from .enumerator import DEFAULT_MAX_EDGES, enumerate_decorations, enumerate_maps
from .errors import BadParity, PlaneMapError
from .maps import PlaneMap
from .metric import classify_dart, distances
from .sampler import sample


def parse_type(text: str) -> tuple[int, ...]:
    try:
        return check_type(text.split(","))
    except (ValueError, PlaneMapError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def admissible_types(max_edges: int) -> Iterator[tuple[int, ...]]:
    """All degree tuples with at most max_edges edges, by size then lex.

    Covers every composition of 2, 4, ..., 2*max_edges with zero or
    two odd parts: exactly the types carrying plane maps.
    """

    def compositions(total: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if total == 0:
            yield prefix
            return
        for part in range(1, total + 1):
            yield from compositions(total - part, prefix + (part,))

    for e in range(1, max_edges + 1):
        for t in compositions(2 * e, ()):
            if sum(x % 2 for x in t) in (0, 2):
                yield t


def to_dot(m: PlaneMap, name: str = "map") -> str:
    """Graph-description text: vertices, edges, face labels, marks.

    Vertices become nodes and edges become undirected edges labelled
    with the faces on their two sides.  Each face contributes one
    box node joined to the vertex of its marked corner by a dashed
    arrowhead edge, the file analogue of marking the corner.
    """
    vx = {}
    for d in range(m.n_darts):
        vx[d] = m.vertex_of(d)
    lines = [f"graph {name} {{"]
    for v in range(m.n_vertices):
        lines.append(f'  v{v} [label="{v}"];')
    for d, t in m.edges():
        lines.append(
            f"  v{vx[d]} -- v{vx[t]} "
            f'[label="f{m.face_of(d)}|f{m.face_of(t)}"];'
        )
    for i in range(1, m.n_faces + 1):
        mark = m.marked[i - 1]
        lines.append(
            f'  f{i} [shape=box, label="face {i} (deg {m.degree(i)})"];'
        )
        lines.append(
            f"  f{i} -- v{vx[mark]} "
            "[style=dashed, dir=forward, arrowhead=normal, color=red];"
        )
    lines.append("}")
    return "\n".join(lines)


def _emit(m: PlaneMap, fmt: str, name: str, out) -> None:
    if fmt == "json":
        print(m.to_json(), file=out)
    elif fmt == "code":
        print(m.canonical_code(), file=out)
    else:
        print(to_dot(m, name), file=out)


def cmd_count(args, out) -> int:
    t = args.type
    cls = classify(t)
    print(
        f"E={edge_count(t)} V={vertex_count(t)} class={cls} M={tutte_count(t)}",
        file=out,
    )
    return 0


def cmd_enumerate(args, out) -> int:
    maps = enumerate_maps(args.type, max_edges=args.max_edges)
    for m in maps:
        _emit(m, args.format, "map", out)
    print(f"count={len(maps)}", file=out)
    return 0


def cmd_sample(args, out) -> int:
    rng = random.Random(args.seed)
    for i in range(args.count):
        _emit(sample(args.type, rng), args.format, f"sample{i}", out)
    return 0


def cmd_export(args, out) -> int:
    source = sys.stdin if args.input == "-" else open(args.input)
    try:
        n = 0
        for line in source:
            line = line.strip()
            if not line or line.startswith("count="):
                continue
            _emit(PlaneMap.from_json(line), args.format, f"map{n}", out)
            n += 1
    finally:
        if source is not sys.stdin:
            source.close()
    print(f"exported {n} maps", file=out)
    return 0


def _lhs_key(m: PlaneMap, e: int, c: int, c2: int) -> tuple:
    p = m.canonical_relabeling()
    d, t = m.edges()[e]
    return (m.canonical_code(), min(p[d], p[t]), c, c2)


def _rhs_key(m: PlaneMap, v: int, h: int, h2: int) -> tuple:
    p = m.canonical_relabeling()
    vid = min(p[d] for d in m.vertex_darts(v))
    return (m.canonical_code(), vid, p[h], p[h2])


def _transfer_key(m: PlaneMap, slot: int, dart: int) -> tuple:
    p = m.canonical_relabeling()
    return (m.canonical_code(), slot, p[dart])


def _vertex_key(m: PlaneMap, v: int, dart: int) -> tuple:
    p = m.canonical_relabeling()
    vid = min(p[d] for d in m.vertex_darts(v))
    return (m.canonical_code(), vid, p[dart])


def cmd_verify_identities(args, out) -> int:
    k = args.max_edges
    failures = 0
    checked = 0
    for t in admissible_types(k):
        for ident in Identity:
            try:
                identity_target(ident, t)
            except BadParity:
                continue
            lhs, rhs = identity_sides(ident, t)
            checked += 1
            if lhs != rhs:
                failures += 1
                print(f"FAIL {ident.value} {t}: {lhs} != {rhs}", file=out)
    print(f"identity arithmetic: {checked} instances checked", file=out)
    if k <= DEFAULT_MAX_EDGES:
        card = 0
        for t in admissible_types(k):
            for ident in Identity:
                try:
                    tt = identity_target(ident, t)
                except BadParity:
                    continue
                lhs, rhs = identity_sides(ident, t)
                nl = sum(
                    len(enumerate_decorations(m, ident, "lhs"))
                    for m in enumerate_maps(t, max_edges=k)
                )
                nr = sum(
                    len(enumerate_decorations(m, ident, "rhs"))
                    for m in enumerate_maps(tt, max_edges=k + 1)
                )
                card += 1
                if (nl, nr) != (lhs, rhs):
                    failures += 1
                    print(
                        f"FAIL {ident.value} {t}: enumerated ({nl}, {nr}), "
                        f"formula ({lhs}, {rhs})",
                        file=out,
                    )
        print(f"set cardinalities: {card} instances checked", file=out)
    if failures:
        print(f"error: {failures} identity checks failed", file=sys.stderr)
        return 1
    print("all identity checks passed", file=out)
    return 0


def _roundtrip_same(t, report) -> int:
    bad = 0
    for m in enumerate_maps(t):
        for (e, c, c2) in enumerate_decorations(m, Identity.TWO_CORNERS_SAME_FACE, "lhs"):
            m2, v, h, h2, case, _ = grow_same(m, e, c, c2)
            m3, e3, c3, c23, case3, _ = shrink_same(m2, v, h, h2)
            if _lhs_key(m3, e3, c3, c23) != _lhs_key(m, e, c, c2) or case3 != case:
                bad += report(f"grow_same/shrink_same at {t} {(e, c, c2)}")
    tt = identity_target(Identity.TWO_CORNERS_SAME_FACE, t)
    for m in enumerate_maps(tt, max_edges=edge_count(tt)):
        for (v, h, h2) in enumerate_decorations(m, Identity.TWO_CORNERS_SAME_FACE, "rhs"):
            m2, e, c, c2, case, _ = shrink_same(m, v, h, h2)
            m3, v3, h3, h23, case3, _ = grow_same(m2, e, c, c2)
            if _rhs_key(m3, v3, h3, h23) != _rhs_key(m, v, h, h2) or case3 != case:
                bad += report(f"shrink_same/grow_same at {tt} {(v, h, h2)}")
    return bad


def _roundtrip_two(t, report) -> int:
    bad = 0
    for m in enumerate_maps(t):
        for (e, c, c2) in enumerate_decorations(m, Identity.CORNER_EACH_TWO_FACES, "lhs"):
            m2, v, h, h2, case, _ = grow_two(m, e, c, c2)
            m3, e3, c3, c23, case3, _ = shrink_two(m2, v, h, h2)
            if _lhs_key(m3, e3, c3, c23) != _lhs_key(m, e, c, c2) or case3 != case:
                bad += report(f"grow_two/shrink_two at {t} {(e, c, c2)}")
    tt = identity_target(Identity.CORNER_EACH_TWO_FACES, t)
    for m in enumerate_maps(tt, max_edges=edge_count(tt)):
        for (v, h, h2) in enumerate_decorations(m, Identity.CORNER_EACH_TWO_FACES, "rhs"):
            m2, e, c, c2, case, _ = shrink_two(m, v, h, h2)
            m3, v3, h3, h23, case3, _ = grow_two(m2, e, c, c2)
            if _rhs_key(m3, v3, h3, h23) != _rhs_key(m, v, h, h2) or case3 != case:
                bad += report(f"shrink_two/grow_two at {tt} {(v, h, h2)}")
    return bad


def _roundtrip_transfer(t, report) -> int:
    bad = 0
    r = len(t)
    for m in enumerate_maps(t):
        for (c, h2) in enumerate_decorations(m, Identity.FACE_TO_FACE, "lhs"):
            m2, s2, d2, _ = transfer_left(m, 1, r, c, h2)
            m3, c3, h3, _ = transfer_right(m2, r, 1, s2, d2)
            if _transfer_key(m3, c3, h3) != _transfer_key(m, c, h2):
                bad += report(f"transfer_left/right at {t} {(c, h2)}")
    tt = identity_target(Identity.FACE_TO_FACE, t)
    for m in enumerate_maps(tt, max_edges=edge_count(tt)):
        for (c2, h) in enumerate_decorations(m, Identity.FACE_TO_FACE, "rhs"):
            m2, c, h2, _ = transfer_right(m, r, 1, c2, h)
            m3, s3, d3, _ = transfer_left(m2, 1, r, c, h2)
            if _transfer_key(m3, s3, d3) != _transfer_key(m, c2, h):
                bad += report(f"transfer_right/left at {tt} {(c2, h)}")
    return bad


def _roundtrip_unit(t, report) -> int:
    bad = 0
    r = len(t)
    for m in enumerate_maps(t):
        for (c,) in enumerate_decorations(m, Identity.UNIT_FACE, "lhs"):
            m2, v, h, _ = transfer1_right(m, 1, r, c)
            m3, c3, _ = transfer1_left(m2, 1, r, v, h)
            if (m3.canonical_code(), c3) != (m.canonical_code(), c):
                bad += report(f"transfer1_right/left at {t} {(c,)}")
    tt = identity_target(Identity.UNIT_FACE, t)
    for m in enumerate_maps(tt, max_edges=edge_count(tt)):
        for (v, h) in enumerate_decorations(m, Identity.UNIT_FACE, "rhs"):
            m2, c, _ = transfer1_left(m, 1, r, v, h)
            m3, v3, h3, _ = transfer1_right(m2, 1, r, c)
            if _vertex_key(m3, v3, h3) != _vertex_key(m, v, h):
                bad += report(f"transfer1_left/right at {tt} {(v, h)}")
    return bad


def _transfer_applicable(t) -> bool:
    odd = odd_positions(t)
    return len(t) >= 2 and t[-1] >= 2 and (not odd or len(t) in odd)


def cmd_verify_roundtrip(args, out) -> int:
    k = args.max_edges
    failures = 0

    def report(msg: str) -> int:
        nonlocal failures
        print(f"FAIL {msg}", file=out)
        return 1

    trips = 0
    for t in admissible_types(k):
        odd = odd_positions(t)
        if not odd:
            trips += 1
            failures += _roundtrip_same(t, report)
            if len(t) >= 2:
                trips += 1
                failures += _roundtrip_two(t, report)
        if _transfer_applicable(t):
            trips += 1
            failures += _roundtrip_transfer(t, report)
        if len(t) >= 2 and t[-1] == 1 and len(odd) == 2:
            trips += 1
            failures += _roundtrip_unit(t, report)
    print(f"round trips: {trips} family sweeps", file=out)
    if failures:
        print(f"error: {failures} round trips failed", file=sys.stderr)
        return 1
    print("all round trips passed", file=out)
    return 0


def cmd_verify_props(args, out) -> int:
    k = args.max_edges
    failures = 0
    n_maps = 0
    for t in admissible_types(k):
        odd = set(odd_positions(t))
        for m in enumerate_maps(t, max_edges=k):
            n_maps += 1
            for v in range(m.n_vertices):
                dist = distances(m, v)
                for i in range(1, m.n_faces + 1):
                    deg = m.degree(i)
                    kinds = {"toward": 0, "away": 0, "parallel": 0}
                    for d in m.contour(i):
                        kinds[classify_dart(m, d, v, dist)] += 1
                    if not odd:
                        ok = kinds["parallel"] == 0 and kinds["toward"] == deg // 2
                    elif i in odd:
                        ok = (
                            kinds["parallel"] == 1
                            and kinds["toward"] == (deg - 1) // 2
                            and kinds["away"] == (deg - 1) // 2
                        )
                    else:
                        ok = (
                            kinds["parallel"] in (0, 2)
                            and kinds["toward"] == kinds["away"]
                        )
                    if not ok:
                        failures += 1
                        print(
                            f"FAIL direction census {t} face {i} vertex {v}: {kinds}",
                            file=out,
                        )
    print(f"direction censuses: {n_maps} maps swept", file=out)
    if failures:
        print(f"error: {failures} censuses failed", file=sys.stderr)
        return 1
    print("all direction censuses passed", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="planemaps",
        description="plane maps with prescribed face degrees: "
        "count, enumerate, sample, verify, export",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print E, V, parity class and map count")
    p.add_argument("--type", type=parse_type, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="stream all maps of a type")
    p.add_argument("--type", type=parse_type, required=True)
    p.add_argument("--max-edges", type=int, default=6)
    p.add_argument("--format", choices=("json", "dot", "code"), default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sample", help="draw uniform maps of a type")
    p.add_argument("--type", type=parse_type, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--format", choices=("json", "dot", "code"), default="json")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser(
        "verify-identities", help="check the four counting identities"
    )
    p.add_argument("--max-edges", type=int, default=4)
    p.set_defaults(func=cmd_verify_identities)

    p = sub.add_parser(
        "verify-roundtrip", help="run the bijection round trips exhaustively"
    )
    p.add_argument("--max-edges", type=int, default=3)
    p.set_defaults(func=cmd_verify_roundtrip)

    p = sub.add_parser(
        "verify-props", help="sweep the toward/away/parallel censuses"
    )
    p.add_argument("--max-edges", type=int, default=4)
    p.set_defaults(func=cmd_verify_props)

    p = sub.add_parser("export", help="convert serialized maps to DOT")
    p.add_argument("--input", default="-", help="file of JSON lines, - for stdin")
    p.add_argument("--format", choices=("dot",), default="dot")
    p.set_defaults(func=cmd_export)

    return ap


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except PlaneMapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
