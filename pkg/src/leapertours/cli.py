"""Command line front end: build, verify, bound, oracle, index."""
from __future__ import annotations

import argparse
import json
import sys

from .board import GIRAFFE, KNIGHT, BoardDims, Leaper, UnsupportedDims
from .tour import Tour

EXIT_OK, EXIT_INVALID, EXIT_UNSUPPORTED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved for unsupported dims here
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _ints(text, n=None):
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")
    if n is not None and len(vals) != n:
        raise argparse.ArgumentTypeError(f"expected {n} integers, got {text!r}")
    return vals


def _pair(text):
    return _ints(text, 2)


def _parser():
    p = _Parser(prog="leapertours", description="Closed leaper tours with few turns and crossings.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="construct a tour")
    b.add_argument("--width", type=int)
    b.add_argument("--height", type=int)
    b.add_argument("--dims", type=_ints, help="d1,d2,... (first two are height, width)")
    b.add_argument("--leaper", type=_pair, default=[1, 2], help="a,b (1,2 knight or 1,4 giraffe)")
    b.add_argument("--odd-missing-corner", action="store_true")
    b.add_argument("--symmetric", action="store_true")
    b.add_argument("--format", choices=["json", "text", "svg"], default="json")
    b.add_argument("--metrics", action="store_true")
    b.add_argument("--crossings", action="store_true", help="mark crossings in SVG output")
    b.add_argument("--cell-size", type=int, default=20)
    b.add_argument("--out")

    v = sub.add_parser("verify", help="check a tour JSON file ('-' for stdin)")
    v.add_argument("path", nargs="?", default="-")
    v.add_argument("--no-crossings", action="store_true")

    bd = sub.add_parser("bound", help="lower-bound computations")
    bd.add_argument("which", choices=["crossings"])
    bd.add_argument("--leaper", type=_pair, default=[1, 2])

    o = sub.add_parser("oracle", help="exhaustive search on small boards")
    o.add_argument("--width", type=int, required=True)
    o.add_argument("--height", type=int, required=True)
    o.add_argument("--metric", choices=["EXISTS", "TURNS", "CROSSINGS"], default="EXISTS")
    o.add_argument("--budget", type=int)
    o.add_argument("--leaper", type=_pair, default=[1, 2])
    o.add_argument("--missing", type=_pair, action="append", default=[])

    ix = sub.add_parser("index", help="constant-time index <-> cell queries on 2D knight tours")
    ix.add_argument("--width", type=int, required=True)
    ix.add_argument("--height", type=int, required=True)
    g = ix.add_mutually_exclusive_group(required=True)
    g.add_argument("--at", type=int)
    g.add_argument("--cell", type=_pair)
    return p


def _build(a) -> Tour:
    from . import giraffe, multidim, oddsym, tour2d

    leaper = Leaper(*a.leaper)
    if a.dims is not None:
        if a.width is not None or a.height is not None:
            raise UsageError("use either --dims or --width/--height")
        dims = BoardDims(a.dims)
    elif a.symmetric and a.width is not None and a.height is None:
        dims = BoardDims((a.width, a.width))
    elif a.width is None or a.height is None:
        raise UsageError("need --width and --height, or --dims")
    else:
        dims = BoardDims.wh(a.width, a.height)
    if leaper == GIRAFFE:
        if a.symmetric or a.odd_missing_corner:
            raise UnsupportedDims("giraffe tours have no symmetric or odd variants")
        return giraffe.build_giraffe(dims)
    if leaper != KNIGHT:
        raise UnsupportedDims(f"no construction for the ({leaper.a},{leaper.b}) leaper")
    if a.symmetric:
        if dims.ndim != 2 or dims.h != dims.w:
            raise UnsupportedDims("symmetric tours need a square board")
        return oddsym.build_symmetric(dims.w)
    if a.odd_missing_corner:
        return oddsym.build_odd(dims)
    if dims.ndim > 2:
        return multidim.build_multidim(dims)
    return tour2d.build(dims)


def _with_metrics(tour: Tour, crossings=True):
    from .metrics import metrics

    d = tour.to_dict()
    d["metrics"] = metrics(tour, crossings=crossings).to_dict()
    return d


def render_text(tour: Tour) -> str:
    """2D: grid of visit indices, top row first. Other dims: one cell per line."""
    if tour.dims.ndim != 2:
        return "\n".join(" ".join(map(str, c)) for c in tour.cells) + "\n"
    h, w = tour.dims.dims
    pos = {c: i for i, c in enumerate(tour.cells)}
    width = len(str(len(tour.cells)))
    rows = []
    for r in range(h - 1, -1, -1):
        rows.append(" ".join(str(pos[(r, c)]).rjust(width) if (r, c) in pos else ".".rjust(width)
                             for c in range(w)))
    return "\n".join(rows) + "\n"


def render_svg(tour: Tour, cell_size=20, crossings=False) -> str:
    if tour.dims.ndim != 2:
        raise UnsupportedDims("SVG output is only available for 2D tours")
    h, w = tour.dims.dims
    s = cell_size

    def xy(r, c):
        return (c + 0.5) * s, (h - 1 - r + 0.5) * s

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w * s}" height="{h * s}" '
           f'viewBox="0 0 {w * s} {h * s}">']
    out.append(f'<rect width="{w * s}" height="{h * s}" fill="white"/>')
    for r in range(h):
        for c in range(w):
            if (r + c) % 2:
                x, y = c * s, (h - 1 - r) * s
                out.append(f'<rect x="{x}" y="{y}" width="{s}" height="{s}" fill="#eeeeee"/>')
    # one polyline vertex per cell; the wrap-around move of a closed tour is a separate line
    pts = [xy(*c) for c in tour.cells]
    sw = max(1, s / 10)
    out.append('<polyline fill="none" stroke="black" stroke-width="%g" points="%s"/>'
               % (sw, " ".join(f"{x:g},{y:g}" for x, y in pts)))
    if tour.closed and len(pts) > 2:
        (x1, y1), (x2, y2) = pts[-1], pts[0]
        out.append(f'<line x1="{x1:g}" y1="{y1:g}" x2="{x2:g}" y2="{y2:g}" stroke="black" stroke-width="{sw:g}"/>')
    if crossings:
        from .metrics import crossing_points

        for r, c in crossing_points(tour):
            x, y = xy(r, c)
            out.append(f'<circle cx="{x:g}" cy="{y:g}" r="{s / 5:g}" fill="white" stroke="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _emit(text, out):
    if out:
        with open(out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _cmd_build(a):
    tour = _build(a)
    if a.format == "json":
        d = _with_metrics(tour) if a.metrics else tour.to_dict()
        text = json.dumps(d) + "\n"
    elif a.format == "text":
        text = render_text(tour)
    else:
        text = render_svg(tour, a.cell_size, a.crossings)
    _emit(text, a.out)
    if a.metrics and a.format != "json":
        from .metrics import metrics

        print(json.dumps(metrics(tour).to_dict()), file=sys.stderr)
    return EXIT_OK


def _cmd_verify(a):
    from .validator import validate

    try:
        raw = sys.stdin.read() if a.path == "-" else open(a.path).read()
        tour = Tour.from_dict(json.loads(raw))
    except (OSError, ValueError, KeyError, TypeError) as e:
        raise UsageError(f"cannot read tour: {e}")
    verdict = validate(tour, allowed_missing=tour.missing)
    out = {"verdict": verdict.to_dict()}
    if verdict.ok:
        from .metrics import metrics

        out["metrics"] = metrics(tour, crossings=not a.no_crossings).to_dict()
    print(json.dumps(out))
    return EXIT_OK if verdict.ok else EXIT_INVALID


def _cmd_bound(a):
    from .crossing_bound import crossing_bound_report

    rep = crossing_bound_report(Leaper(*a.leaper))
    print(json.dumps(rep.to_dict()))
    return EXIT_OK


def _cmd_oracle(a):
    from .oracle import TooLarge, find_closed_tour, min_metric_tour

    dims = BoardDims.wh(a.width, a.height)
    leaper = Leaper(*a.leaper)
    try:
        if a.metric == "EXISTS":
            t = find_closed_tour(dims, leaper, allowed_missing=[tuple(c) for c in a.missing])
            out = {"exists": t is not None, "tour": t.to_dict() if t else None}
        else:
            res = min_metric_tour(dims, a.metric, a.budget, leaper)
            out = {"metric": a.metric, "value": res.value, "optimal": res.optimal, "nodes": res.nodes,
                   "tour": res.tour.to_dict() if res.tour else None}
    except TooLarge as e:
        raise UnsupportedDims(str(e))
    print(json.dumps(out))
    return EXIT_OK


def _cmd_index(a):
    from . import tour2d

    p = tour2d.plan(BoardDims.wh(a.width, a.height))
    n = a.width * a.height
    if a.at is not None:
        if not 0 <= a.at < n:
            raise UsageError(f"index {a.at} outside 0..{n - 1}")
        out = {"index": a.at, "cell": list(tour2d.cell_at(p, a.at))}
    else:
        try:
            out = {"index": tour2d.index_of(p, tuple(a.cell)), "cell": a.cell}
        except IndexError as e:
            raise UsageError(str(e))
    print(json.dumps(out))
    return EXIT_OK


def main(argv=None) -> int:
    try:
        a = _parser().parse_args(argv)
        return {"build": _cmd_build, "verify": _cmd_verify, "bound": _cmd_bound,
                "oracle": _cmd_oracle, "index": _cmd_index}[a.cmd](a)
    except UsageError as e:
        print(str(e).rstrip(), file=sys.stderr)
        return EXIT_INVALID
    except UnsupportedDims as e:
        print(f"unsupported: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ValueError as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID
