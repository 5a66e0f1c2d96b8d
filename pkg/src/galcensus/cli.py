"""Command-line front end: a thin HTTP client of the service app.

Without --server the app runs in-process (ASGI transport, no sockets), so the
CLI needs no environment at all; with --server URL it talks to a remote
instance of `galcensus serve`.
"""

from __future__ import annotations

import argparse
import json
import sys


class _InProcessTransport:
    """Synchronous bridge onto the ASGI app (one event loop per request)."""

    def __init__(self, app):
        import httpx

        self._inner = httpx.ASGITransport(app=app)

    def handle_request(self, request):
        import asyncio

        import httpx

        async def go():
            resp = await self._inner.handle_async_request(request)
            body = await resp.aread()
            return resp.status_code, resp.headers, body

        status, headers, body = asyncio.run(go())
        return httpx.Response(status_code=status, headers=headers, content=body)

    def close(self):
        pass

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def _client(server: str | None):
    import httpx

    if server:
        return httpx.Client(base_url=server.rstrip("/"), timeout=None)
    from .service.app import app

    return httpx.Client(
        transport=_InProcessTransport(app),
        base_url="http://galcensus.local",
        timeout=None,
    )


def _call(client, method: str, path: str, payload=None) -> dict:
    resp = client.request(method, path, json=payload)
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail", resp.text)
        except Exception:
            detail = resp.text
        sys.exit(f"error: {detail}")
    return resp.json()


def _emit(data, path: str | None = None) -> None:
    text = json.dumps(data, indent=2)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_exponents(client, args) -> None:
    data = _call(client, "GET", "/exponents/tables")
    if args.format == "json":
        _emit(data)
        return
    records = data["records"]
    history = data["history"]
    if args.format == "csv":
        print("G,B(G),E(G),|G|,Even?")
        for r in records:
            even = "Yes" if r["parity_even"] else "No"
            print(f"{r['group']},{r['bhargava_bound']},{r['improved_bound_decimal']},{r['order']},{even}")
        print()
        print("year,authors,bound")
        for h in history:
            print(f"{h['year']},\"{h['authors']}\",{h['exponent_expression']}")
    else:
        print(f"{'G':<6} {'B(G)':<6} {'E(G)':<6} {'|G|':<6} Even?")
        for r in records:
            even = "Yes" if r["parity_even"] else "No"
            print(
                f"{r['group']:<6} {r['bhargava_bound']:<6} "
                f"{r['improved_bound_decimal']:<6} {r['order']:<6} {even}"
            )
        print()
        print(f"{'Year':<6} {'Authors':<24} Bound")
        for h in history:
            print(f"{h['year']:<6} {h['authors']:<24} {h['exponent_expression']}")


def _cmd_census(client, args) -> None:
    payload = {
        "degree": args.degree,
        "bound": args.bound,
        "const": args.const,
        "shards": args.shards,
        "workers": args.workers,
        "budget": args.budget,
        "checkpoint_path": args.checkpoint,
    }
    data = _call(client, "POST", "/census/run", payload)["report"]
    if args.csv:
        lines = ["label,certified,heuristic,total"]
        for label, total in data["tallies"].items():
            cert = data["certainty"].get(label, {}).get("certified", 0)
            heur = data["certainty"].get(label, {}).get("heuristic", 0)
            lines.append(f"{label},{cert},{heur},{total}")
        lines.append(f"TOTAL,,,{data['cardinality']}")
        with open(args.csv, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    _emit(data, args.out)


def _cmd_galois(client, args) -> None:
    payload = {
        "poly": args.poly,
        "prime_bound": args.prime_bound,
        "use_resolvent": not args.no_resolvent,
    }
    _emit(_call(client, "POST", "/galois/classify", payload))


def _cmd_resolvent(client, args) -> None:
    payload = {
        "poly": args.poly,
        "group": args.group,
        "weights": json.loads(args.weights) if args.weights else None,
        "exponents": json.loads(args.exponents) if args.exponents else None,
        "shift": args.shift,
    }
    _emit(_call(client, "POST", "/resolvent/build", payload))


def _cmd_pointcount(client, args) -> None:
    payload = {"poly": args.poly, "b1": args.b1, "b2": args.b2, "budget": args.budget}
    _emit(_call(client, "POST", "/pointcount", payload))


def _cmd_evenline(client, args) -> None:
    payload = {
        "degree": args.degree,
        "prefix": json.loads(args.prefix) if args.prefix else [],
        "a": args.a,
        "c1": args.c1,
        "c2": args.c2,
        "mode": args.mode,
        "explore": args.explore,
        "samples": args.samples,
        "seed": args.seed,
        "coeff_range": args.range,
    }
    _emit(_call(client, "POST", "/evenline", payload))


def _cmd_group(client, args) -> None:
    _emit(_call(client, "POST", "/groups/info", {"name": args.name, "degree": args.degree}))


def _cmd_box(client, args) -> None:
    _emit(
        _call(
            client,
            "POST",
            "/box",
            {"degree": args.degree, "bound": args.bound, "const": args.const},
        )
    )


def _cmd_fit(client, args) -> None:
    reports = []
    for path in args.reports:
        with open(path) as fh:
            reports.append(json.load(fh))
    _emit(_call(client, "POST", "/census/fit", {"reports": reports, "label": args.label}))


def _cmd_serve(args) -> None:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="galcensus",
        description="Galois census toolkit (thin client of the galcensus service)",
    )
    ap.add_argument("--server", help="remote service URL (default: run in-process)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exponents", help="print the exponent tables")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p = sub.add_parser("census", help="run a coefficient-box census")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--bound", type=int, required=True, help="the box height X")
    p.add_argument("--const", type=int, default=1, help="the box constant C")
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--budget", type=int, default=10**8)
    p.add_argument("--checkpoint", help="JSON checkpoint path (resumable)")
    p.add_argument("--out", help="write the report JSON here instead of stdout")
    p.add_argument("--csv", help="also write a CSV tally table here")

    p = sub.add_parser("galois", help="classify one polynomial")
    p.add_argument("--poly", required=True, help="coefficients, leading first: '1,0,2,...'")
    p.add_argument("--prime-bound", type=int, default=10_000)
    p.add_argument("--no-resolvent", action="store_true")

    p = sub.add_parser("resolvent", help="build a certified resolvent")
    p.add_argument("--poly", required=True)
    p.add_argument("--group", default="6T14")
    p.add_argument("--weights", help="JSON list, one weight per subgroup element")
    p.add_argument("--exponents", help="JSON list, one exponent per point")
    p.add_argument("--shift", type=int, default=0)

    p = sub.add_parser("pointcount", help="count integer points on a plane curve")
    p.add_argument("--poly", required=True, help="terms 'c,e1,e2;...': x1^2-x2 is '1,2,0;-1,0,1'")
    p.add_argument("--b1", type=int, required=True)
    p.add_argument("--b2", type=int, required=True)
    p.add_argument("--budget", type=int, default=10**8)

    p = sub.add_parser("evenline", help="discriminant-along-a-line square test")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--mode", choices=("last", "secondlast"), default="last")
    p.add_argument("--samples", type=int, default=None, help="run K random specializations")
    p.add_argument("--prefix", help="JSON list for a_2..a_(n-3)")
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--c1", default="0", help="rational, e.g. '3/2'")
    p.add_argument("--c2", default="0")
    p.add_argument("--explore", action="store_true", help="permit excluded degrees")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--range", type=int, default=50, help="coefficient range for sampling")

    p = sub.add_parser("group", help="inspect a catalog group")
    p.add_argument("--name", required=True)
    p.add_argument("--degree", type=int, default=None)

    p = sub.add_parser("box", help="print Schmidt box ranges")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--const", type=int, default=1)

    p = sub.add_parser("fit", help="fit an exponent across census reports")
    p.add_argument("--label", required=True)
    p.add_argument("reports", nargs="+", help="report JSON files")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8722)

    return ap


_HANDLERS = {
    "exponents": _cmd_exponents,
    "census": _cmd_census,
    "galois": _cmd_galois,
    "resolvent": _cmd_resolvent,
    "pointcount": _cmd_pointcount,
    "evenline": _cmd_evenline,
    "group": _cmd_group,
    "box": _cmd_box,
    "fit": _cmd_fit,
}


def main(argv=None) -> None:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        _cmd_serve(args)
        return
    with _client(args.server) as client:
        _HANDLERS[args.command](client, args)


if __name__ == "__main__":
    main()
