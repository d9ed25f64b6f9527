"""Command-line front end: a thin client of the HTTP service.

Requests go through the service layer even locally (an in-process ASGI
transport), so the CLI and a remote deployment behave identically; pass
``--server URL`` to target a running instance.

Exit codes: 0 all checks passed / expression evaluated, 1 a mathematical
check failed, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx

from . import __version__
from .suites import SUITES


def _window(text):
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError("window must look like 0:3")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="braidring",
        description="Exact canonical forms and braid-action verification "
                    "for the level-layered quantum algebra.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--type", dest="type_label", metavar="{A|D|E}{rank}",
                       help="Cartan type label, e.g. A3, D4, E6")
        p.add_argument("--N", dest="n", type=int, metavar="k",
                       help="type-A context with N=k (rank k-1)")
        p.add_argument("--server", metavar="URL",
                       help="target a running service instead of in-process")
        p.add_argument("--json", dest="json_path", metavar="PATH",
                       help="write the JSON result to PATH")

    p_eval = sub.add_parser("eval", help="evaluate an expression to canonical form")
    p_eval.add_argument("expr")
    p_eval.add_argument("--braid", metavar="WORD",
                        help='braid word to apply first, e.g. "s1 s2 s1^-1"')
    common(p_eval)

    p_check = sub.add_parser("check", help="run verification suites")
    p_check.add_argument("--window", type=_window, default=(0, 2), metavar="lo:hi")
    p_check.add_argument("--suite", default="all", metavar="NAME",
                         help="comma-separated from: %s, all" % ", ".join(SUITES))
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--corrupt", action="store_true",
                         help="corrupt the action/relations (negative control)")
    common(p_check)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    return parser


async def _post(server, path, payload):
    if server:
        async with httpx.AsyncClient(base_url=server, timeout=None) as client:
            return await client.post(path, json=payload)
    from .service import app
    transport = httpx.ASGITransport(app=app)
    async with httpx.AsyncClient(transport=transport, base_url="http://service",
                                 timeout=None) as client:
        return await client.post(path, json=payload)


def _request(server, path, payload):
    try:
        resp = asyncio.run(_post(server, path, payload))
    except httpx.HTTPError as exc:
        print("error: cannot reach service: %s" % exc, file=sys.stderr)
        return None
    return resp


def _fail(detail):
    if isinstance(detail, dict):
        detail = detail.get("message", json.dumps(detail))
    print("error: %s" % detail, file=sys.stderr)
    return 2


def _write_json(path, document):
    if path:
        with open(path, "w") as fh:
            json.dump(document, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _cmd_eval(args):
    payload = {"expr": args.expr, "type": args.type_label, "n": args.n,
               "braid": args.braid}
    resp = _request(args.server, "/eval", payload)
    if resp is None:
        return 2
    body = resp.json()
    if resp.status_code != 200:
        return _fail(body.get("detail", body))
    print(body["text"])
    _write_json(args.json_path, body["canonical"])
    return 0


def _cmd_check(args):
    suites = tuple(s.strip() for s in args.suite.split(",") if s.strip())
    payload = {
        "suites": list(suites), "type": args.type_label, "n": args.n,
        "window": list(args.window), "seed": args.seed, "corrupt": args.corrupt,
    }
    resp = _request(args.server, "/check", payload)
    if resp is None:
        return 2
    body = resp.json()
    if resp.status_code != 200:
        return _fail(body.get("detail", body))
    print(body["text"])
    _write_json(args.json_path, body["document"])
    return 0 if body["passed"] else 1


def _cmd_serve(args):
    import uvicorn

    from .service import app
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    if args.command == "eval":
        return _cmd_eval(args)
    if args.command == "check":
        return _cmd_check(args)
    return _cmd_serve(args)


if __name__ == "__main__":
    sys.exit(main())
