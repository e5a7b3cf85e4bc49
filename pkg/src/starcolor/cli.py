"""Thin command-line client for the starcolor service.

Every subcommand is a request to the HTTP API; by default the app is
mounted in-process so no server needs to be running, while ``--server``
(or STARCOLOR_SERVER) points the same commands at a remote instance.
File formats on disk: graph6 / edge-list for graphs, JSON documents for
colorings and covers.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import httpx

from .errors import StarColorError
from .formats import load_graph_text


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=None)
    from .service.app import app

    return httpx.Client(
        transport=httpx.ASGITransport(app=app),
        base_url="http://starcolor.internal",
        timeout=None,
    )


def _graph_payload(path: str, fmt: str) -> dict:
    g = load_graph_text(Path(path).read_text(), fmt)
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def _coloring_payload(path: str) -> dict:
    doc = json.loads(Path(path).read_text())
    return {
        "n": doc["n"],
        "edges": doc["edges"],
        "provenance": doc.get("provenance"),
    }


def _emit(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, indent=2)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _request(client: httpx.Client, method: str, url: str, **kwargs) -> dict:
    response = client.request(method, url, **kwargs)
    if response.status_code != 200:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        print(f"error: {detail}", file=sys.stderr)
        raise SystemExit(2)
    return response.json()


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="starcolor",
        description="Star edge-coloring toolkit (client for the starcolor service).",
    )
    parser.add_argument(
        "--server",
        default=os.environ.get("STARCOLOR_SERVER"),
        help="service URL; defaults to an in-process instance",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a coloring document; exit 0/1")
    p.add_argument("--coloring", required=True)

    p = sub.add_parser("solve", help="decide or optimize the star chromatic index")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", default="graph6", choices=["graph6", "edgelist"])
    p.add_argument("--decision", type=int, default=None)
    p.add_argument("--max-nodes", type=int, default=None)
    p.add_argument("--time-cap", type=float, default=None)
    p.add_argument("--out", default=None)

    p = sub.add_parser("construct", help="emit one of the explicit colorings")
    csub = p.add_subparsers(dest="what", required=True)
    pkn = csub.add_parser("kn")
    pkn.add_argument("--n", type=int, required=True)
    pkn.add_argument("--method", default="ap3", choices=["ap3", "recursive", "exact"])
    pkn.add_argument("--out", default=None)
    pknn = csub.add_parser("knn")
    pknn.add_argument("--n", type=int, required=True)
    pknn.add_argument("--out", default=None)
    pc = csub.add_parser("compose")
    pc.add_argument("--graph", required=True)
    pc.add_argument("--format", default="graph6", choices=["graph6", "edgelist"])
    pc.add_argument("--out", default=None)

    p = sub.add_parser("bound", help="closed-form palette lower bound")
    bsub = p.add_subparsers(dest="what", required=True)
    pb = bsub.add_parser("kn")
    pb.add_argument("--n", type=int, required=True)

    p = sub.add_parser("certify", help="counting certificate for a K_n coloring")
    p.add_argument("--coloring", required=True)

    p = sub.add_parser("cover", help="search for a covering map onto the cube")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", default="graph6", choices=["graph6", "edgelist"])
    p.add_argument("--target", default="q3", choices=["q3"])
    p.add_argument("--out", default=None)

    p = sub.add_parser("lift", help="pull a target coloring back along a cover")
    p.add_argument("--cover", required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--out", default=None)

    p = sub.add_parser("cubic7", help="seven-coloring of a 2-connected cubic graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", default="graph6", choices=["graph6", "edgelist"])
    p.add_argument("--out", default=None)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8037)

    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    try:
        with _client(args.server) as client:
            return _dispatch(client, args)
    except (StarColorError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(client: httpx.Client, args: argparse.Namespace) -> int:
    if args.command == "verify":
        doc = _request(client, "POST", "/verify", json=_coloring_payload(args.coloring))
        if doc["ok"]:
            print(f"ok: star coloring with {doc['palette_size']} colors")
            return 0
        v = doc["violation"]
        print(
            f"violation: {v['kind']} edges={v['edges']} "
            f"vertices={v['vertices']} colors={v['colors']}"
        )
        return 1

    if args.command == "solve":
        request = {
            "graph": _graph_payload(args.graph, args.format),
            "decision": args.decision,
            "max_nodes": args.max_nodes,
            "time_cap": args.time_cap,
        }
        doc = _request(client, "POST", "/solve", json=request)
        status = {k: doc[k] for k in ("status", "value", "lower", "upper", "nodes_explored") if doc.get(k) is not None}
        print(json.dumps(status), file=sys.stderr)
        if doc.get("coloring") is not None:
            _emit(doc["coloring"], args.out)
        return 0

    if args.command == "construct":
        if args.what == "kn":
            doc = _request(
                client, "POST", "/construct/kn",
                json={"n": args.n, "method": args.method},
            )
        elif args.what == "knn":
            doc = _request(client, "POST", "/construct/knn", json={"n": args.n})
        else:
            doc = _request(
                client, "POST", "/construct/compose",
                json={"graph": _graph_payload(args.graph, args.format)},
            )
        _emit(doc, args.out)
        return 0

    if args.command == "bound":
        doc = _request(client, "GET", "/bound/kn", params={"n": args.n})
        print(json.dumps(doc))
        return 0

    if args.command == "certify":
        doc = _request(client, "POST", "/certify", json=_coloring_payload(args.coloring))
        print(json.dumps(doc, indent=2))
        return 0 if doc["passed"] else 1

    if args.command == "cover":
        request = {
            "graph": _graph_payload(args.graph, args.format),
            "target": args.target,
        }
        doc = _request(client, "POST", "/cover", json=request)
        if not doc["exists"]:
            print("no cover exists", file=sys.stderr)
            return 1
        _emit(doc["cover"], args.out)
        return 0

    if args.command == "lift":
        request = {
            "cover": json.loads(Path(args.cover).read_text()),
            "coloring": _coloring_payload(args.coloring),
        }
        doc = _request(client, "POST", "/lift", json=request)
        _emit(doc, args.out)
        return 0

    if args.command == "cubic7":
        request = {"graph": _graph_payload(args.graph, args.format)}
        doc = _request(client, "POST", "/cubic7", json=request)
        _emit(doc, args.out)
        return 0

    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    raise SystemExit(main())
