"""Command-line client for the braggpair service.

The CLI never computes anything itself: it assembles request payloads from a
config file and/or flags, posts them to the service, and writes the results
out.  By default requests are served in-process (no network, no server to
start); ``--server http://host:port`` targets a running instance instead, and
``braggpair serve`` starts one.

Config files are flat ``key = value`` lines with ``#`` comments; explicit
flags override file values.
"""
from __future__ import annotations

import argparse
import asyncio
import sys
from pathlib import Path
from typing import Any, Optional

import httpx

PRESET_NAMES = ("fig2", "fig3", "fig4", "fig5", "fig6")

_FLOAT_KEYS = {"w_start", "w_stop", "n_t", "m_t", "k0", "k0_prime", "mu", "tolerance", "measured_mixed", "w"}
_INT_KEYS = {"w_count", "seed", "samples"}
_STR_KEYS = {"preset", "scenario", "mode", "out"}
_LIST_KEYS = {"statistics"}
_KNOWN_KEYS = _FLOAT_KEYS | _INT_KEYS | _STR_KEYS | _LIST_KEYS


class ClientError(Exception):
    """A request the service rejected, or a transport failure."""


def parse_config(text: str) -> dict[str, str]:
    """Parse flat key = value lines; '#' starts a comment."""
    values: dict[str, str] = {}
    for raw_line in text.splitlines():
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ClientError(f"config line is not 'key = value': {raw_line!r}")
        key = key.strip()
        if key not in _KNOWN_KEYS:
            raise ClientError(f"unknown config key {key!r}")
        values[key] = value.strip()
    return values


def _convert(key: str, value: str) -> Any:
    if key in _FLOAT_KEYS:
        return float(value)
    if key in _INT_KEYS:
        return int(value)
    if key in _LIST_KEYS:
        return [item.strip() for item in value.split(",") if item.strip()]
    return value


class _InProcessTransport(httpx.BaseTransport):
    """Drive an ASGI app synchronously, one event loop per request."""

    def __init__(self, app: Any):
        self._app = app

    def handle_request(self, request: httpx.Request) -> httpx.Response:
        body = request.read()
        scope = {
            "type": "http",
            "asgi": {"version": "3.0", "spec_version": "2.3"},
            "http_version": "1.1",
            "method": request.method,
            "scheme": request.url.scheme,
            "path": request.url.path,
            "raw_path": request.url.raw_path,
            "query_string": request.url.query,
            "root_path": "",
            "headers": [(k.lower(), v) for k, v in request.headers.raw],
            "client": ("inprocess", 50000),
            "server": (request.url.host, request.url.port or 80),
        }
        status = 500
        headers: list = []
        chunks: list[bytes] = []
        delivered = False

        async def receive() -> dict:
            nonlocal delivered
            if delivered:
                return {"type": "http.disconnect"}
            delivered = True
            return {"type": "http.request", "body": body, "more_body": False}

        async def send(message: dict) -> None:
            nonlocal status, headers
            if message["type"] == "http.response.start":
                status = message["status"]
                headers = list(message.get("headers", []))
            elif message["type"] == "http.response.body":
                chunks.append(message.get("body", b""))

        asyncio.run(self._app(scope, receive, send))
        return httpx.Response(status_code=status, headers=headers, content=b"".join(chunks))


def in_process_client() -> httpx.Client:
    """An httpx client bound directly to the service app, no sockets involved."""
    from .service import app

    return httpx.Client(transport=_InProcessTransport(app), base_url="http://braggpair.local")


class ServiceClient:
    """Minimal POST wrapper over either a remote or an in-process service."""

    def __init__(self, server: Optional[str]):
        if server:
            self._client = httpx.Client(base_url=server, timeout=300.0)
        else:
            self._client = in_process_client()

    def post(self, path: str, payload: dict) -> dict:
        try:
            response = self._client.post(path, json=payload)
        except httpx.HTTPError as exc:
            raise ClientError(f"request to {path} failed: {exc}") from exc
        if response.status_code != 200:
            try:
                detail = response.json().get("detail", response.text)
            except ValueError:
                detail = response.text
            raise ClientError(f"{path} -> {response.status_code}: {detail}")
        return response.json()


def _gather(args: argparse.Namespace, keys: tuple[str, ...]) -> dict:
    """Merge config-file values and flags (flags win) into a request payload."""
    payload: dict[str, Any] = {}
    if getattr(args, "config", None):
        text = Path(args.config).read_text(encoding="utf-8")
        for key, value in parse_config(text).items():
            if key in keys:
                payload[key] = _convert(key, value)
    for key in keys:
        value = getattr(args, key, None)
        if value is not None:
            payload[key] = value
    return payload


def _write_output(document: str, args: argparse.Namespace) -> None:
    out = getattr(args, "out", None)
    if out is None and getattr(args, "config", None):
        config = parse_config(Path(args.config).read_text(encoding="utf-8"))
        out = config.get("out")
    if out:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(document)
    else:
        sys.stdout.write(document)


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="flat key = value config file; flags override it")
    parser.add_argument("--server", help="service URL (default: run the service in-process)")


def _add_grid_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--scenario", choices=["same", "opposite"], dest="scenario")
    parser.add_argument("--w-start", type=float, dest="w_start")
    parser.add_argument("--w-stop", type=float, dest="w_stop")
    parser.add_argument("--w-count", type=int, dest="w_count")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--single-mode", action="store_const", const="single", dest="mode",
                      help="single-mode beams (default)")
    mode.add_argument("--multi-mode", action="store_const", const="multi", dest="mode",
                      help="Gaussian multi-mode beams")
    parser.add_argument("--n-t", type=float, dest="n_t", help="frozen fraction of particle 1")
    parser.add_argument("--m-t", type=float, dest="m_t", help="frozen fraction of particle 2")
    parser.add_argument("--k0", type=float, dest="k0", help="perpendicular center of particle 1")
    parser.add_argument("--k0-prime", type=float, dest="k0_prime", help="perpendicular center of particle 2")
    parser.add_argument("--mu", type=float, dest="mu", help="common perpendicular spread")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braggpair",
        description="Client for the two-particle Bragg scattering service.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="emit channel probabilities over a w grid as CSV")
    sweep.add_argument("--preset", choices=PRESET_NAMES,
                       help="named figure parameterization (overrides other sweep flags)")
    sweep.add_argument("--stats", dest="statistics",
                       help="comma list of statistics: dis,bos,fer")
    _add_grid_flags(sweep)
    sweep.add_argument("--out", help="output path (default: standard output)")
    _add_common_flags(sweep)

    dips = sub.add_parser("dip-find", help="locate boson mixed-channel dips in w")
    _add_grid_flags(dips)
    dips.add_argument("--tolerance", type=float, dest="tolerance",
                      help="report minima whose value is below this (default 1e-9)")
    dips.add_argument("--out", help="output path (default: standard output)")
    _add_common_flags(dips)

    estimate = sub.add_parser("overlap-estimate",
                              help="invert a measured mixed-channel probability to an overlap")
    estimate.add_argument("--measured-mixed", type=float, dest="measured_mixed",
                          help="measured probability of the two bosons exiting different beams")
    estimate.add_argument("--w", type=float, dest="w", help="pulse area of the measurement")
    estimate.add_argument("--n-t", type=float, dest="n_t", help="frozen fraction (default 0)")
    _add_common_flags(estimate)

    check = sub.add_parser("check", help="run the self-check suite")
    check.add_argument("--seed", type=int, dest="seed", help="Monte Carlo seed (u64)")
    check.add_argument("--samples", type=int, dest="samples", help="Monte Carlo sample count")
    _add_common_flags(check)

    serve = sub.add_parser("serve", help="run the HTTP service with uvicorn")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)

    return parser


_SWEEP_KEYS = ("preset", "scenario", "statistics", "w_start", "w_stop", "w_count",
               "mode", "n_t", "m_t", "k0", "k0_prime", "mu")
_DIP_KEYS = ("scenario", "w_start", "w_stop", "w_count", "mode", "n_t", "m_t",
             "k0", "k0_prime", "mu", "tolerance")
_ESTIMATE_KEYS = ("measured_mixed", "w", "n_t")
_CHECK_KEYS = ("seed", "samples")


def _stats_from_arg(args: argparse.Namespace) -> None:
    if getattr(args, "statistics", None) is not None:
        args.statistics = [item.strip() for item in args.statistics.split(",") if item.strip()]


def _run_sweep(args: argparse.Namespace, client: ServiceClient) -> int:
    _stats_from_arg(args)
    result = client.post("/sweep", _gather(args, _SWEEP_KEYS))
    _write_output(result["csv"], args)
    return 0


def _run_dip_find(args: argparse.Namespace, client: ServiceClient) -> int:
    result = client.post("/dip-find", _gather(args, _DIP_KEYS))
    lines = "".join(f"{value:.15g}\n" for value in result["w_values"])
    _write_output(lines, args)
    return 0


def _run_overlap_estimate(args: argparse.Namespace, client: ServiceClient) -> int:
    payload = _gather(args, _ESTIMATE_KEYS)
    for required in ("measured_mixed", "w"):
        if required not in payload:
            raise ClientError(f"missing required value {required!r} (flag or config)")
    result = client.post("/overlap-estimate", payload)
    if result["clamped"]:
        print(f"warning: raw estimate {result['raw']:.6g} clamped into [0, 1]", file=sys.stderr)
    sys.stdout.write(f"{result['overlap']:.15g}\n")
    return 0


def _run_check(args: argparse.Namespace, client: ServiceClient) -> int:
    result = client.post("/check", _gather(args, _CHECK_KEYS))
    sys.stdout.write(result["report"])
    return 0 if result["passed"] else 1


def _run_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("braggpair.service:app", host=args.host, port=args.port)
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        return _run_serve(args)
    try:
        client = ServiceClient(getattr(args, "server", None))
        if args.command == "sweep":
            return _run_sweep(args, client)
        if args.command == "dip-find":
            return _run_dip_find(args, client)
        if args.command == "overlap-estimate":
            return _run_overlap_estimate(args, client)
        if args.command == "check":
            return _run_check(args, client)
    except ClientError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    raise SystemExit(main())
