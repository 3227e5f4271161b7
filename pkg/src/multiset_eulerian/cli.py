"""Thin command-line client for the HTTP service.

Every subcommand builds a JSON request and sends it over HTTP.  By default
the requests run against an in-process instance of the service; pass
``--server URL`` (or set MULTISET_EULERIAN_SERVER) to talk to a running one.

Exit codes: 0 computed/verified, 1 a mathematical property failed to hold,
2 usage or parse error.
"""

from __future__ import annotations

import json
import os
import sys

import click
import httpx

from .render import render_check, render_polynomial, render_verify

SERVER_ENV_VAR = "MULTISET_EULERIAN_SERVER"

FORMATS = click.Choice(["text", "json", "latex", "csv"])


def _client(server: str | None) -> httpx.Client:
    server = server or os.environ.get(SERVER_ENV_VAR)
    if server:
        return httpx.Client(base_url=server, timeout=3600.0)
    from fastapi.testclient import TestClient

    from .service import create_app

    return TestClient(create_app())


def _post(client: httpx.Client, path: str, payload: dict) -> dict:
    response = client.post(path, json=payload)
    if response.status_code == 400:
        detail = response.json().get("detail", {})
        click.echo(f"error: {detail.get('error')}: {detail.get('message')}", err=True)
        sys.exit(2)
    if response.status_code == 422:
        click.echo(f"error: invalid request: {response.text}", err=True)
        sys.exit(2)
    response.raise_for_status()
    return response.json()


server_option = click.option("--server", default=None, help="URL of a running service; default is in-process")
format_option = click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)


@click.group()
def main():
    """Descent polynomials of multiset permutations.

    Specs are written as comma-separated multiplicities ("2,1,2") or in
    compressed power form ("1^3 2^4": three multiplicity-1 letters, then
    four multiplicity-2 letters).
    """


@main.command()
@click.option("--spec", required=True, help='multiset spec, e.g. "2,1,2" or "1^3 2^4"')
@click.option("--bivariate", is_flag=True, help="also print A(x, y)")
@click.option("--method", type=click.Choice(["enum", "macmahon", "operators", "all"]),
              default="all", show_default=True)
@click.option("--budget", type=int, default=None, help="enumeration word budget")
@format_option
@server_option
def compute(spec, bivariate, method, budget, fmt, server):
    """Compute the descent polynomial A(x) (and optionally A(x, y))."""
    with _client(server) as client:
        body = _post(client, "/compute", {
            "spec": spec, "bivariate": bivariate, "method": method, "budget": budget,
        })
    if fmt == "json":
        click.echo(json.dumps(body, indent=2))
    else:
        click.echo(render_polynomial(body["polynomial"], fmt))
        if bivariate and body.get("bivariate"):
            click.echo(render_polynomial(body["bivariate"], fmt))
        if method == "all" and fmt == "text":
            click.echo(f"routes: {', '.join(body['routes_run'])} "
                       f"({'agree' if body['agree'] else 'DISAGREE'})")
    if not body["agree"]:
        for route, terms in body["per_route"].items():
            click.echo(f"{route}: {render_polynomial(terms, 'text')}", err=True)
        sys.exit(1)


@main.command()
@click.option("--spec", required=True)
@click.option("--n-param", default="m", show_default=True,
              help="center parameter: 'm', 'deg', or an explicit integer")
@format_option
@server_option
def check(spec, n_param, fmt, server):
    """Positivity report for a spec; exit 0 iff bi-gamma-positive."""
    with _client(server) as client:
        body = _post(client, "/check", {"spec": spec, "n_param": n_param})
    click.echo(render_check(body, fmt))
    sys.exit(0 if body["bi_gamma_positive"] else 1)


@main.command()
@click.option("--poly", required=True, help='comma-separated coefficients f_0,f_1,..., e.g. "0,1,4,1"')
@click.option("--n", required=True, type=int, help="center parameter (center of symmetry n/2)")
@format_option
@server_option
def gamma(poly, n, fmt, server):
    """Gamma-expansion of an explicit polynomial; exit 1 if not symmetric."""
    coeffs = [tok.strip() for tok in poly.split(",")] if poly.strip() else []
    with _client(server) as client:
        body = _post(client, "/gamma", {"coeffs": coeffs, "n": n})
    if fmt == "json":
        click.echo(json.dumps(body, indent=2))
    elif not body["symmetric"]:
        click.echo(f"not symmetric about {n}/2; residual "
                   + render_polynomial(body.get("residual") or [], "text"))
    else:
        click.echo(f"gamma = [{', '.join(body['gammas'])}]  "
                   f"(gamma-positive: {body['gamma_positive']})")
    sys.exit(0 if body["symmetric"] else 1)


@main.command()
@click.option("--max-m", required=True, type=int, help="sweep all specs with total letters <= max-m")
@click.option("--multiplicities", default="1,2", show_default=True,
              help="comma-separated multiplicity values allowed in the sweep")
@click.option("--budget", type=int, default=None, help="enumeration word budget per spec")
@click.option("--jobs", type=int, default=1, show_default=True)
@format_option
@server_option
def verify(max_m, multiplicities, budget, jobs, fmt, server):
    """Cross-validation and theorem-verification sweep; exit 0 iff clean."""
    try:
        mults = [int(tok) for tok in multiplicities.split(",") if tok.strip()]
    except ValueError:
        click.echo("error: --multiplicities must be comma-separated integers", err=True)
        sys.exit(2)
    with _client(server) as client:
        body = _post(client, "/verify", {
            "max_m": max_m, "multiplicities": mults, "budget": budget, "jobs": jobs,
        })
    click.echo(render_verify(body, fmt))
    sys.exit(0 if body["violation_count"] == 0 else 1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
