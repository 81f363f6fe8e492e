"""Command-line front door: a thin HTTP client over the service.

Without --server the app runs in-process (same wire format, no socket);
with --server requests go to a running instance.  HYPINT_BITS overrides
the default precision.
"""

from __future__ import annotations

import json
import os
import sys

import click
import httpx


def _default_bits() -> int:
    try:
        return int(os.environ.get("HYPINT_BITS", "128"))
    except ValueError:
        return 128


class Client:
    def __init__(self, server: str | None):
        if server:
            self._client = httpx.Client(base_url=server, timeout=None)
        else:
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient
            from .api import app

            self._client = TestClient(app)

    def request(self, method: str, url: str, **kw) -> httpx.Response:
        return self._client.request(method, url, **kw)


def _fail(resp) -> None:
    try:
        detail = resp.json().get("detail", {})
        message = detail.get("message", resp.text)
        code = 3 if detail.get("error") == "unsupported" else 2
    except Exception:
        message, code = resp.text, 2
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


@click.group()
@click.option("--server", default=None, help="Base URL of a running service (default: in-process).")
@click.pass_context
def main(ctx, server):
    """Evaluate hyperbolic integrals, dump exact tables, certify identities."""
    ctx.obj = Client(server)


@main.command()
@click.option("--L", "big_l", type=int, default=None, help="sech power (closed forms: 1..4).")
@click.option("--N", "big_n", type=int, default=None, help="index for --power/--beta/--zeta modes.")
@click.option("--T", "big_t", default="0", help="exponential rate (decimal string).")
@click.option("--mode", type=click.Choice(["tanh_over_x", "sech", "tanh_sech", "power", "beta_recurrence", "zeta_recurrence"]), default=None)
@click.option("--power", "power_flag", is_flag=True, help="shorthand for --mode power.")
@click.option("--symbolic", is_flag=True, help="also print the exact constant combination (integer T).")
@click.option("--bits", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.pass_obj
def eval(client, big_l, big_n, big_t, mode, power_flag, symbolic, bits, fmt):
    """Evaluate one integral; closed form selected by the flags."""
    if mode is None:
        mode = "power" if power_flag else ("tanh_over_x" if big_l is not None else None)
    if mode is None:
        click.echo("error: need --L (closed form) or --power --N", err=True)
        sys.exit(2)
    payload = {
        "mode": mode,
        "L": big_l,
        "N": big_n,
        "T": str(big_t),
        "bits": bits or _default_bits(),
        "symbolic": symbolic,
    }
    resp = client.request("POST", "/eval", json=payload)
    if resp.status_code != 200:
        _fail(resp)
    doc = resp.json()
    if fmt == "json":
        click.echo(json.dumps(doc, sort_keys=True))
        return
    click.echo(doc["value"])
    if doc.get("combination") is not None:
        click.echo(json.dumps(doc["combination"], sort_keys=True))
    if doc.get("coefficients") is not None:
        click.echo(json.dumps(doc["coefficients"]))


@main.command()
@click.option("--kind", required=True, help="g|h|c|d|u|v|x|y|dN")
@click.option("--n", "n", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.pass_obj
def table(client, kind, n, fmt):
    """Emit an exact coefficient table."""
    resp = client.request("GET", "/table", params={"kind": kind, "n": n, "format": fmt})
    if resp.status_code != 200:
        _fail(resp)
    click.echo(resp.text, nl=False)


@main.command()
@click.option("--bits", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.pass_obj
def constants(client, bits, fmt):
    """Print the named constants as decimal strings."""
    resp = client.request("GET", "/constants", params={"bits": bits or _default_bits()})
    if resp.status_code != 200:
        _fail(resp)
    doc = resp.json()
    if fmt == "json":
        click.echo(json.dumps(doc, sort_keys=True))
        return
    for name, value in doc["constants"].items():
        click.echo(f"{name} = {value}")


@main.command()
@click.option("--suite", default="all")
@click.option("--trials", type=int, default=None)
@click.option("--seed", type=int, default=42)
@click.option("--bits", type=int, default=None)
@click.option("--tolerance", default=None, help="extra tolerance floor (decimal string).")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="write the JSON report here.")
@click.pass_obj
def verify(client, suite, trials, seed, bits, tolerance, out):
    """Run a certification suite; exit 0 iff every case passes."""
    payload = {
        "suite": suite,
        "trials": trials,
        "seed": seed,
        "bits": bits or _default_bits(),
        "tolerance": tolerance,
    }
    resp = client.request("POST", "/verify", json=payload)
    if resp.status_code != 200:
        _fail(resp)
    text = resp.text
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    doc = json.loads(text)
    n_fail = sum(1 for c in doc["cases"] if c["status"] == "fail")
    n_pass = sum(1 for c in doc["cases"] if c["status"] == "pass")
    n_skip = len(doc["cases"]) - n_fail - n_pass
    click.echo(f"suite={doc['suite']} seed={doc['seed']} bits={doc['precision_bits']} "
               f"pass={n_pass} fail={n_fail} skipped={n_skip}")
    if not out:
        click.echo(text)
    for c in doc["cases"]:
        if c["status"] == "fail":
            click.echo(f"FAIL {c['id']} params={json.dumps(c['params'], sort_keys=True)} "
                       f"abs_err={c['abs_err']}", err=True)
    sys.exit(1 if n_fail else 0)


@main.command()
@click.option("--s", "s", default="0.5", help="argument of f (decimal string).")
@click.option("--terms", type=int, default=10_000)
@click.option("--bits", type=int, default=None)
@click.pass_obj
def products(client, s, terms, bits):
    """Partial infinite product vs. its closed form."""
    payload = {"s": str(s), "terms": terms, "bits": bits or _default_bits()}
    resp = client.request("POST", "/products", json=payload)
    if resp.status_code != 200:
        _fail(resp)
    doc = resp.json()
    click.echo(f"partial({doc['terms']} terms) = {doc['partial']}")
    click.echo(f"closed              = {doc['closed']}")
    click.echo(f"gap                 = {doc['gap']}")


@main.command()
@click.option("--L", "big_l", type=int, required=True)
@click.option("--T", "big_t", default="0")
@click.option("--bits", type=int, default=None)
@click.pass_obj
def symbolic(client, big_l, big_t, bits):
    """Alias of eval --symbolic."""
    payload = {
        "mode": "tanh_over_x",
        "L": big_l,
        "T": str(big_t),
        "bits": bits or _default_bits(),
        "symbolic": True,
    }
    resp = client.request("POST", "/eval", json=payload)
    if resp.status_code != 200:
        _fail(resp)
    doc = resp.json()
    click.echo(doc["value"])
    click.echo(json.dumps(doc["combination"], sort_keys=True))


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .api import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
