"""Field-spec grammar and chart construction from a config mapping.

Field specs:  ``gf(p)``, ``gf(p^k; modulus=[c_0,...,c_k])``, ``quat(Q)``.
Config keys:  "field" (spec string), "n", "k", optional "W" and "U"
(row lists, used both as the subspaces and as their working bases),
optional "seed".  Defaults: W spanned by e_1..e_k, U by e_{k+1}..e_n.
"""

from __future__ import annotations

import json
import re

from .algebra import ExtensionField, PrimeField, Quaternions, ScalarDomain
from .chart import AffineChart
from .errors import ConfigError
from .jsonio import vector_from_json
from .projective import Subspace

_GF_PRIME = re.compile(r"gf\(\s*(\d+)\s*\)\Z")
_GF_EXT = re.compile(
    r"gf\(\s*(\d+)\s*\^\s*(\d+)\s*;\s*modulus\s*=\s*\[([0-9,\s-]*)\]\s*\)\Z")
_QUAT = re.compile(r"quat\(\s*q\s*\)\Z")   # matched against lowercased input


def parse_field(spec: str) -> ScalarDomain:
    text = spec.strip().lower()
    m = _GF_PRIME.match(text)
    if m:
        try:
            return PrimeField(int(m.group(1)))
        except ValueError as exc:
            raise ConfigError(f"bad field spec {spec!r}: {exc}") from exc
    m = _GF_EXT.match(text)
    if m:
        p, k = int(m.group(1)), int(m.group(2))
        coeffs = [int(c) for c in m.group(3).split(",") if c.strip()]
        if len(coeffs) != k + 1:
            raise ConfigError(f"modulus needs {k + 1} coefficients c_0..c_k")
        try:
            return ExtensionField(p, coeffs)
        except ValueError as exc:
            raise ConfigError(f"bad field spec {spec!r}: {exc}") from exc
    if _QUAT.match(text):
        return Quaternions()
    raise ConfigError(f"cannot parse field spec {spec!r}; expected gf(p), "
                      f"gf(p^k; modulus=[...]) or quat(Q)")


def field_spec_string(domain: ScalarDomain) -> str:
    if isinstance(domain, PrimeField):
        return f"gf({domain.p})"
    if isinstance(domain, ExtensionField):
        mods = ",".join(str(c) for c in domain.modulus)
        return f"gf({domain.p}^{domain.k}; modulus=[{mods}])"
    if isinstance(domain, Quaternions):
        return "quat(Q)"
    raise ConfigError(f"{domain} has no field spec")


def load_config(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(cfg, dict):
        raise ConfigError("config must be a JSON object")
    return cfg


def chart_from_config(cfg: dict) -> AffineChart:
    for key in ("field", "n", "k"):
        if key not in cfg:
            raise ConfigError(f'config is missing "{key}"')
    domain = parse_field(str(cfg["field"]))
    n, k = int(cfg["n"]), int(cfg["k"])
    if not 0 < k < n:
        raise ConfigError("need 0 < k < n (trivial charts are excluded)")
    try:
        if "W" in cfg:
            w_rows = [vector_from_json(domain, row) for row in cfg["W"]]
            w = Subspace.from_rows(domain, n, w_rows)
        else:
            w_rows = None
            ident = Subspace.full(domain, n).basis.entries
            w = Subspace.from_rows(domain, n, ident[:k])
        if w.dim != k:
            raise ConfigError(f"W has dimension {w.dim}, expected {k}")
        u = b_rows = None
        if "U" in cfg:
            b_rows = [vector_from_json(domain, row) for row in cfg["U"]]
            u = Subspace.from_rows(domain, n, b_rows)
            if u.dim != n - k:
                raise ConfigError(f"U has dimension {u.dim}, expected {n - k}")
        return AffineChart(domain, n, w, u, b=b_rows, w_basis=w_rows)
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
