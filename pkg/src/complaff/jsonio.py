"""JSON forms for scalars, subspaces, spreads and families.

Scalar encoding depends on the domain:

* prime field      -- plain int
* extension field  -- list of k ints, constant coefficient first
* quaternions      -- list of four exact fraction strings "a", "-1/2", ...

Subspaces are ``{"ambient": n, "rows": [[scalar, ...], ...]}``.  Dual
spread candidates are ``{"kind": "dual-spread", "gammas": [...]}`` (or
``"subspaces"``), transversal sets ``{"kind": "transversals",
"subspaces": [...]}``, families ``{"kind": "family", "entries":
[{"u": [...], "images": [[...], ...]}]}``.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import ExtensionField, PrimeField, Quaternions, Scalar, ScalarDomain
from .chart import AffineChart, ComplementCoord
from .dualspread import DualSpreadCandidate, TransversalFamily
from .errors import ConfigError
from .linalg import MatrixK
from .projective import Subspace


def scalar_to_json(s: Scalar):
    domain = s.domain
    if isinstance(domain, PrimeField):
        return s.payload
    if isinstance(domain, ExtensionField):
        return list(s.payload)
    if isinstance(domain, Quaternions):
        return [str(c) for c in s.payload]
    raise ConfigError(f"no JSON form for scalars of {domain}")


def scalar_from_json(domain: ScalarDomain, obj) -> Scalar:
    try:
        if isinstance(domain, PrimeField):
            return domain.from_int(int(obj))
        if isinstance(domain, ExtensionField):
            if isinstance(obj, int):
                return domain.from_int(obj)
            return domain.scalar(tuple(int(c) for c in obj))
        if isinstance(domain, Quaternions):
            if isinstance(obj, int):
                return domain.from_int(obj)
            return domain.scalar(tuple(Fraction(str(c)) for c in obj))
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad scalar {obj!r} for {domain}: {exc}") from exc
    raise ConfigError(f"no JSON form for scalars of {domain}")


def vector_to_json(v):
    return [scalar_to_json(x) for x in v]


def vector_from_json(domain: ScalarDomain, obj):
    if not isinstance(obj, list):
        raise ConfigError("expected a list of scalars")
    return tuple(scalar_from_json(domain, x) for x in obj)


def matrix_to_json(m: MatrixK):
    return [vector_to_json(row) for row in m.entries]


def matrix_from_json(domain: ScalarDomain, obj, cols: int | None = None) -> MatrixK:
    if not isinstance(obj, list):
        raise ConfigError("expected a list of rows")
    return MatrixK(domain, [vector_from_json(domain, row) for row in obj], cols=cols)


def subspace_to_json(s: Subspace):
    return {"ambient": s.ambient, "rows": matrix_to_json(s.basis)}


def subspace_from_json(domain: ScalarDomain, obj) -> Subspace:
    if not isinstance(obj, dict) or "ambient" not in obj or "rows" not in obj:
        raise ConfigError('a subspace needs "ambient" and "rows"')
    ambient = int(obj["ambient"])
    rows = [vector_from_json(domain, row) for row in obj["rows"]]
    return Subspace.from_rows(domain, ambient, rows)


def dual_spread_to_json(b: DualSpreadCandidate):
    return {"kind": "dual-spread",
            "gammas": [matrix_to_json(m.gamma) for m in b.members]}


def dual_spread_from_json(chart: AffineChart, obj) -> DualSpreadCandidate:
    if isinstance(obj, list):
        obj = {"gammas": obj}
    if not isinstance(obj, dict):
        raise ConfigError("expected a dual-spread object or a list of gammas")
    members = []
    if "gammas" in obj:
        for g in obj["gammas"]:
            members.append(ComplementCoord(
                chart, matrix_from_json(chart.domain, g, cols=chart.k)))
    elif "subspaces" in obj:
        for s in obj["subspaces"]:
            sub = subspace_from_json(chart.domain, s)
            if sub == chart.w:
                continue             # W is implicit
            members.append(chart.coordinate_of(sub))
    else:
        raise ConfigError('a dual-spread file needs "gammas" or "subspaces"')
    return DualSpreadCandidate(chart, members)


def regulus_to_json(members):
    return {"kind": "regulus",
            "subspaces": [subspace_to_json(s) for s in members]}


def transversals_to_json(lines):
    return {"kind": "transversals",
            "subspaces": [subspace_to_json(t) for t in lines]}


def transversals_from_json(domain: ScalarDomain, obj):
    if not isinstance(obj, dict) or "subspaces" not in obj:
        raise ConfigError('a transversal file needs "subspaces"')
    return tuple(subspace_from_json(domain, s) for s in obj["subspaces"])


def family_to_json(f: TransversalFamily):
    return {"kind": "family",
            "entries": [{"u": vector_to_json(u),
                         "images": [vector_to_json(img) for img in images]}
                        for u, images in f.entries]}


def family_from_json(chart: AffineChart, obj) -> TransversalFamily:
    if not isinstance(obj, dict) or "entries" not in obj:
        raise ConfigError('a family file needs "entries"')
    entries = []
    for rec in obj["entries"]:
        u = vector_from_json(chart.domain, rec["u"])
        images = tuple(vector_from_json(chart.domain, img)
                       for img in rec["images"])
        entries.append((u, images))
    return TransversalFamily(chart, entries)
