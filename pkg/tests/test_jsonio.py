import json

import pytest

from complaff.algebra import ExtensionField, PrimeField, Quaternions
from complaff.chart import symmetric_chart
from complaff.dualspread import TransversalFamily
from complaff.errors import ConfigError
from complaff.jsonio import (
    dual_spread_from_json,
    dual_spread_to_json,
    family_from_json,
    family_to_json,
    matrix_from_json,
    matrix_to_json,
    scalar_from_json,
    scalar_to_json,
    subspace_from_json,
    subspace_to_json,
)
from complaff.linalg import MatrixK
from complaff.projective import Subspace

GF3 = PrimeField(3)
GF4 = ExtensionField(2, (1, 1, 1))
Q = Quaternions()


def test_scalar_round_trips_all_domains():
    from fractions import Fraction

    cases = [
        (GF3, GF3.from_int(2)),
        (GF4, GF4.generator() + GF4.one()),
        (Q, Q.scalar((Fraction(1, 2), Fraction(-3), Fraction(0), Fraction(7, 5)))),
    ]
    for domain, s in cases:
        encoded = scalar_to_json(s)
        json.dumps(encoded)                       # must be JSON-serialisable
        assert scalar_from_json(domain, encoded) == s


def test_quaternion_scalar_json_is_fraction_strings():
    from fractions import Fraction

    encoded = scalar_to_json(Q.i)
    assert encoded == ["0", "1", "0", "0"]
    s = scalar_from_json(Q, ["1/2", "0", "-1", "0"])
    assert s.payload == (Fraction(1, 2), Fraction(0), Fraction(-1), Fraction(0))


def test_subspace_round_trip_quaternions():
    s = Subspace.from_rows(Q, 4, [(Q.i, Q.one(), Q.zero(), Q.zero()),
                                  (Q.zero(), Q.zero(), Q.j, Q.one())])
    blob = json.dumps(subspace_to_json(s))
    assert subspace_from_json(Q, json.loads(blob)) == s


def test_matrix_round_trip():
    m = MatrixK(GF4, [[GF4.generator(), 0], [1, GF4.generator() + 1]])
    assert matrix_from_json(GF4, matrix_to_json(m)) == m


def test_dual_spread_file_accepts_subspaces_and_gammas():
    ch = symmetric_chart(PrimeField(2), 2)
    gammas = [[[0, 0], [0, 0]], [[1, 0], [0, 1]]]
    by_gamma = dual_spread_from_json(ch, {"gammas": gammas})
    subs = [subspace_to_json(m.subspace()) for m in by_gamma.members]
    by_subspace = dual_spread_from_json(ch, {"subspaces": subs})
    assert [m.gamma for m in by_gamma.members] \
        == [m.gamma for m in by_subspace.members]
    # a bare list is read as gammas; W among the subspaces is dropped
    assert [m.gamma for m in dual_spread_from_json(ch, gammas).members] \
        == [m.gamma for m in by_gamma.members]
    with_w = {"subspaces": [subspace_to_json(ch.w)] + subs}
    assert len(dual_spread_from_json(ch, with_w).members) == 2
    assert dual_spread_to_json(by_gamma)["kind"] == "dual-spread"


def test_family_file_round_trip():
    ch = symmetric_chart(PrimeField(2), 2)
    fam = TransversalFamily(ch, [((0, 0), ((0, 0), (0, 0))),
                                 ((1, 0), ((1, 0), (0, 1)))])
    blob = json.dumps(family_to_json(fam))
    again = family_from_json(ch, json.loads(blob))
    assert again.entries == fam.entries


def test_bad_payloads_raise_config_error():
    with pytest.raises(ConfigError):
        subspace_from_json(GF3, {"rows": [[1]]})
    with pytest.raises(ConfigError):
        scalar_from_json(Q, ["x", "0", "0", "0"])
    ch = symmetric_chart(PrimeField(2), 2)
    with pytest.raises(ConfigError):
        dual_spread_from_json(ch, {"nothing": []})
