import json

import pytest

from lngraph import build_ln, cycle_through, hamilton_path
from lngraph.certificates import CertificateFormatError, CycleCertificate, PathCertificate, dumps, from_dict, loads


def test_round_trip():
    g = build_ln(6)
    for cert in (cycle_through(g, (2, 5), 17), hamilton_path(g, (1, 2), (4, 3))):
        assert loads(dumps(cert)) == cert


def test_wire_format_is_exact():
    cert = CycleCertificate(6, (1, 2), ((1, 2), (1, 3), (1, 4)))
    assert json.loads(dumps(cert)) == {
        "n": 6,
        "kind": "cycle",
        "vertices": [[1, 2], [1, 3], [1, 4]],
        "anchor": [1, 2],
    }
    path = PathCertificate(6, ((1, 2), (1, 3)), ((1, 2), (1, 3)))
    assert json.loads(dumps(path))["endpoints"] == [[1, 2], [1, 3]]
    assert dumps(path).endswith("\n")


def test_optional_fields_default_to_sequence_ends():
    p = from_dict({"n": 4, "kind": "path", "vertices": [[1, 2], [2, 1]]})
    assert p.endpoints == ((1, 2), (2, 1))
    c = from_dict({"n": 4, "kind": "cycle", "vertices": [[1, 2], [1, 3], [1, 4]]})
    assert c.anchor == (1, 2)


@pytest.mark.parametrize(
    "text",
    [
        "{not json",
        "[]",
        '{"n": "4", "kind": "path", "vertices": []}',
        '{"n": 4, "kind": "walk", "vertices": [[1, 2]]}',
        '{"n": 4, "kind": "path", "vertices": [[1, 2, 3]]}',
        '{"n": 4, "kind": "path", "vertices": [[1, true]]}',
        '{"n": 4, "kind": "path", "vertices": []}',
        '{"n": 4, "kind": "path", "vertices": [[1, 2]], "endpoints": [[1, 2]]}',
        '{"n": 4, "kind": "cycle", "vertices": "x"}',
    ],
)
def test_malformed(text):
    with pytest.raises(CertificateFormatError):
        loads(text)
