import json

import pytest

from clique_immersion.certificate import CertificateSchemaError, certificate_dict, dumps_certificate, load_certificate
from clique_immersion.graph import Graph
from clique_immersion.immersion import Finding, Immersion, verify_immersion

C5_K3 = Immersion(frozenset({2, 3, 4}), {(2, 3): (2, 3), (2, 4): (2, 1, 0, 4), (3, 4): (3, 4)})


def test_schema_layout():
    data = certificate_dict(C5_K3, 5, "vergara", "trace.json")
    assert data == {
        "n": 5,
        "branch": [2, 3, 4],
        "paths": [
            {"u": 2, "v": 3, "vertices": [2, 3]},
            {"u": 2, "v": 4, "vertices": [2, 1, 0, 4]},
            {"u": 3, "v": 4, "vertices": [3, 4]},
        ],
        "method": "vergara",
        "trace": "trace.json",
    }
    assert "method" not in certificate_dict(C5_K3, 5)


def test_round_trip():
    text = dumps_certificate(C5_K3, 5)
    n, im, findings = load_certificate(text)
    assert n == 5 and im == C5_K3 and findings == []
    assert dumps_certificate(im, n) == text


@pytest.mark.parametrize(
    "doc",
    ["not json", "[]", '{"n": -1, "branch": [], "paths": []}', '{"n": 3, "branch": [true], "paths": []}',
     '{"n": 3, "branch": [], "paths": {}}', '{"n": 3, "branch": [0, 1], "paths": [{"u": 0, "v": 1}]}',
     '{"n": 3, "branch": [0, 1], "paths": [{"u": 0, "v": "1", "vertices": [0, 1]}]}'],
)
def test_unusable_documents(doc):
    with pytest.raises(CertificateSchemaError):
        load_certificate(doc)


def test_ordering_findings():
    data = certificate_dict(C5_K3, 5)
    data["branch"] = [4, 2, 3, 3]
    data["paths"] = data["paths"][::-1] + [data["paths"][0]]
    _, _, findings = load_certificate(json.dumps(data))
    assert {f.kind for f in findings} == {Finding.MALFORMED}
    assert len(findings) == 4


def test_vertex_n_is_reported_by_verifier():
    data = certificate_dict(C5_K3, 5)
    data["paths"][1]["vertices"] = [2, 1, 5, 4]
    n, im, findings = load_certificate(data)
    assert findings == []
    report = verify_immersion(Graph.cycle(5), im)
    assert report.kinds() == {Finding.MALFORMED}
