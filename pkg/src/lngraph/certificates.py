"""Path and cycle certificates and their JSON form.

Wire format::

    {"n": 6, "kind": "path", "vertices": [[1, 2], ...], "endpoints": [[1, 2], [1, 3]]}
    {"n": 6, "kind": "cycle", "vertices": [[1, 2], ...], "anchor": [1, 2]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Tuple, Union

from lngraph.graph import Vertex


class CertificateFormatError(ValueError):
    pass


@dataclass(frozen=True)
class PathCertificate:
    n: int
    endpoints: Tuple[Vertex, Vertex]
    vertices: Tuple[Vertex, ...]

    kind = "path"

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def is_hamiltonian_size(self) -> bool:
        return len(self.vertices) == self.n * (self.n - 1)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "kind": "path",
            "vertices": [list(v) for v in self.vertices],
            "endpoints": [list(v) for v in self.endpoints],
        }


@dataclass(frozen=True)
class CycleCertificate:
    n: int
    anchor: Vertex
    vertices: Tuple[Vertex, ...]

    kind = "cycle"

    @property
    def length(self) -> int:
        return len(self.vertices)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "kind": "cycle",
            "vertices": [list(v) for v in self.vertices],
            "anchor": list(self.anchor),
        }


Certificate = Union[PathCertificate, CycleCertificate]


def dumps(cert: Certificate) -> str:
    return json.dumps(cert.to_dict(), separators=(", ", ": ")) + "\n"


def _pair(raw, what: str) -> Vertex:
    if (
        not isinstance(raw, list)
        or len(raw) != 2
        or not all(isinstance(x, int) and not isinstance(x, bool) for x in raw)
    ):
        raise CertificateFormatError(f"{what} must be a [head, tail] integer pair, got {raw!r}")
    return Vertex(raw[0], raw[1])


def from_dict(data) -> Certificate:
    if not isinstance(data, dict):
        raise CertificateFormatError("certificate must be a JSON object")
    n = data.get("n")
    if not isinstance(n, int) or isinstance(n, bool):
        raise CertificateFormatError("'n' must be an integer")
    raw_vertices = data.get("vertices")
    if not isinstance(raw_vertices, list):
        raise CertificateFormatError("'vertices' must be a list")
    vertices = tuple(_pair(x, f"vertices[{k}]") for k, x in enumerate(raw_vertices))
    kind = data.get("kind")
    if kind == "path":
        if "endpoints" in data:
            ends = data["endpoints"]
            if not isinstance(ends, list) or len(ends) != 2:
                raise CertificateFormatError("'endpoints' must hold two vertices")
            endpoints = (_pair(ends[0], "endpoints[0]"), _pair(ends[1], "endpoints[1]"))
        elif vertices:
            endpoints = (vertices[0], vertices[-1])
        else:
            raise CertificateFormatError("empty path without endpoints")
        return PathCertificate(n=n, endpoints=endpoints, vertices=vertices)
    if kind == "cycle":
        if "anchor" in data:
            anchor = _pair(data["anchor"], "anchor")
        elif vertices:
            anchor = vertices[0]
        else:
            raise CertificateFormatError("empty cycle without anchor")
        return CycleCertificate(n=n, anchor=anchor, vertices=vertices)
    raise CertificateFormatError(f"'kind' must be 'path' or 'cycle', got {kind!r}")


def loads(text: str) -> Certificate:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"malformed JSON: {exc}") from exc
    return from_dict(data)
