"""Network JSON and DOT serialization."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Union

from .graph import LinkKind, TwoLayerNetwork


def network_to_dict(net: TwoLayerNetwork) -> dict[str, Any]:
    return {
        "n1": net.n1,
        "n2": net.n2,
        "edges": [{"u": u, "v": v, "kind": kind.value} for u, v, kind in net.edges()],
    }


def network_from_dict(data: dict[str, Any]) -> TwoLayerNetwork:
    try:
        n1, n2 = int(data["n1"]), int(data["n2"])
        prot, nonp = [], []
        for item in data["edges"]:
            kind = LinkKind(item["kind"])
            (prot if kind is LinkKind.PROTECTED else nonp).append((int(item["u"]), int(item["v"])))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed network JSON: {exc}") from exc
    return TwoLayerNetwork.from_edges(n1, n2, prot, nonp)


def load_network(path: Union[str, Path]) -> TwoLayerNetwork:
    with open(path) as fh:
        return network_from_dict(json.load(fh))


def fraction_to_dict(x: Fraction) -> dict[str, int]:
    return {"num": x.numerator, "den": x.denominator}


def network_to_dot(net: TwoLayerNetwork, name: str = "network") -> str:
    lines = [f"graph {name} {{"]
    for i in net.nodes:
        shape = "box" if net.node_type(i) == 2 else "circle"
        lines.append(f"  {i} [shape={shape}];")
    for u, v, kind in net.edges():
        style = "bold" if kind is LinkKind.PROTECTED else "dashed"
        lines.append(f"  {u} -- {v} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
