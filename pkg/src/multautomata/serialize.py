"""JSON and DOT forms of linear representations.

JSON schema::

    {"semiring": "rational", "alphabet": ["a", "b"], "dim": 2,
     "lambda": ["1", "0"], "mu": {"a": [["0", "1"], ["0", "0"]], ...},
     "gamma": ["0", "1"]}

Scalars are strings in the semiring's canonical rendering (``"1/2"``,
``"-inf"``...), so ``dumps(loads(text)) == text`` for any text produced by
:func:`dumps`.
"""

from __future__ import annotations

import json

from .semiring import semiring_from_tag
from .series import LinearRepresentation

__all__ = ["rep_to_dict", "rep_from_dict", "dumps", "loads", "export_dot"]


def rep_to_dict(rep: LinearRepresentation) -> dict:
    fmt = rep.semiring.format
    return {
        "semiring": rep.semiring.tag,
        "alphabet": list(rep.alphabet),
        "dim": rep.dim,
        "lambda": [fmt(x) for x in rep.lam],
        "mu": {a: [[fmt(x) for x in row] for row in rep.mu[a]] for a in rep.alphabet},
        "gamma": [fmt(x) for x in rep.gamma],
    }


def rep_from_dict(data: dict) -> LinearRepresentation:
    sr = semiring_from_tag(data["semiring"])

    def scalar(x):
        return sr.parse(x) if isinstance(x, str) else sr.coerce(x)

    rep = LinearRepresentation(
        sr,
        tuple(data["alphabet"]),
        tuple(scalar(x) for x in data["lambda"]),
        {a: tuple(tuple(scalar(x) for x in row) for row in m) for a, m in data["mu"].items()},
        tuple(scalar(x) for x in data["gamma"]),
    )
    if "dim" in data and data["dim"] != rep.dim:
        raise ValueError(f"declared dim {data['dim']} but vectors have length {rep.dim}")
    return rep


def dumps(rep: LinearRepresentation) -> str:
    return json.dumps(rep_to_dict(rep))


def loads(text: str) -> LinearRepresentation:
    return rep_from_dict(json.loads(text))


def export_dot(rep: LinearRepresentation) -> str:
    """Graphviz text: one node per state, arrows for nonzero weights."""
    sr = rep.semiring
    fmt = sr.format
    lines = ["digraph automaton {", "  rankdir=LR;", "  node [shape=circle];"]
    for i in range(rep.dim):
        lines.append(f"  q{i};")
    for i, x in enumerate(rep.lam):
        if not sr.is_zero(x):
            lines.append(f'  in{i} [shape=point]; in{i} -> q{i} [label="{fmt(x)}"];')
    for i, x in enumerate(rep.gamma):
        if not sr.is_zero(x):
            lines.append(f'  out{i} [shape=point]; q{i} -> out{i} [label="{fmt(x)}"];')
    for i in range(rep.dim):
        for j in range(rep.dim):
            for a in rep.alphabet:
                x = rep.mu[a][i][j]
                if not sr.is_zero(x):
                    lines.append(f'  q{i} -> q{j} [label="{a}:{fmt(x)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
