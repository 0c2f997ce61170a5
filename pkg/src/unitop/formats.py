"""JSON / DOT / CSV serialization. All writers are deterministic."""
from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from pathlib import Path

from .errors import InvalidSpace
from .families import DirectedFamily
from .lattice import UniformLattice, atoms, cellularity, complemented, hasse, pi_density
from .space import FiniteSpace, build_space, from_preorder


def space_from_dict(data: dict) -> FiniteSpace:
    if not isinstance(data, dict) or "points" not in data:
        raise InvalidSpace('space JSON needs a "points" array')
    points = data["points"]
    if not isinstance(points, list) or not all(isinstance(p, str) for p in points):
        raise InvalidSpace('"points" must be an array of strings')
    if "opens" in data:
        opens = data["opens"]
        if not isinstance(opens, list) or not all(isinstance(u, list) for u in opens):
            raise InvalidSpace('"opens" must be an array of label arrays')
        return build_space(points, opens)
    if "preorder" in data:
        rel = data["preorder"]
        if not isinstance(rel, list) or not all(isinstance(r, list) for r in rel):
            raise InvalidSpace('"preorder" must be a boolean matrix')
        return from_preorder(points, [[bool(v) for v in row] for row in rel])
    raise InvalidSpace('space JSON needs "opens" or "preorder"')


def load_space(path: str | os.PathLike) -> FiniteSpace:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidSpace(f"{path}: not valid JSON ({exc.msg})") from None
    return space_from_dict(data)


def family_from_dict(space: FiniteSpace, data: dict) -> DirectedFamily:
    members = data.get("members") if isinstance(data, dict) else None
    if not isinstance(members, list):
        raise InvalidSpace('family JSON needs a "members" array')
    return DirectedFamily(space, [space.mask(m) for m in members])


def family_to_dict(fam: DirectedFamily) -> dict:
    return {"members": [fam.space.labels_of(m) for m in fam.members]}


def lattice_to_dict(L: UniformLattice) -> dict:
    return {
        "space": L.space.to_dict(),
        "elements": [L.space.labels_of(c) for c in L.canons],
        "leq_matrix": [[int(v) for v in row] for row in L.leq_matrix],
        "atoms": atoms(L),
        "complemented": [list(p) for p in complemented(L)],
        "c": cellularity(L),
        "pi": pi_density(L),
    }


def lattice_to_dot(L: UniformLattice, name: str = "lattice") -> str:
    """Hasse diagram, drawn bottom to top, one rank per row."""
    ranks = L.ranks()
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i in range(len(L)):
        lines.append(f'  n{i} [label="{L.label(i)}"];')
    for r in sorted(set(ranks)):
        same = " ".join(f"n{i};" for i in range(len(L)) if ranks[i] == r)
        lines.append(f"  {{ rank=same; {same} }}")
    for lo, hi in hasse(L):
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def rows_to_csv(rows: list[dict], fields: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def write_atomic(path: str | os.PathLike, text: str) -> None:
    """Write through a temp file in the same directory so failures leave nothing behind."""
    path = Path(path)
    if path.is_symlink() or (path.exists() and not path.is_file()):
        # never rename over links, devices or pipes
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        return
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent or ".")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
