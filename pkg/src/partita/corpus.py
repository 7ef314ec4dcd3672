"""Declarative corpus of named groups.

A manifest is a JSON document ``{"entries": [{name, kind, params, tags?, order?}]}``.
``params`` of ``direct`` and ``semidirect`` entries nest further
``{kind, params}`` specs. Recognised tags:

``psl-2-q`` / ``pgl-2-q``
    the group is isomorphic to PSL(2, q) / PGL(2, q); used by the
    partition classification cross-check.
``schmidt-expected``
    documentation only: the group is expected to be minimal non-nilpotent.
``t2-boundary``
    the group probes an ambiguous case of the EF-partition classification.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

from . import group as gc
from .group import FiniteGroup, GroupError

__all__ = [
    "ManifestError",
    "CorpusEntry",
    "CorpusManifest",
    "BUILTIN_ENTRIES",
    "KINDS",
    "build_spec",
    "load_manifest",
    "builtin_manifest",
    "named_action",
]

KINDS = ("cyclic", "abelian", "dihedral", "quaternion", "symmetric", "alternating",
         "direct", "semidirect", "metacyclic", "cayley-file", "example108")


class ManifestError(ValueError):
    pass


def named_action(name, acting: FiniteGroup, normal: FiniteGroup):
    """Resolve a declarative action into permutation tables, one per acting element.

    ``"trivial"``; ``"inversion"`` (acting group Z2, normal group abelian);
    ``{"power": r}`` (cyclic acting group whose generator 1 maps every
    element to its r-th power, normal group abelian); ``"q8-order3"``
    (Z3 rotating i -> j -> k in Q8); or an explicit list of tables.
    """
    n = normal.order
    if isinstance(name, list):
        return name
    if name == "trivial":
        return [list(range(n))] * acting.order
    if isinstance(name, dict) and "power" in name:
        r = int(name["power"])
        if not acting.is_cyclic or not normal.is_abelian:
            raise GroupError("power action needs a cyclic acting group and abelian normal group")
        gen = int(next(x for x in range(acting.order) if acting.orders[x] == acting.order))
        base = [normal.power(a, r) for a in range(n)]
        perms = {0: list(range(n))}
        cur, x = list(range(n)), 0
        for _ in range(acting.order - 1):
            cur = [base[c] for c in cur]
            x = acting.mul(x, gen)
            perms[x] = cur
        return [perms[x] for x in range(acting.order)]
    if name == "inversion":
        if acting.order != 2 or not normal.is_abelian:
            raise GroupError("inversion action needs Z2 acting on an abelian group")
        return [list(range(n)), normal.inverse.tolist()]
    if name == "q8-order3":
        if acting.order != 3 or normal.order != 8:
            raise GroupError("q8-order3 needs Z3 acting on Q8")
        # quaternion(8): x = index 1 (i), y = index 4 (j), xy = index 5 (k)
        sigma = gc.hom_from_images(normal, [1, 4], [4, 5])
        sigma2 = [sigma[sigma[a]] for a in range(n)]
        return [list(range(n)), sigma, sigma2]
    raise GroupError(f"unknown action {name!r}")


def build_spec(kind: str, params: dict | None = None, name: str | None = None,
               base: Path | None = None) -> FiniteGroup:
    params = dict(params or {})
    if kind in ("cyclic", "abelian", "dihedral", "quaternion", "symmetric", "alternating", "metacyclic"):
        g = gc.build_family(kind, **params)
    elif kind == "direct":
        factors = [build_spec(f["kind"], f.get("params"), base=base) for f in params["factors"]]
        g = gc.direct_product(*factors)
    elif kind == "semidirect":
        acting = build_spec(params["acting"]["kind"], params["acting"].get("params"), base=base)
        normal = build_spec(params["normal"]["kind"], params["normal"].get("params"), base=base)
        g = gc.build_semidirect(acting, normal, named_action(params.get("action", "trivial"), acting, normal))
    elif kind == "cayley-file":
        path = Path(params["path"])
        if not path.is_absolute() and base is not None:
            path = base / path
        g = gc.read_cayley(path)
    elif kind == "example108":
        from .constructions import example_group_108
        g = example_group_108()[0]
    else:
        raise GroupError(f"unknown builder kind {kind!r}")
    if name:
        g.name = name
    return g


@dataclass
class CorpusEntry:
    name: str
    kind: str
    params: dict = field(default_factory=dict)
    tags: list[str] = field(default_factory=list)
    order: int | None = None
    base: Path | None = None

    @cached_property
    def group(self) -> FiniteGroup:
        g = build_spec(self.kind, self.params, self.name, self.base)
        if self.order is not None and g.order != self.order:
            raise GroupError(f"{self.name}: declared order {self.order}, built {g.order}")
        return g

    def to_json(self) -> dict:
        d = {"name": self.name, "kind": self.kind, "params": self.params}
        if self.tags:
            d["tags"] = list(self.tags)
        if self.order is not None:
            d["order"] = self.order
        return d


@dataclass
class CorpusManifest:
    entries: list[CorpusEntry]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    @property
    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def get(self, name: str) -> CorpusEntry:
        for e in self.entries:
            if e.name == name:
                return e
        low = name.lower()
        for e in self.entries:
            if e.name.lower() == low:
                return e
        raise KeyError(name)

    def to_json(self) -> dict:
        return {"entries": [e.to_json() for e in self.entries]}


def _entries_from(doc, base: Path | None) -> list[CorpusEntry]:
    if not isinstance(doc, dict) or not isinstance(doc.get("entries", []), list):
        raise ManifestError("manifest must be an object with an 'entries' list")
    out, seen = [], set()
    for i, raw in enumerate(doc.get("entries", [])):
        where = f"entries[{i}]"
        if not isinstance(raw, dict) or "name" not in raw or "kind" not in raw:
            raise ManifestError(f"{where}: entry needs 'name' and 'kind'")
        if raw["kind"] not in KINDS:
            raise ManifestError(f"{where}: unknown builder kind {raw['kind']!r}")
        if raw["name"] in seen:
            raise ManifestError(f"{where}: duplicate name {raw['name']!r}")
        seen.add(raw["name"])
        out.append(CorpusEntry(raw["name"], raw["kind"], dict(raw.get("params", {})),
                               list(raw.get("tags", [])), raw.get("order"), base))
    return out


def load_manifest(source=None, validate: bool = True) -> CorpusManifest:
    """Load a manifest from a path, a parsed document, or the built-in corpus.

    ``source=None`` honours ``PARTITA_CORPUS`` and falls back to the built-in
    corpus; ``"builtin"`` always selects it. With ``validate`` every entry is
    built, so parameter errors surface here with the entry location.
    """
    if source is None:
        source = os.environ.get("PARTITA_CORPUS") or "builtin"
    if isinstance(source, dict):
        entries = _entries_from(source, None)
    elif source == "builtin":
        entries = _entries_from({"entries": BUILTIN_ENTRIES}, None)
    else:
        path = Path(source)
        try:
            text = path.read_text()
        except OSError as exc:
            raise ManifestError(f"cannot read manifest {path}: {exc}") from None
        doc = json.loads(text) if text.strip() else {"entries": []}
        entries = _entries_from(doc, path.parent)
    if validate:
        for i, e in enumerate(entries):
            try:
                e.group
            except (GroupError, KeyError, TypeError) as exc:
                raise ManifestError(f"entries[{i}] ({e.name}): {exc}") from None
    return CorpusManifest(entries)


def builtin_manifest() -> CorpusManifest:
    return load_manifest("builtin")


def _q8():
    return {"kind": "quaternion", "params": {"order": 8}}


def _z(n):
    return {"kind": "cyclic", "params": {"n": n}}


BUILTIN_ENTRIES = (
    [{"name": f"Z{n}", "kind": "cyclic", "params": {"n": n}, "order": n} for n in range(1, 17)]
    + [
        {"name": "V4", "kind": "abelian", "params": {"factors": [2, 2]}, "order": 4},
        {"name": "Z3xZ3", "kind": "abelian", "params": {"factors": [3, 3]}, "order": 9},
        {"name": "Z2xZ2xZ2", "kind": "abelian", "params": {"factors": [2, 2, 2]}, "order": 8},
        {"name": "Z4xZ2", "kind": "abelian", "params": {"factors": [4, 2]}, "order": 8,
         "tags": ["t2-boundary"]},
        {"name": "D8", "kind": "dihedral", "params": {"n": 4}, "order": 8},
        {"name": "D10", "kind": "dihedral", "params": {"n": 5}, "order": 10, "tags": ["schmidt-expected"]},
        {"name": "D12", "kind": "dihedral", "params": {"n": 6}, "order": 12},
        {"name": "Q8", "kind": "quaternion", "params": {"order": 8}, "order": 8},
        {"name": "Q16", "kind": "quaternion", "params": {"order": 16}, "order": 16},
        {"name": "S3", "kind": "symmetric", "params": {"n": 3}, "order": 6,
         "tags": ["psl-2-2", "pgl-2-2", "schmidt-expected"]},
        {"name": "A4", "kind": "alternating", "params": {"n": 4}, "order": 12,
         "tags": ["psl-2-3", "schmidt-expected"]},
        {"name": "S4", "kind": "symmetric", "params": {"n": 4}, "order": 24, "tags": ["pgl-2-3"]},
        {"name": "A5", "kind": "alternating", "params": {"n": 5}, "order": 60,
         "tags": ["psl-2-4", "psl-2-5"]},
        {"name": "Z7:Z3", "kind": "metacyclic", "params": {"p": 7, "q": 3, "m": 1, "r": 2}, "order": 21,
         "tags": ["schmidt-expected"]},
        {"name": "(Z3xZ3):Z2", "kind": "semidirect", "order": 18, "tags": ["frobenius"],
         "params": {"acting": _z(2), "normal": {"kind": "abelian", "params": {"factors": [3, 3]}},
                    "action": "inversion"}},
        {"name": "SL(2,3)", "kind": "semidirect", "order": 24, "tags": ["schmidt-expected"],
         "params": {"acting": _z(3), "normal": _q8(), "action": "q8-order3"}},
        {"name": "Z3xQ8", "kind": "direct", "params": {"factors": [_z(3), _q8()]}, "order": 24},
        {"name": "Z5xQ8", "kind": "direct", "params": {"factors": [_z(5), _q8()]}, "order": 40},
        {"name": "Z2xQ8", "kind": "direct", "params": {"factors": [_z(2), _q8()]}, "order": 16,
         "tags": ["t2-boundary"]},
        {"name": "example108", "kind": "example108", "params": {}, "order": 108},
    ]
)
