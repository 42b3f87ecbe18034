"""
JSON algebra description files.

Explicit form::

    {"group": {"rank": 2, "modulus": 4},
     "q": {"kind": "root_of_unity", "order": 4},
     "sigma": [[0, 1], [1, 0]],
     "omega": [[0, 1], [-1, 0]],
     "base": {"kind": "grassmann", "generators": 1, "nilpotency": 2}}

Preset form (sigma, omega, q and group are derived)::

    {"preset": {"kind": "flux", "N": 3}}

``base`` is optional in both forms.  Unknown keys are rejected.
"""
from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from .algebra import AlgebraSpec, BaseAlgebraSpec
from .bicharacter import CommutationFactor, from_flux, modulus_violations
from .kernel import QSpec, StructureError

Matrix = tuple[tuple[int, ...], ...]


class SpecError(ValueError):
    def __init__(self, path: str, message: str, line: int | None = None):
        self.path, self.message, self.line = path, message, line
        where = f"line {line}: " if line else ""
        super().__init__(f"{where}{path}: {message}")


@dataclass(frozen=True)
class SpecDocument:
    rank: int
    modulus: int
    q: QSpec
    sigma: Matrix
    omega: Matrix
    base: BaseAlgebraSpec = field(default_factory=BaseAlgebraSpec)
    preset: tuple[str, int] | None = None

    def factor(self) -> CommutationFactor:
        return CommutationFactor(self.sigma, self.omega, self.q, self.modulus)

    def algebra_spec(self) -> AlgebraSpec:
        return AlgebraSpec(self.factor(), self.base)

    @property
    def flux(self) -> int | None:
        return self.preset[1] if self.preset and self.preset[0] == "flux" else None


def flux_document(n_flux: int, base: BaseAlgebraSpec | None = None) -> SpecDocument:
    cf = from_flux(n_flux)
    return SpecDocument(n_flux, 2, cf.qspec, cf.sigma, cf.omega, base or BaseAlgebraSpec(), ("flux", n_flux))


def emit(doc: SpecDocument) -> dict:
    base = {"kind": doc.base.kind, "generators": doc.base.generators, "nilpotency": doc.base.nilpotency}
    if doc.preset:
        return {"preset": {"kind": doc.preset[0], "N": doc.preset[1]}, "base": base}
    q = {"kind": doc.q.kind} if doc.q.kind == "formal" else {"kind": doc.q.kind, "order": doc.q.order}
    return {
        "group": {"rank": doc.rank, "modulus": doc.modulus},
        "q": q,
        "sigma": [list(r) for r in doc.sigma],
        "omega": [list(r) for r in doc.omega],
        "base": base,
    }


def dumps(doc: SpecDocument) -> str:
    return json.dumps(emit(doc), indent=2, sort_keys=True) + "\n"


def digest(doc: SpecDocument) -> str:
    return hashlib.sha256(json.dumps(emit(doc), sort_keys=True).encode()).hexdigest()[:16]


# ---------------------------------------------------------------------------
# parsing


class _Ctx:
    def __init__(self, text: str | None):
        self.text = text or ""

    def line_of(self, path: str) -> int | None:
        keys = re.findall(r"\.(\w+)", path)
        if not keys:
            return None
        m = re.search(r'"%s"\s*:' % re.escape(keys[-1]), self.text)
        return self.text.count("\n", 0, m.start()) + 1 if m else None

    def fail(self, path: str, message: str):
        raise SpecError(path, message, self.line_of(path))


def _obj(ctx, value, path, allowed, required=()):
    if not isinstance(value, dict):
        ctx.fail(path, "expected an object")
    for k in value:
        if k not in allowed:
            ctx.fail(f"{path}.{k}", f"unknown key {k!r}")
    for k in required:
        if k not in value:
            ctx.fail(f"{path}.{k}", "missing required key")
    return value


def _int(ctx, value, path, lo=None):
    if isinstance(value, bool) or not isinstance(value, int):
        ctx.fail(path, f"expected an integer, got {value!r}")
    if lo is not None and value < lo:
        ctx.fail(path, f"must be >= {lo}")
    return value


def _matrix(ctx, value, path, rank) -> Matrix:
    if not isinstance(value, list) or len(value) != rank:
        ctx.fail(path, f"expected a {rank}x{rank} integer matrix")
    rows = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != rank:
            ctx.fail(f"{path}[{i}]", f"expected a row of length {rank}")
        rows.append(tuple(_int(ctx, x, f"{path}[{i}][{j}]") for j, x in enumerate(row)))
    return tuple(rows)


def _base(ctx, value, path) -> BaseAlgebraSpec:
    _obj(ctx, value, path, {"kind", "generators", "nilpotency"})
    kind = value.get("kind", "grassmann")
    m = _int(ctx, value.get("generators", 1), f"{path}.generators", 1)
    if kind == "grassmann":
        k = _int(ctx, value.get("nilpotency", 2), f"{path}.nilpotency")
        if k != 2:
            ctx.fail(f"{path}.nilpotency", "grassmann base has nilpotency 2")
    elif kind == "nilpotent":
        if "nilpotency" not in value:
            ctx.fail(f"{path}.nilpotency", "missing required key")
        k = _int(ctx, value["nilpotency"], f"{path}.nilpotency", 2)
    else:
        ctx.fail(f"{path}.kind", f"unknown base kind {kind!r}")
    return BaseAlgebraSpec(m, k)


def _qspec(ctx, value, path) -> QSpec:
    _obj(ctx, value, path, {"kind", "order"}, ("kind",))
    kind = value["kind"]
    if kind == "formal":
        if "order" in value:
            ctx.fail(f"{path}.order", "formal q has no order")
        return QSpec.formal()
    if kind == "root_of_unity":
        if "order" not in value:
            ctx.fail(f"{path}.order", "missing required key")
        return QSpec.root_of_unity(_int(ctx, value["order"], f"{path}.order", 2))
    ctx.fail(f"{path}.kind", f"unknown q kind {kind!r}")


def from_dict(data, text: str | None = None) -> SpecDocument:
    ctx = _Ctx(text)
    _obj(ctx, data, "$", {"group", "q", "sigma", "omega", "base", "preset"})
    base = _base(ctx, data["base"], "$.base") if "base" in data else BaseAlgebraSpec()

    if "preset" in data:
        for k in ("sigma", "omega", "q"):
            if k in data:
                ctx.fail(f"$.{k}", "preset and explicit sigma/omega/q are mutually exclusive")
        p = _obj(ctx, data["preset"], "$.preset", {"kind", "N"}, ("kind", "N"))
        if p["kind"] != "flux":
            ctx.fail("$.preset.kind", f"unknown preset {p['kind']!r}")
        n = _int(ctx, p["N"], "$.preset.N", 1)
        doc = flux_document(n, base)
        if "group" in data:
            g = _obj(ctx, data["group"], "$.group", {"rank", "modulus"}, ("rank", "modulus"))
            if (g["rank"], g["modulus"]) != (n, 2):
                ctx.fail("$.group", f"flux preset N={n} lives on Z_2^{n}")
        return doc

    _obj(ctx, data, "$", {"group", "q", "sigma", "omega", "base"}, ("group", "q", "sigma", "omega"))
    g = _obj(ctx, data["group"], "$.group", {"rank", "modulus"}, ("rank", "modulus"))
    rank = _int(ctx, g["rank"], "$.group.rank", 0)
    modulus = _int(ctx, g["modulus"], "$.group.modulus", 0)
    if modulus == 1:
        ctx.fail("$.group.modulus", "modulus must be 0 (Z^N) or >= 2")
    q = _qspec(ctx, data["q"], "$.q")
    sigma = _matrix(ctx, data["sigma"], "$.sigma", rank)
    omega = _matrix(ctx, data["omega"], "$.omega", rank)
    for i in range(rank):
        for j in range(rank):
            if sigma[i][j] != sigma[j][i]:
                ctx.fail(f"$.sigma[{i}][{j}]", "sigma not symmetric")
            if omega[i][j] != -omega[j][i]:
                ctx.fail(f"$.omega[{i}][{j}]", "omega not antisymmetric")
    bad = modulus_violations(sigma, omega, q, modulus)
    if bad:
        ctx.fail("$.group.modulus", "factor not well defined modulo %d: %s" % (modulus, "; ".join(bad)))
    try:
        return SpecDocument(rank, modulus, q, sigma, omega, base)
    except StructureError as exc:
        ctx.fail("$", str(exc))


def loads(text: str) -> SpecDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError("$", f"malformed JSON: {exc.msg}", exc.lineno) from None
    return from_dict(data, text)


def parse_spec(path: str | Path) -> SpecDocument:
    text = Path(path).read_text(encoding="utf-8")
    return loads(text)
