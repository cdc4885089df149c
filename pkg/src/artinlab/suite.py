"""Golden checks over the bundled example algebras."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .algebra import find_algebra_isomorphism
from .invariants import Caps, stable_profile
from .io import parse_algebra_file
from .linalg import Field
from .surgery import remove_nodes, verify_surgery


@dataclass
class Check:
    name: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def line(self) -> str:
        mark = "PASS" if self.ok else "FAIL"
        return f"{mark} {self.name}: expected {self.expected!r}, got {self.actual!r}"


def fixture_dir() -> Path:
    return Path(str(resources.files("artinlab") / "fixtures" / "paper"))


def _extract(report: dict, key: str):
    if key in ("del", "phi_dim", "psi_dim", "dd", "nu_dd"):
        return report[key]["value"]
    if key == "registry":
        return report["registry"]["classes"]
    if key == "frobenius_dim":
        return report["frobenius_part"]["dim"]
    if key == "frobenius_nonprojective_classes":
        return report["frobenius_part"].get("nonprojective_classes", 0)
    return report[key]


def run_suite(field: Field | None = None, caps: Caps | None = None, seed: int = 0,
              directory: Path | None = None) -> list[Check]:
    directory = Path(directory) if directory else fixture_dir()
    expected = json.loads((directory / "expected.json").read_text())
    surgery = expected.pop("surgery", {})
    caps = caps or Caps()
    algebras = {}
    checks: list[Check] = []

    def load(name):
        if name not in algebras:
            algebras[name] = parse_algebra_file(directory / f"{name}.json", field, seed)
        return algebras[name]

    for name, table in expected.items():
        try:
            a = load(name)
            report = stable_profile(a, caps, seed, name)
        except Exception as exc:  # a broken fixture is a named failure, not a crash
            checks.append(Check(f"{name}: load", "ok", f"{type(exc).__name__}: {exc}"))
            continue
        for key, want in table.items():
            checks.append(Check(f"{name}: {key}", want, _extract(report, key)))
    for name, table in surgery.items():
        try:
            r = remove_nodes(load(name), seed)
            ver = verify_surgery(r, caps, seed)
        except Exception as exc:
            checks.append(Check(f"surgery {name}: run", "ok", f"{type(exc).__name__}: {exc}"))
            continue
        data = r.to_json()
        for key, want in table.items():
            if key == "node_free":
                got = ver["node_free"] == "pass"
            elif key == "counts":
                got = ver["counts"]
            elif key == "isomorphic_to":
                got = want if find_algebra_isomorphism(r.result, load(want), seed) is not None else None
            else:
                got = data[key]
            checks.append(Check(f"surgery {name}: {key}", want, got))
    return checks
