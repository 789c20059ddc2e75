"""Bundled .alg corpus with oracle-produced verdict sidecars (.expect.json)."""
from __future__ import annotations

import json
from importlib.resources import files


def fixture_names() -> list[str]:
    root = files(__name__)
    return sorted(
        entry.name[: -len(".alg")]
        for entry in root.iterdir()
        if entry.name.endswith(".alg")
    )


def fixture_path(name: str):
    return files(__name__) / f"{name}.alg"


def fixture_text(name: str) -> str:
    return fixture_path(name).read_text(encoding="utf-8")


def expectations(name: str) -> dict:
    raw = (files(__name__) / f"{name}.expect.json").read_text(encoding="utf-8")
    return json.loads(raw)
