from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import pytest

from multiplier_core.domains import ProductDomain
from multiplier_core.settings import grid_setting, quadrature_setting, tolerance_setting

REPO_ROOT = Path(__file__).resolve().parents[1]


@pytest.fixture(autouse=True)
def restore_engine_settings():
    """The runner pushes its knobs into the shared setting models; undo that after each test."""
    saved = [(model, model.model_dump()) for model in (quadrature_setting, grid_setting, tolerance_setting)]
    yield
    for model, values in saved:
        for key, value in values.items():
            setattr(model, key, value)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


@pytest.fixture
def disc() -> ProductDomain:
    return ProductDomain.polydisc(1, 2.0)


@pytest.fixture
def bidisc() -> ProductDomain:
    return ProductDomain.polydisc(2, 2.0)


def config_path(name: str) -> Path:
    return REPO_ROOT / 'configs' / name


def write_json(path: Path, payload: dict) -> Path:
    path.write_text(json.dumps(payload, sort_keys=True), encoding='utf-8')
    return path
