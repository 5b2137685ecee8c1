"""Descriptor-code descriptions.

A versioned data file ships the description list for the standard code
set; anything outside it falls back to the grammar-derived description.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from thermobase.elba import describe_code


@lru_cache(maxsize=1)
def _load() -> dict[str, str]:
    text = resources.files("thermobase.data").joinpath("elba_codes.json").read_text()
    return dict(json.loads(text)["codes"])


def codebook_version() -> str:
    text = resources.files("thermobase.data").joinpath("elba_codes.json").read_text()
    return str(json.loads(text)["version"])


def describe(code: str) -> str:
    return _load().get(code) or describe_code(code)


def known_codes() -> tuple[str, ...]:
    return tuple(sorted(_load()))
