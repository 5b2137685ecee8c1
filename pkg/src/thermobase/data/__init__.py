"""Bundled data files: atomic weights, code descriptions, fixture dataset."""

from importlib import resources


def bundled_compounds_path():
    """Path-like handle to the packaged compound dataset (JSON lines)."""
    return resources.files("thermobase.data").joinpath("compounds.jsonl")
