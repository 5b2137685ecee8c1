"""thermobase: a desk-scale thermochemical compound store.

Parses hydrocarbon/organic structures, extracts bond-additivity
descriptors, estimates and refits standard enthalpies of formation, and
serves a searchable, consistency-checked compound store over an HTTP
API and a CLI.
"""

__version__ = "0.1.0"
