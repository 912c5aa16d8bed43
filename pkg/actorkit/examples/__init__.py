"""Bundled example algebras."""

from .catalog import CATALOG, cayley_dickson, is_example, list_examples, load_example, with_zero_bracket

__all__ = ["CATALOG", "cayley_dickson", "is_example", "list_examples", "load_example", "with_zero_bracket"]
