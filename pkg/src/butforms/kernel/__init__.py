from .gens import Gen, Kind, LAM, MU, NU, Q, a_gen, aux, level_gen, parse_gen, unit
from .mpoly import LaurentError, MPoly, const, from_text, gen, poly_sum, to_text
from .ratfunc import RatFunc, simplify

__all__ = [
    "Gen", "Kind", "LAM", "MU", "NU", "Q", "a_gen", "aux", "level_gen", "parse_gen", "unit",
    "LaurentError", "MPoly", "const", "from_text", "gen", "poly_sum", "to_text",
    "RatFunc", "simplify",
]
