import functools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from nilorbit.algebra import jordan_holder_flag


@functools.lru_cache(maxsize=None)
def flag_of(g):
    """Per-algebra flag cache; flags are immutable and expensive to verify."""
    return jordan_holder_flag(g)
