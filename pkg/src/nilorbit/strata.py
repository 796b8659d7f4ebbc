"""Stratum orderings, classification, generic stratum, index, and layering.

Index sets carry the total order  e1 < e2  iff  min(e1 \\ e2) < min(e2 \\ e1)
with min(empty) = infinity, so the empty set is the maximum.  Fine labels are
m-tuples of index sets compared lexicographically; both scan directions
occur in practice, so the variant is a parameter everywhere and every
report records which one was used.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from random import Random
from typing import Iterable, Sequence

from .algebra import Flag, derived_subalgebra
from .coadjoint import (
    Functional,
    fine_jump_tuple,
    random_functional,
)
from .polys import Poly, generic_rank_rows

IndexSetLabel = tuple[int, ...]
FineLabel = tuple[IndexSetLabel, ...]

ORDER_VARIANTS = ("lex_ascending", "lex_descending")


def compare_index_sets(e1: Iterable[int], e2: Iterable[int]) -> int:
    """-1, 0 or 1; the empty set is the maximum of the order."""
    s1, s2 = set(e1), set(e2)
    if s1 == s2:
        return 0
    only1 = s1 - s2
    only2 = s2 - s1
    m1 = min(only1) if only1 else None
    m2 = min(only2) if only2 else None
    if m2 is None or (m1 is not None and m1 < m2):
        return -1
    return 1


def compare_fine_labels(
    eps1: FineLabel, eps2: FineLabel, order_variant: str = "lex_ascending"
) -> int:
    if len(eps1) != len(eps2):
        raise ValueError("fine labels of different lengths")
    if order_variant not in ORDER_VARIANTS:
        raise ValueError(f"unknown order variant {order_variant!r}")
    ks = range(len(eps1))
    if order_variant == "lex_descending":
        ks = reversed(ks)
    for k in ks:
        c = compare_index_sets(eps1[k], eps2[k])
        if c:
            return c
    return 0


def classify_point(flag: Flag, xi: Functional) -> tuple[IndexSetLabel, FineLabel]:
    """Coarse and fine stratum labels of a dual point."""
    fine = fine_jump_tuple(flag, xi)
    coarse = fine[-1] if fine else ()
    return coarse, fine


def character_label(m: int) -> FineLabel:
    return tuple(() for _ in range(m))


@dataclass(frozen=True)
class IndexResult:
    ind: int
    generic_label: IndexSetLabel
    generic_fine: FineLabel
    certification: dict


def _symbolic_fine_label(flag: Flag) -> FineLabel:
    """Generic fine label with the dual coordinates treated as indeterminates."""
    m = flag.dim
    zero = Poly.zero(m)
    form = [[zero] * m for _ in range(m)]
    for (a, b), sparse in flag.pair_support.items():
        entry = Poly.make(
            m, {tuple(1 if v == i else 0 for v in range(m)): c for i, c in sparse}
        )
        form[a][b] = entry
        form[b][a] = -entry
    label = []
    for k in range(1, m + 1):
        block = [row[:k] for row in form[:k]]
        jumps = generic_rank_rows(block, k)
        label.append(tuple(j + 1 for j in jumps))
    return tuple(label)


def generic_stratum(
    flag: Flag,
    mode: str = "symbolic",
    samples: int = 64,
    seed: int = 0,
    bound: int = 7,
) -> IndexResult:
    """The generic (minimal) stratum and the index ind = m - |e1|.

    Symbolic mode decides every rank test over the field of rational
    functions in the dual coordinates; sampled mode classifies random points
    and keeps the order-minimal realized label, reporting how many samples
    agreed with it.
    """
    m = flag.dim
    if mode == "symbolic":
        fine = _symbolic_fine_label(flag)
        coarse = fine[-1] if fine else ()
        cert = {"mode": "symbolic"}
    elif mode == "sampled":
        if samples < 1:
            raise ValueError("sampled mode needs at least one sample")
        rng = Random(seed)
        best: FineLabel | None = None
        counts: dict[FineLabel, int] = {}
        for _ in range(samples):
            xi = random_functional(flag.algebra, rng, bound)
            fine_label = fine_jump_tuple(flag, xi)
            counts[fine_label] = counts.get(fine_label, 0) + 1
            if best is None or compare_fine_labels(fine_label, best) < 0:
                best = fine_label
        assert best is not None
        fine = best
        coarse = fine[-1] if fine else ()
        cert = {
            "mode": "sampled",
            "samples": samples,
            "seed": seed,
            "agreeing_samples": counts[best],
        }
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return IndexResult(m - len(coarse), coarse, fine, cert)


@dataclass(frozen=True)
class StratumSample:
    label: FineLabel
    representative: Functional
    orbit_dim: int


def enumerate_strata(
    flag: Flag,
    samples: int,
    seed: int = 0,
    extra_points: Sequence[Functional] = (),
    bound: int = 7,
) -> list[StratumSample]:
    """Distinct fine labels found by sampling plus caller probes.

    The result is only a lower bound for the true stratum set; reports must
    carry that caveat.  Output is sorted by label in ascending order of the
    default variant, with one representative per label (probes win ties).
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = Random(seed)
    points = list(extra_points) + [
        random_functional(flag.algebra, rng, bound) for _ in range(samples)
    ]
    found: dict[FineLabel, Functional] = {}
    for xi in points:
        label = fine_jump_tuple(flag, xi)
        if label not in found:
            found[label] = xi
    out = [
        StratumSample(label, xi, len(label[-1]) if label else 0)
        for label, xi in found.items()
    ]
    out.sort(key=functools.cmp_to_key(lambda a, b: compare_fine_labels(a.label, b.label)))
    return out


@dataclass(frozen=True)
class Layer:
    label: FineLabel
    representative: Functional
    orbit_dim: int
    is_character_layer: bool
    character_dim: int | None


@dataclass(frozen=True)
class LayerReport:
    order_variant: str
    layers: tuple[Layer, ...]
    sampled_lower_bound: bool = True


def composition_layers(
    flag: Flag,
    strata: Sequence[StratumSample],
    order_variant: str = "lex_ascending",
) -> LayerReport:
    """Order realized strata into the composition-series layering.

    Layers are sorted so the generic label comes first and the character
    label (all components empty) comes last; the character layer carries the
    dimension of the annihilator of [g, g], the parameter space of the
    characters.
    """
    if not strata:
        raise ValueError("no strata supplied")
    m = flag.dim
    char = character_label(m)
    labels = [s.label for s in strata]
    if char not in labels:
        raise ValueError(
            "character stratum missing from the supplied strata; "
            "every nilpotent algebra has characters"
        )
    ordered = sorted(
        strata,
        key=functools.cmp_to_key(
            lambda a, b: compare_fine_labels(a.label, b.label, order_variant)
        ),
    )
    char_dim = m - derived_subalgebra(flag.algebra).dim
    layers = []
    for s in ordered:
        is_char = s.label == char
        layers.append(
            Layer(s.label, s.representative, s.orbit_dim, is_char, char_dim if is_char else None)
        )
    if not layers[-1].is_character_layer:
        raise RuntimeError("character layer did not sort last; ordering is broken")
    return LayerReport(order_variant, tuple(layers))
