"""Graded augmentations: algebra maps to Z/2 killing the differential.

An assignment sends every generator to 0 or 1; it must vanish on
generators whose grading is not divisible by rho, and for every
generator the sum over its differential words of the product of values
must be 0 mod 2 (the empty word counts 1).
"""
from __future__ import annotations

from .dga import Dga, require_zero_or_odd, rho_divides, validate_rho
from .errors import NotAnAugmentationError, ResourceLimitError
from .halfpow import HalfPow

DEFAULT_MAX_ELIGIBLE = 30

Assignment = dict[str, int]


def is_augmentation(g: Dga, eps: Assignment, rho: int) -> bool:
    validate_rho(rho, g.modulus)
    names = [gen.name for gen in g.generators]
    if set(eps) != set(names):
        raise NotAnAugmentationError("assignment must cover exactly the generators")
    for gen in g.generators:
        if eps[gen.name] not in (0, 1):
            raise NotAnAugmentationError(f"value of {gen.name} must be 0 or 1")
        if eps[gen.name] and not rho_divides(rho, gen.grading):
            return False
    for gen in g.generators:
        total = 0
        for word in g.differential[gen.name]:
            prod = 1
            for letter in word:
                if not eps[letter]:
                    prod = 0
                    break
            total ^= prod
        if total:
            return False
    return True


def _equations(g: Dga, eligible: set[str]):
    """Per-generator equations restricted to eligible variables.

    Words containing a forced-zero letter vanish; the empty word flips
    the constant.  Returns (constant, words) pairs with words as tuples
    of eligible names, or None when some equation is constant 1.
    """
    eqs = []
    for gen in g.generators:
        const = 0
        words = []
        for word in g.differential[gen.name]:
            if not word:
                const ^= 1
            elif all(x in eligible for x in word):
                words.append(word)
        if not words and const:
            return None
        if words:
            eqs.append((const, words))
    return eqs


def enumerate_augmentations(
    g: Dga, rho: int, *, max_eligible: int = DEFAULT_MAX_ELIGIBLE
) -> list[Assignment]:
    """All rho-graded augmentations, lexicographic in generator order.

    Exhaustive search over the eligible generators with early pruning:
    each equation is tested as soon as its last variable is decided.
    """
    validate_rho(rho, g.modulus)
    order = [gen.name for gen in g.generators]
    eligible = [name for gen, name in zip(g.generators, order) if rho_divides(rho, gen.grading)]
    if len(eligible) > max_eligible:
        raise ResourceLimitError(
            f"{len(eligible)} eligible generators exceed the bound {max_eligible}"
        )
    eqs = _equations(g, set(eligible))
    if eqs is None:
        return []

    # decide variables in order of first appearance in the equations,
    # then any never-mentioned ones (their bits are free)
    seen: list[str] = []
    seen_set = set()
    for _, words in eqs:
        for word in sorted(words, key=lambda w: (len(w), w)):
            for x in word:
                if x not in seen_set:
                    seen_set.add(x)
                    seen.append(x)
    variables = seen + [x for x in eligible if x not in seen_set]
    var_pos = {x: i for i, x in enumerate(variables)}
    ready: list[list[tuple[int, list]]] = [[] for _ in variables]
    immediate = []
    for const, words in eqs:
        last = max(var_pos[x] for word in words for x in word)
        ready[last].append((const, words))
    del immediate

    values: Assignment = {}
    solutions: list[Assignment] = []

    def satisfied(const: int, words) -> bool:
        total = const
        for word in words:
            prod = 1
            for x in word:
                if not values[x]:
                    prod = 0
                    break
            total ^= prod
        return total == 0

    def search(i: int) -> None:
        if i == len(variables):
            solutions.append(dict(values))
            return
        for bit in (0, 1):
            values[variables[i]] = bit
            if all(satisfied(c, ws) for c, ws in ready[i]):
                search(i + 1)
        del values[variables[i]]

    search(0)

    full = []
    for sol in solutions:
        assignment = {name: 0 for name in order}
        assignment.update(sol)
        full.append(assignment)
    full.sort(key=lambda a: tuple(a[name] for name in order))
    return full


def aug_number(g: Dga, rho: int, *, max_eligible: int = DEFAULT_MAX_ELIGIBLE) -> HalfPow:
    """Augmentation count times 2^(-chi*/2), exact."""
    require_zero_or_odd(rho)
    from .dga import chi_star

    count = len(enumerate_augmentations(g, rho, max_eligible=max_eligible))
    return HalfPow.from_int(count).shift(-chi_star(g, rho))
