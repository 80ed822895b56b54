from __future__ import print_function, division

from ..transformation import compose, image, is_idempotent, power

__all__ = ['membership_condition', 'containing_group_oracle', 'cyclic_powers']


def membership_condition(f):
    """
    Whether some group of transformations contains ``f``, decided by the
    image test Im(f) = Im(f^2).
    """
    return image(f) == image(power(f, 2))


def cyclic_powers(f):
    """
    The powers f, f^2, f^3, ... up to the first repetition.

    Returns
    -------
    powers : list of :class:`~nggroups.transformation.Transformation`
        The distinct powers, ``powers[k - 1]`` being f^k.
    index : int
        The smallest exponent m such that f^m lies on the cycle.
    period : int
        The length of the cycle.
    """
    powers = [f]
    seen = {f: 1}
    while True:
        g = compose(f, powers[-1])
        if g in seen:
            index = seen[g]
            return powers, index, len(powers) + 1 - index
        seen[g] = len(powers) + 1
        powers.append(g)


def containing_group_oracle(f):
    """
    Search for a group containing ``f`` inside the cyclic semigroup it
    generates.

    The unique idempotent power e of ``f`` is located; if e is a two-sided
    identity for ``f``, the cycle of powers is a group containing ``f`` and
    is returned. This search is independent of
    :func:`membership_condition` and is used to cross-check it.

    Returns
    -------
    group : frozenset or None
    """
    powers, index, period = cyclic_powers(f)
    cycle = powers[index - 1:]
    idempotents = [g for g in cycle if is_idempotent(g)]
    e = idempotents[0]
    if compose(e, f) == f and compose(f, e) == f:
        return frozenset(cycle)
    return None
