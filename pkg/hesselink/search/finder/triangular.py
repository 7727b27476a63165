import random

from ...action.group import GroupElement
from ...action.subgroup import sorting_permutation
from .base import FinderBase

# large prime separating the per-candidate streams derived from one seed
_STREAM_STRIDE = 1000003


class TriangularFinder(FinderBase):
    """
    Perturbs an incumbent g by unit lower-triangular matrices after conjugating
    it so that its lambda is weakly increasing; such perturbations keep an
    optimal incumbent optimal.
    """

    name = "triangular"

    def __init__(self, f, seed, count, entry_bound):
        super().__init__(f)
        self.seed = seed
        self.count = count
        self.entry_bound = entry_bound

    def get_candidates(self, g=None, lam=None, index=0):
        if g is None or lam is None:
            return
        sorted_g = GroupElement.permutation(sorting_permutation(lam)) @ g
        rng = random.Random(self.seed * _STREAM_STRIDE + index)
        for _ in range(self.count):
            lower = GroupElement.random_unit_lower_triangular(rng, self.n, self.entry_bound)
            yield self.name, lower @ sorted_g
