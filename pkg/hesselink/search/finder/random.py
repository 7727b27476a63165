import random

from ...action.group import GroupElement
from .base import FinderBase


class RandomFinder(FinderBase):
    """Yields `budget` random invertible integer matrices from a seeded stream."""

    name = "random"

    def __init__(self, f, budget, seed, entry_bound):
        super().__init__(f)
        self.budget = budget
        self.seed = seed
        self.entry_bound = entry_bound

    def get_candidates(self):
        rng = random.Random(self.seed)
        for _ in range(self.budget):
            yield self.name, GroupElement.random(rng, self.n, self.entry_bound)
