from .base import FinderBase


class PermutationFinder(FinderBase):
    """Yields the (r+1)! coordinate permutations."""

    name = "permutation"

    def get_candidates(self):
        for g in self.all_permutations():
            yield self.name, g
