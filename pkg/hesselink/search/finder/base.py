from itertools import permutations

from ...action.group import GroupElement


class FinderBase:
    """
    Base class of the candidate finders. A finder yields (source, g) pairs of
    group elements to try for one polynomial f.
    """

    name = "base"

    def __init__(self, f):
        self.f = f
        self.n = f.r + 1

    def all_permutations(self):
        """Every permutation matrix of size n, identity first."""
        return [GroupElement.permutation(p) for p in permutations(range(self.n))]

    def get_candidates(self):
        raise NotImplementedError
