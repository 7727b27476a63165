from itertools import chain

from .finder import PermutationFinder, PointFinder, RandomFinder, TriangularFinder


class CandidateFinder:
    """
    Collects the group elements the search tries for one polynomial, phase by
    phase: permutations, point moves, then random matrices. Duplicates (by
    serialization) are yielded only once.
    """

    def __init__(self, f, cfg):
        self.f = f
        self.cfg = cfg
        self.finders = [
            PermutationFinder(f),
            PointFinder(f, cfg.candidate_points),
            RandomFinder(f, cfg.budget, cfg.seed, cfg.entry_bound),
        ]
        self.triangular = TriangularFinder(f, cfg.seed, cfg.perturbations, cfg.entry_bound)
        self._seen = set()

    def _unseen(self, candidates):
        for source, g in candidates:
            key = g.serialize()
            if key in self._seen:
                continue
            self._seen.add(key)
            yield source, g

    def get_candidates(self):
        """
        Yields:
            tuple: (source, g) with source the name of the finder.
        """
        return self._unseen(chain.from_iterable(s.get_candidates() for s in self.finders))

    def perturb(self, g, lam, index):
        """Lower-triangular perturbations of the incumbent g found at position `index`."""
        return self._unseen(self.triangular.get_candidates(g, lam, index))
