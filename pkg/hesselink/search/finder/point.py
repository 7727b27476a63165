from ...action.group import ProjectivePoint
from ..moves import move_point_to_e
from .base import FinderBase


class PointFinder(FinderBase):
    """
    Moves candidate points to e = [1:0:...:0] and composes the move with every
    permutation. Candidate points are the user points plus the coordinate
    points lying on V(f).
    """

    name = "point"

    def __init__(self, f, points=()):
        super().__init__(f)
        self.points = [p if isinstance(p, ProjectivePoint) else ProjectivePoint(p) for p in points]

    def get_points(self):
        axis = [ProjectivePoint.coordinate(i, self.n) for i in range(self.n)]
        found = []
        for p in list(self.points) + [p for p in axis if self.f.evaluate(p) == 0]:
            if len(p) != self.n:
                raise ValueError(f"Candidate point {p!r} does not have {self.n} coordinates")
            if p not in found:
                found.append(p)
        return found

    def get_candidates(self):
        perms = self.all_permutations()
        for p in self.get_points():
            g = move_point_to_e(p)
            for w in perms:
                yield self.name, w @ g
