from .base import FinderBase
from .permutation import PermutationFinder
from .point import PointFinder
from .random import RandomFinder
from .triangular import TriangularFinder
