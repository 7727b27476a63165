from dataclasses import dataclass, field


@dataclass(frozen=True)
class SearchConfig:
    """
    Settings of the coordinate search.

    Attributes:
        budget (int): number of random group elements tried.
        seed (int): seed of every random stream of the search.
        entry_bound (int): random entries are integers in [-entry_bound, entry_bound].
        candidate_points (tuple): extra points moved to e=[1:0:...:0].
        perturbations (int): lower-triangular perturbations tried each time
            the incumbent improves.
    """

    budget: int = 200
    seed: int = 0
    entry_bound: int = 2
    candidate_points: tuple = field(default_factory=tuple)
    perturbations: int = 4

    def __post_init__(self):
        if self.budget < 0:
            raise ValueError(f"The search budget must be nonnegative, got {self.budget}")
        if self.entry_bound < 1:
            raise ValueError(f"entry_bound must be at least 1, got {self.entry_bound}")
        if self.perturbations < 0:
            raise ValueError(f"perturbations must be nonnegative, got {self.perturbations}")

    @classmethod
    def from_settings(cls, settings, points=()):
        """Build a config from the 'search' section of a session profile."""
        return cls(
            budget=int(settings["budget"]),
            seed=int(settings["seed"]),
            entry_bound=int(settings["entry_bound"]),
            candidate_points=tuple(points),
            perturbations=int(settings["perturbations"]),
        )
