from math import comb

from ..errors import BelowGotzmannError


class HilbertData:
    """
    Hilbert polynomial P(t) = C(r+t, r) - C(r+t-d, r) of a degree-d hypersurface
    in P^r, together with Q(t) = C(r+t, r) - P(t), the rank of the degree-t
    piece of the ideal. The Gotzmann number of P is d.
    """

    def __init__(self, r, d):
        if r < 1 or d < 1:
            raise ValueError(f"Need r >= 1 and d >= 1, got r={r}, d={d}")
        self.r = r
        self.d = d

    @property
    def gotzmann(self):
        return self.d

    def P(self, t):
        return comb(self.r + t, self.r) - self._ideal_rank(t)

    def Q(self, t):
        return self._ideal_rank(t)

    def _ideal_rank(self, t):
        if t < self.d:
            return 0
        return comb(self.r + t - self.d, self.r)

    def __repr__(self):
        return f"HilbertData(r={self.r}, d={self.d})"


def hilbert_values(r, d, t):
    """Return (P(t), Q(t)) for t at or above the Gotzmann number d."""
    if t < d:
        raise BelowGotzmannError(t, d)
    data = HilbertData(r, d)
    return data.P(t), data.Q(t)
