import logging

from ..action.subgroup import canonical_class_rep
from .candidates import CandidateFinder
from .config import SearchConfig
from .labels import SemistableVerdict, StratumLabel
from .moves import torus_analysis

log = logging.getLogger(__name__)


def evaluate_candidate(f, g, source=""):
    """The label certified by g, or None when act(g, f) is torus-semistable."""
    analysis = torus_analysis(f, g)
    if not analysis.is_unstable:
        return None
    return StratumLabel(
        lambda_class=tuple(canonical_class_rep(analysis.lam)),
        delta_squared=analysis.delta_squared,
        mu=analysis.mu,
        witness_g=g,
        witness_lambda=tuple(analysis.lam),
        source=source,
    )


def _better(label, best):
    return label is not None and (best is None or label.sort_key() < best.sort_key())


def classify(f, cfg=None):
    """
    Search coordinates g maximizing the torus instability of act(g, f).

    Candidates come from CandidateFinder. Whenever the incumbent strictly
    improves, `cfg.perturbations` lower-triangular perturbations of it are
    tried as well. The result only depends on (f, cfg), and a larger budget
    with the same seed never returns a smaller delta^2.

    Returns:
        StratumLabel: the best certified label, a lower bound on instability.
        SemistableVerdict: no candidate gave a positive delta^2.
    """
    cfg = cfg or SearchConfig()
    finder = CandidateFinder(f, cfg)
    best = None
    evaluated = 0
    for index, (source, g) in enumerate(finder.get_candidates()):
        label = evaluate_candidate(f, g, source)
        evaluated += 1
        if not _better(label, best):
            continue
        best = label
        log.debug("New incumbent from %s: class %s, delta^2 %s", source, label.lambda_class, label.delta_squared)
        for p_source, p_g in finder.perturb(g, label.witness_lambda, index):
            p_label = evaluate_candidate(f, p_g, p_source)
            evaluated += 1
            if _better(p_label, best):
                best = p_label
    log.info("Evaluated %d candidates for %r", evaluated, f)
    if best is None:
        return SemistableVerdict(candidates_evaluated=evaluated)
    return best
