import collections.abc
import copy
import logging
import os

import yaml

log = logging.getLogger(__name__)

DEFAULT_SESSION = "session.yml"
DEFAULT_PROFILE = "default"

default_var = {
    "search": {
        "budget": 200,
        "seed": 0,
        "entry_bound": 2,
        "perturbations": 4,
        "points": [],
    },
    "theorem1": {"shift": 1, "cap": 1000000},
    "output": {"json": False, "timing": True},
    "jobs": 1,
}


def update_nested(d, u):
    """
    Recursively update a nested dictionary `d` with values from dictionary `u`.
    This is useful for merging configurations.
    """
    if d is None:
        return u
    for k, v in u.items():
        if isinstance(v, collections.abc.Mapping):
            d[k] = update_nested(d.get(k, {}), v)
        else:
            d[k] = v
    return d


def session_path(session_file=None):
    """
    The session file to read: `session_file` itself when it exists, otherwise
    the file of the same name under ~/.config/hesselink/. None when neither exists.
    """
    session_file = session_file or DEFAULT_SESSION
    session_home = os.path.expanduser(f"~/.config/hesselink/{session_file}")
    for path in (session_file, session_home):
        if os.path.exists(path):
            return path
    return None


def load_session(session_file=None):
    """
    Load the profiles of a session file.

    Returns:
        dict: profile name -> partial settings; empty when there is no file.
    """
    path = session_path(session_file)
    if path is None:
        return {}
    with open(path) as f:
        session = yaml.load(f, Loader=yaml.FullLoader) or {}
    if not isinstance(session, collections.abc.Mapping):
        raise ValueError(f"Session file {path} must map profile names to settings")
    log.debug("Loaded session %s with profiles %s", path, list(session))
    return dict(session)


def resolve_settings(session, target=None, overrides=None):
    """
    Settings for one run: default_var, then the selected profile, then the
    command-line overrides (entries that are None are ignored).

    Raises:
        KeyError: `target` is not a profile of the session.
    """
    settings = copy.deepcopy(default_var)
    if target is not None:
        if target not in session:
            raise KeyError(f"Unknown profile '{target}'; available: {sorted(session)}")
        settings = update_nested(settings, copy.deepcopy(session[target]) or {})
    elif DEFAULT_PROFILE in session:
        settings = update_nested(settings, copy.deepcopy(session[DEFAULT_PROFILE]) or {})
    if overrides:
        settings = update_nested(settings, _drop_none(overrides))
    return settings


def _drop_none(d):
    out = {}
    for k, v in d.items():
        if isinstance(v, collections.abc.Mapping):
            v = _drop_none(v)
            if v:
                out[k] = v
        elif v is not None:
            out[k] = v
    return out
