"""Rule-based compiler from dependency-parsed dictionary glosses to a
semantic network, with taxonomy, inversion, inheritance and role-inference
derivation passes."""

from pathlib import Path

from ._glossnet import (  # noqa: F401
    InputError,
    LookupError,
    Pipeline,
    run_to_files,
    verify_goldens,
)

__all__ = [
    "InputError",
    "LookupError",
    "Pipeline",
    "run_to_files",
    "verify_goldens",
    "fixture_paths",
]


def fixture_paths(base=None):
    """Paths of the bundled fixture corpus as a dict with keys
    ``lexicon``, ``parses``, ``rules`` and ``goldens``.

    ``base`` overrides the data directory (defaults to the copy installed
    next to the package, falling back to a source checkout layout)."""
    if base is None:
        here = Path(__file__).resolve().parent
        candidates = [here / "data", here.parent.parent / "data"]
        for candidate in candidates:
            if (candidate / "fixtures" / "lexicon.tsv").exists():
                base = candidate
                break
        else:
            raise FileNotFoundError("no bundled data directory found")
    base = Path(base)
    return {
        "lexicon": str(base / "fixtures" / "lexicon.tsv"),
        "parses": str(base / "fixtures" / "parses.tsv"),
        "rules": str(base / "rules" / "core.rules"),
        "goldens": str(base / "fixtures" / "goldens.txt"),
    }
