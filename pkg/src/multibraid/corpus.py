"""Bundled desk-scale braid words used by the command line and the test
suite: knots and links covering the component-count cases."""

from __future__ import annotations

from pathlib import Path

from .braid import BraidWord, format_braid

CORPUS: dict[str, BraidWord] = {
    "unknot": BraidWord(1),
    "trefoil": BraidWord(2, (1, 1, 1)),
    "figure_eight": BraidWord(3, (1, -2, 1, -2)),
    "hopf": BraidWord(2, (1, 1)),
    "solomon": BraidWord(2, (1, 1, 1, 1)),
    "unlink2": BraidWord(2),
    "unlink3": BraidWord(3),
}

MULTI_COMPONENT_NAMES = ("hopf", "solomon", "unlink2", "unlink3")


def write_corpus(directory: str | Path) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, word in CORPUS.items():
        path = directory / f"{name}.braid"
        path.write_text(format_braid(word), encoding="utf-8")
        written.append(path)
    return written
