"""Reading and writing solution lists.

``lines``: ``text<TAB>syl-syl-...<TAB>iteration`` per nonword.
``json``: one ``{"nonword", "syllables", "iteration"}`` object per line.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, List, TextIO, Union

from .lexicon import SYLLABLE_SEP
from .search import SolutionEntry

FORMATS = ("lines", "json")


def format_solutions(entries: Iterable[SolutionEntry], fmt: str = "lines") -> str:
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")
    out = []
    for e in entries:
        if fmt == "lines":
            out.append(f"{e.text}\t{SYLLABLE_SEP.join(e.syllables)}\t{e.iteration}\n")
        else:
            obj = {"nonword": e.text, "syllables": list(e.syllables), "iteration": e.iteration}
            out.append(json.dumps(obj, ensure_ascii=False) + "\n")
    return "".join(out)


def write_solutions(entries: Iterable[SolutionEntry], path: Union[str, Path], fmt: str = "lines") -> None:
    Path(path).write_text(format_solutions(entries, fmt), encoding="utf-8")


def parse_solutions(fh: Union[TextIO, Iterable[str]], fmt: str = "lines") -> List[SolutionEntry]:
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")
    entries = []
    for lineno, line in enumerate(fh, start=1):
        line = line.rstrip("\n")
        if not line:
            continue
        if fmt == "lines":
            fields = line.split("\t")
            if len(fields) != 3:
                raise ValueError(f"line {lineno}: expected 3 fields, got {len(fields)}")
            text, syl, it = fields
            entries.append(SolutionEntry(text, tuple(syl.split(SYLLABLE_SEP)), int(it)))
        else:
            obj = json.loads(line)
            entries.append(
                SolutionEntry(obj["nonword"], tuple(obj["syllables"]), int(obj["iteration"]))
            )
    return entries


def read_solutions(path: Union[str, Path], fmt: str = "lines") -> List[SolutionEntry]:
    with open(path, encoding="utf-8") as fh:
        return parse_solutions(fh, fmt)
