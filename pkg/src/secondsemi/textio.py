"""Line-oriented structure files and verdict reports.

Grammar (``#`` starts a comment; blank lines are ignored)::

    semiring <name>
    elements <k>
    zero <i>
    one <j>
    add            # followed by k rows of k indices
    mul            # likewise
    end

    semimodule <name> over <semiring>
    elements <m>
    zero <i>
    add            # m rows of m indices
    act            # k rows of m indices; row r, column x holds r*x
    end
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .errors import AxiomViolation, ShapeError, StructureSyntaxError
from .harness import Verdict, summarize
from .semiring import Semiring, validate_semiring
from .semimodule import Semimodule, validate_semimodule

Structure = Semiring | Semimodule

_HEADER = {"semiring": ("elements", "zero", "one"), "semimodule": ("elements", "zero")}
_TABLES = {"semiring": ("add", "mul"), "semimodule": ("add", "act")}


def _tokenize(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if toks:
            out.append((no, toks))
    return out


def _int(tok: str, no: int) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise StructureSyntaxError(no, f"expected an integer, got {tok!r}") from None
    if v < 0:
        raise StructureSyntaxError(no, f"negative index {v}")
    return v


def parse(text: str) -> list[Structure]:
    """Parse and validate every block; errors carry 1-based line numbers."""
    lines = _tokenize(text)
    out: list[Structure] = []
    rings: dict[str, Semiring] = {}
    names: set[str] = set()
    i = 0
    while i < len(lines):
        no, toks = lines[i]
        kind = toks[0]
        if kind == "semiring":
            if len(toks) != 2:
                raise StructureSyntaxError(no, "usage: semiring <name>")
            name, base = toks[1], None
        elif kind == "semimodule":
            if len(toks) != 4 or toks[2] != "over":
                raise StructureSyntaxError(no, "usage: semimodule <name> over <semiring>")
            name = toks[1]
            base = rings.get(toks[3])
            if base is None:
                raise StructureSyntaxError(no, f"semiring {toks[3]!r} is not declared above")
        else:
            raise StructureSyntaxError(no, f"expected 'semiring' or 'semimodule', got {kind!r}")
        if name in names:
            raise StructureSyntaxError(no, f"duplicate structure name {name!r}")
        fields, tables, i = _read_block(lines, i + 1, kind, no, base)
        try:
            if kind == "semiring":
                s = validate_semiring(fields["elements"], fields["zero"], fields["one"], tables["add"], tables["mul"], name)
                rings[name] = s
            else:
                s = validate_semimodule(base, fields["elements"], fields["zero"], tables["add"], tables["act"], name)
        except AxiomViolation as exc:
            raise AxiomViolation(exc.axiom, exc.witness, name, no) from None
        except ShapeError as exc:
            raise StructureSyntaxError(no, f"{name}: {exc}") from None
        names.add(name)
        out.append(s)
    return out


def _read_block(lines, i: int, kind: str, start: int, base: Semiring | None):
    fields: dict[str, int] = {}
    tables: dict[str, list[list[int]]] = {}
    while True:
        if i >= len(lines):
            raise StructureSyntaxError(start, f"{kind} block is missing 'end'")
        no, toks = lines[i]
        key = toks[0]
        if key == "end":
            if len(toks) != 1:
                raise StructureSyntaxError(no, "'end' takes no arguments")
            break
        if key in _HEADER[kind]:
            if len(toks) != 2:
                raise StructureSyntaxError(no, f"usage: {key} <integer>")
            if key in fields:
                raise StructureSyntaxError(no, f"{key!r} given twice")
            fields[key] = _int(toks[1], no)
            if key == "elements" and fields[key] == 0:
                raise StructureSyntaxError(no, "a structure needs at least one element")
            i += 1
        elif key in _TABLES[kind]:
            if len(toks) != 1:
                raise StructureSyntaxError(no, f"{key!r} takes no arguments; rows follow on their own lines")
            if key in tables:
                raise StructureSyntaxError(no, f"{key!r} given twice")
            if "elements" not in fields:
                raise StructureSyntaxError(no, f"'elements' must precede the {key!r} table")
            n = fields["elements"]
            rows = base.size if key == "act" else n
            table = []
            for _ in range(rows):
                i += 1
                if i >= len(lines):
                    raise StructureSyntaxError(no, f"{key!r} table ends early")
                rno, rtoks = lines[i]
                if len(rtoks) != n:
                    raise StructureSyntaxError(rno, f"{key!r} row needs {n} entries, got {len(rtoks)}")
                row = [_int(t, rno) for t in rtoks]
                if max(row) >= n:
                    raise StructureSyntaxError(rno, f"entry {max(row)} out of range 0..{n - 1}")
                table.append(row)
            tables[key] = table
            i += 1
        else:
            raise StructureSyntaxError(no, f"unexpected {key!r} in {kind} block")
    for key in _HEADER[kind]:
        if key not in fields:
            raise StructureSyntaxError(start, f"{kind} block lacks {key!r}")
    for key in _TABLES[kind]:
        if key not in tables:
            raise StructureSyntaxError(start, f"{kind} block lacks the {key!r} table")
    for key in ("zero", "one"):
        if key in fields and fields[key] >= fields["elements"]:
            raise StructureSyntaxError(start, f"{key} index {fields[key]} out of range")
    return fields, tables, i + 1


def _rows(table) -> list[str]:
    return [" ".join(str(v) for v in row) for row in table.tolist()]


def serialize(structures: Iterable[Structure]) -> str:
    """Canonical text form; base semirings are emitted before first use."""
    parts: list[str] = []
    emitted: set[int] = set()

    def ring(R: Semiring) -> None:
        if id(R) in emitted:
            return
        emitted.add(id(R))
        parts.append(
            "\n".join(
                [f"semiring {R.name}", f"elements {R.size}", f"zero {R.zero}", f"one {R.one}", "add"]
                + _rows(R.add) + ["mul"] + _rows(R.mul) + ["end"]
            )
        )

    for s in structures:
        if isinstance(s, Semiring):
            ring(s)
        else:
            ring(s.base)
            parts.append(
                "\n".join(
                    [f"semimodule {s.name} over {s.base.name}", f"elements {s.size}", f"zero {s.zero}", "add"]
                    + _rows(s.add) + ["act"] + _rows(s.act) + ["end"]
                )
            )
    return "\n\n".join(parts) + "\n"


# -- reports ---------------------------------------------------------------


def report_json(verdicts: Sequence[Verdict], timings: bool = False) -> str:
    return json.dumps([v.to_dict(timings) for v in verdicts], indent=2) + "\n"


def report_text(verdicts: Sequence[Verdict], timings: bool = False) -> str:
    lines = []
    for v in verdicts:
        d = v.to_dict(timings)
        head = d["theorem"] + (f"[{d['variant']}]" if "variant" in d else "")
        line = f"{head:<40} {d['structure']:<32} {d['status']}"
        if "witness" in d:
            line += f"  witness={json.dumps(d['witness'], sort_keys=True)}"
        if "detail" in d:
            line += f"  detail={json.dumps(d['detail'], sort_keys=True)}"
        if timings:
            line += f"  elapsed_ms={d['elapsed_ms']}"
        lines.append(line)
    lines.append("")
    lines.append("summary:")
    for key, row in summarize(verdicts).items():
        counts = ", ".join(f"{k}={n}" for k, n in sorted(row.items()))
        lines.append(f"  {key:<40} {counts}")
    return "\n".join(lines) + "\n"
