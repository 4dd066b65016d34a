"""Collects per-criterion outcomes so the run ends with one line per criterion."""

from collections import OrderedDict

_parts: "OrderedDict[int, list[tuple[str, bool, str]]]" = OrderedDict()


def record(criterion: int, label: str, ok: bool, detail: str = "") -> None:
    _parts.setdefault(criterion, []).append((label, ok, detail))


def lines() -> list[str]:
    out = []
    for criterion in sorted(_parts):
        parts = _parts[criterion]
        ok = all(p[1] for p in parts)
        bad = [f"{label}: {detail}" if detail else label for label, good, detail in parts if not good]
        tail = "" if ok else "  [" + "; ".join(bad) + "]"
        out.append(f"criterion {criterion:>2}: {'PASS' if ok else 'FAIL'}{tail}")
    return out
