"""Readers and writers for citation datasets and report tables.

Formats (UTF-8, comma separated, no quoting; ids match ``[A-Za-z0-9_-]+``):

* long CSV: header ``author,citations``, one row per paper
* signature CSV: header ``author,M,N,h``, one row per author
* JSON: ``{"authors": [{"id": ..., "citations": [...]}, {"id": ..., "M": .., "N": .., "h": ..}]}``
* report CSV: ``author,index,empirical,approximate,excluded_reason``
"""
from __future__ import annotations

import json
import math
import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .empirical import CitationProfile
from .errors import EmptyInput, InvariantViolation, ParseError
from .model import CurveSignature

__all__ = [
    "Dataset",
    "ReportRow",
    "REPORT_COLUMNS",
    "parse_long_csv",
    "parse_signature_csv",
    "parse_json",
    "dump_json",
    "parse_dataset",
    "emit_report_csv",
    "parse_report_csv",
]

_ID = re.compile(r"^[A-Za-z0-9_-]+$")
REPORT_COLUMNS = ("author", "index", "empirical", "approximate", "excluded_reason")
CSV_DECIMALS = 4


@dataclass
class Dataset:
    profiles: Dict[str, CitationProfile] = field(default_factory=dict)
    signatures: Dict[str, CurveSignature] = field(default_factory=dict)

    def author_ids(self) -> List[str]:
        return sorted(set(self.profiles) | set(self.signatures))

    def signature(self, author_id: str) -> CurveSignature:
        """Stored signature, or the one read off the author's profile."""
        from .empirical import signature_of

        if author_id in self.signatures:
            return self.signatures[author_id]
        return signature_of(self.profiles[author_id])

    def __len__(self):
        return len(self.author_ids())


@dataclass(frozen=True)
class ReportRow:
    author: str
    index: str
    empirical: Optional[float]
    approximate: Optional[float]
    excluded_reason: str = ""


def _lines(text):
    if text.startswith("\ufeff"):
        text = text[1:]
    return text.splitlines()


def _check_id(aid, where):
    if not _ID.match(aid):
        raise ParseError(f"author id {aid!r} must match [A-Za-z0-9_-]+", where)
    return aid


def _data_rows(text, header):
    lines = _lines(text)
    if not lines or not lines[0].strip():
        raise EmptyInput("input is empty")
    if lines[0].strip() != header:
        raise ParseError(f"expected header {header!r}, got {lines[0].strip()!r}", "line 1")
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        rows.append((lineno, [cell.strip() for cell in line.split(",")]))
    if not rows:
        raise EmptyInput("no data rows after the header")
    return rows


def _int_cell(cell, lineno, what, minimum):
    try:
        value = int(cell)
    except ValueError:
        raise ParseError(f"{what} {cell!r} is not an integer", f"line {lineno}") from None
    if value < minimum:
        raise ParseError(f"{what} must be >= {minimum}, got {value}", f"line {lineno}")
    return value


def parse_long_csv(text: str) -> Dataset:
    """One row per paper; uncited papers are dropped, so an author whose
    papers all have zero citations gets no profile."""
    grouped = defaultdict(list)
    for lineno, cells in _data_rows(text, "author,citations"):
        if len(cells) != 2:
            raise ParseError(f"expected 2 fields, got {len(cells)}", f"line {lineno}")
        aid = _check_id(cells[0], f"line {lineno}")
        grouped[aid].append(_int_cell(cells[1], lineno, "citations", 0))
    ds = Dataset()
    for aid in sorted(grouped):
        profile = CitationProfile.from_counts(grouped[aid], aid)
        if profile.counts:
            ds.profiles[aid] = profile
    return ds


def parse_signature_csv(text: str) -> Dataset:
    ds = Dataset()
    for lineno, cells in _data_rows(text, "author,M,N,h"):
        if len(cells) != 4:
            raise ParseError(f"expected 4 fields, got {len(cells)}", f"line {lineno}")
        aid = _check_id(cells[0], f"line {lineno}")
        if aid in ds.signatures:
            raise ParseError(f"duplicate author {aid!r}", f"line {lineno}")
        M, N, h = (_int_cell(c, lineno, n, 1) for c, n in zip(cells[1:], "MNh"))
        if h > M or h > N:
            raise InvariantViolation(f"line {lineno} ({aid}): h={h} exceeds M={M} or N={N}")
        ds.signatures[aid] = CurveSignature(M, N, h)
    return ds


def _json_number(value, path, minimum=0, integer=False):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"expected a number, got {value!r}", path)
    if integer and not (isinstance(value, int) or float(value).is_integer()):
        raise ParseError(f"expected an integer, got {value!r}", path)
    if not math.isfinite(value) or value < minimum:
        raise ParseError(f"value {value!r} out of range", path)
    return int(value) if integer else value


def parse_json(text: str) -> Dataset:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"line {exc.lineno}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("authors"), list):
        raise ParseError("expected an object with an 'authors' array", "$")
    if not doc["authors"]:
        raise EmptyInput("'authors' array is empty")
    ds = Dataset()
    for i, entry in enumerate(doc["authors"]):
        path = f"$.authors[{i}]"
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), str):
            raise ParseError("each author needs a string 'id'", path)
        aid = _check_id(entry["id"], f"{path}.id")
        if aid in ds.profiles or aid in ds.signatures:
            raise ParseError(f"duplicate author {aid!r}", f"{path}.id")
        has_cites = "citations" in entry
        has_sig = any(k in entry for k in ("M", "N", "h"))
        if has_cites == has_sig:
            raise ParseError("give either 'citations' or all of 'M', 'N', 'h'", path)
        if has_cites:
            cites = entry["citations"]
            if not isinstance(cites, list):
                raise ParseError("'citations' must be an array", f"{path}.citations")
            counts = [
                _json_number(c, f"{path}.citations[{j}]", integer=True)
                for j, c in enumerate(cites)
            ]
            profile = CitationProfile.from_counts(counts, aid)
            if profile.counts:
                ds.profiles[aid] = profile
        else:
            vals = []
            for k in ("M", "N", "h"):
                if k not in entry:
                    raise ParseError(f"missing {k!r}", path)
                vals.append(_json_number(entry[k], f"{path}.{k}", minimum=1))
            M, N, h = vals
            if h > M or h > N:
                raise InvariantViolation(f"{path} ({aid}): h={h} exceeds M={M} or N={N}")
            ds.signatures[aid] = CurveSignature(M, N, h)
    return ds


def dump_json(ds: Dataset) -> str:
    authors = []
    for aid in ds.author_ids():
        if aid in ds.profiles:
            authors.append({"id": aid, "citations": list(ds.profiles[aid].counts)})
        else:
            s = ds.signatures[aid]
            authors.append({"id": aid, "M": s.M, "N": s.N, "h": s.h})
    return json.dumps({"authors": authors}, indent=2) + "\n"


def parse_dataset(text: str, fmt: Optional[str] = None) -> Dataset:
    """Dispatch on ``fmt`` (long-csv, signature-csv, json) or sniff the header."""
    if fmt is None:
        head = text.lstrip("\ufeff").lstrip()
        if head.startswith("{"):
            fmt = "json"
        elif head.startswith("author,M,N,h"):
            fmt = "signature-csv"
        else:
            fmt = "long-csv"
    if fmt == "json":
        return parse_json(text)
    if fmt == "long-csv":
        return parse_long_csv(text)
    if fmt == "signature-csv":
        return parse_signature_csv(text)
    raise ValueError(f"unknown format {fmt!r}")


def _cell(v):
    return "" if v is None else f"{v:.{CSV_DECIMALS}f}"


def emit_report_csv(rows) -> str:
    """Report table sorted by author, then index id, numbers to 4 decimals."""
    out = [",".join(REPORT_COLUMNS)]
    for r in sorted(rows, key=lambda r: (r.author, r.index)):
        out.append(",".join([r.author, r.index, _cell(r.empirical),
                             _cell(r.approximate), r.excluded_reason]))
    return "\n".join(out) + "\n"


def parse_report_csv(text: str) -> List[ReportRow]:
    rows = []
    for lineno, cells in _data_rows(text, ",".join(REPORT_COLUMNS)):
        if len(cells) != 5:
            raise ParseError(f"expected 5 fields, got {len(cells)}", f"line {lineno}")
        nums = []
        for cell in cells[2:4]:
            try:
                nums.append(None if cell == "" else float(cell))
            except ValueError:
                raise ParseError(f"bad number {cell!r}", f"line {lineno}") from None
        rows.append(ReportRow(cells[0], cells[1], nums[0], nums[1], cells[4]))
    return rows
