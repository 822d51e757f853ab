"""Fixture store: the 20 singularity classes with their polynomials,
invariants, ambient data and curve-attachment tables.

The data ships as a single JSON document (``data/fixtures.json``); the verify
suite recomputes every derivable column and treats any disagreement with the
stored values as a failure, so transcription errors surface immediately.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, asdict
from importlib import resources

CASE_TAGS = (
    "Quadrilateral_r1",
    "Quadrilateral_other",
    "Exceptional_a2",
    "Exceptional_a3",
    "Exceptional_a5",
)

VARIABLES = ("x", "y", "z")


class UnknownFixture(KeyError):
    pass


@dataclass(frozen=True)
class AttachmentTable:
    """Where the curve E0 meets the arms (positions count from the outer end)
    and, for exceptional cases, which F-chain component it meets."""

    arms: dict[int, int]
    f_chain: int | None
    provenance: str


@dataclass(frozen=True)
class FixtureRow:
    name: str
    dual_name: str
    f_T: str
    f: str
    gabrielov: tuple[int, int, int]
    dolgachev: tuple[int, int, int]
    alpha_beta: tuple[tuple[int, int], ...]
    a: int
    c_f: int
    ambient: tuple[int, int, int, int]
    compactifier: str
    action_c: int
    action_m: tuple[int, int, int, int] | None
    case_tag: str
    attachment_table: AttachmentTable
    mu: int
    metadata: dict

    @property
    def alpha(self) -> tuple[int, int, int]:
        return self.dolgachev

    @property
    def compactifier_shape(self) -> str:
        """One of 'w', 'x', 'y', 'z': which coordinate accompanies the power of w."""
        head = self.compactifier.split("*")[0]
        return head if head in ("x", "y", "z") else "w"

    def to_json_dict(self) -> dict:
        d = asdict(self)
        d["alpha_beta"] = [list(p) for p in self.alpha_beta]
        d["gabrielov"] = list(self.gabrielov)
        d["dolgachev"] = list(self.dolgachev)
        d["ambient"] = list(self.ambient)
        d["action"] = {
            "c": self.action_c,
            "m": list(self.action_m) if self.action_m is not None else None,
        }
        del d["action_c"], d["action_m"]
        d["attachment_table"] = {
            "arms": {str(k): v for k, v in sorted(self.attachment_table.arms.items())},
            "f_chain": self.attachment_table.f_chain,
            "provenance": self.attachment_table.provenance,
        }
        return d


def _row_from_dict(d: dict) -> FixtureRow:
    if d["case_tag"] not in CASE_TAGS:
        raise ValueError(f"unknown case tag {d['case_tag']!r}")
    action = d["action"]
    table = d["attachment_table"]
    return FixtureRow(
        name=d["name"],
        dual_name=d["dual_name"],
        f_T=d["f_T"],
        f=d["f"],
        gabrielov=tuple(d["gabrielov"]),
        dolgachev=tuple(d["dolgachev"]),
        alpha_beta=tuple(tuple(p) for p in d["alpha_beta"]),
        a=d["a"],
        c_f=d["c_f"],
        ambient=tuple(d["ambient"]),
        compactifier=d["compactifier"],
        action_c=action["c"],
        action_m=tuple(action["m"]) if action["m"] is not None else None,
        case_tag=d["case_tag"],
        attachment_table=AttachmentTable(
            arms={int(k): v for k, v in table["arms"].items()},
            f_chain=table["f_chain"],
            provenance=table["provenance"],
        ),
        mu=d["mu"],
        metadata=dict(d["metadata"]),
    )


def _read_document() -> dict:
    text = resources.files("bhdual").joinpath("data/fixtures.json").read_text("utf-8")
    return json.loads(text)


_ROWS: tuple[FixtureRow, ...] | None = None


def load_rows() -> tuple[FixtureRow, ...]:
    global _ROWS
    if _ROWS is None:
        doc = _read_document()
        _ROWS = tuple(_row_from_dict(d) for d in doc["rows"])
    return _ROWS


def normalize_name(name: str) -> str:
    """Accept both 'J_3,0' and 'J_{3,0}' spellings."""
    return name.replace("{", "").replace("}", "").strip()


def row_by_name(name: str) -> FixtureRow:
    wanted = normalize_name(name)
    for row in load_rows():
        if row.name == wanted:
            return row
    raise UnknownFixture(wanted)


def all_names() -> tuple[str, ...]:
    return tuple(row.name for row in load_rows())


def dual_pairs() -> tuple[tuple[FixtureRow, FixtureRow], ...]:
    """Pairs of rows that are mutually dual by name (including self-dual rows
    paired with themselves); rows whose dual class has no fixture row of its
    own are skipped."""
    rows = {row.name: row for row in load_rows()}
    pairs = []
    for row in load_rows():
        partner = rows.get(row.dual_name)
        if partner is not None and partner.dual_name == row.name:
            pairs.append((row, partner))
    return tuple(pairs)
