"""Innings-by-innings log ingestion: record types, CSV parsing and writing.

CSV is the only ingestion format. Dates are ISO-8601 in files; booleans are
serialized as 0/1; enums as their token strings. Overs are kept as integer
balls internally, cricket notation (9.3 = 9 overs 3 balls) only at the I/O
boundary.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, fields, replace
from datetime import date
from pathlib import Path

from .errors import MalformedRow, OrderViolation, SchemaMismatch

MATCH_TYPES = ("Normal", "QuarterFinal", "SemiFinal", "Final")
MATCH_TIMES = ("Day", "DayNight")
TOURNAMENTS = ("TT", "TFT", "FT")
VENUE_RELATIONS = ("Home", "Away", "Neutral")
HANDS = ("Left", "Right")
ROLES = (
    "OBT",
    "TOB",
    "MOB",
    "Batsman",
    "Allrounder",
    "BattingAllrounder",
    "BowlingAllrounder",
    "Bowler",
)

BATTING_COLUMNS = (
    "player_id",
    "player_name",
    "match_date",
    "opposition",
    "ground",
    "host_country",
    "runs",
    "balls_faced",
    "dismissed",
    "position",
    "innings_no",
    "match_type",
    "match_time",
    "tournament",
    "toss_won",
    "venue_relation",
    "captain",
    "wicketkeeper",
    "batting_hand",
    "role",
)

BOWLING_COLUMNS = (
    "player_id",
    "player_name",
    "match_date",
    "opposition",
    "ground",
    "host_country",
    "balls_bowled",
    "runs_conceded",
    "wickets",
    "innings_no",
    "match_type",
    "match_time",
    "tournament",
    "toss_won",
    "venue_relation",
    "bowling_hand",
)


@dataclass(frozen=True)
class BattingInnings:
    player_id: str
    player_name: str
    match_date: date
    opposition: str
    ground: str
    host_country: str
    runs: int
    balls_faced: int
    dismissed: bool
    position: int
    innings_no: int
    match_type: str
    match_time: str
    tournament: str
    toss_won: bool
    venue_relation: str
    captain: bool
    wicketkeeper: bool
    batting_hand: str
    role: str
    # per-player sequence number from file order; breaks same-day ties
    seq: int = 0


@dataclass(frozen=True)
class BowlingInnings:
    player_id: str
    player_name: str
    match_date: date
    opposition: str
    ground: str
    host_country: str
    balls_bowled: int
    runs_conceded: int
    wickets: int
    innings_no: int
    match_type: str
    match_time: str
    tournament: str
    toss_won: bool
    venue_relation: str
    bowling_hand: str
    seq: int = 0

    @property
    def overs_notation(self) -> float:
        """Overs in cricket notation, e.g. 57 balls -> 9.3."""
        return self.balls_bowled // 6 + (self.balls_bowled % 6) / 10


@dataclass(frozen=True)
class RosterEntry:
    player_id: str
    role: str


@dataclass(frozen=True)
class Roster:
    team: str
    as_of: date
    players: tuple[RosterEntry, ...]


def _parse_int(raw: str, name: str, lo: int | None = None, hi: int | None = None) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} is not an integer: {raw!r}")
    if lo is not None and value < lo:
        raise ValueError(f"{name}={value} below minimum {lo}")
    if hi is not None and value > hi:
        raise ValueError(f"{name}={value} above maximum {hi}")
    return value


def _parse_bool(raw: str, name: str) -> bool:
    if raw == "0":
        return False
    if raw == "1":
        return True
    raise ValueError(f"{name} must be 0 or 1, got {raw!r}")


def _parse_enum(raw: str, name: str, domain: tuple[str, ...]) -> str:
    if raw not in domain:
        raise ValueError(f"{name}={raw!r} not one of {'/'.join(domain)}")
    return raw


def _parse_date(raw: str) -> date:
    try:
        return date.fromisoformat(raw)
    except ValueError:
        raise ValueError(f"match_date is not an ISO date: {raw!r}")


def _batting_from_fields(vals: dict[str, str]) -> BattingInnings:
    return BattingInnings(
        player_id=vals["player_id"],
        player_name=vals["player_name"],
        match_date=_parse_date(vals["match_date"]),
        opposition=vals["opposition"],
        ground=vals["ground"],
        host_country=vals["host_country"],
        runs=_parse_int(vals["runs"], "runs", lo=0),
        balls_faced=_parse_int(vals["balls_faced"], "balls_faced", lo=0),
        dismissed=_parse_bool(vals["dismissed"], "dismissed"),
        position=_parse_int(vals["position"], "position", lo=1, hi=11),
        innings_no=_parse_int(vals["innings_no"], "innings_no", lo=1, hi=2),
        match_type=_parse_enum(vals["match_type"], "match_type", MATCH_TYPES),
        match_time=_parse_enum(vals["match_time"], "match_time", MATCH_TIMES),
        tournament=_parse_enum(vals["tournament"], "tournament", TOURNAMENTS),
        toss_won=_parse_bool(vals["toss_won"], "toss_won"),
        venue_relation=_parse_enum(vals["venue_relation"], "venue_relation", VENUE_RELATIONS),
        captain=_parse_bool(vals["captain"], "captain"),
        wicketkeeper=_parse_bool(vals["wicketkeeper"], "wicketkeeper"),
        batting_hand=_parse_enum(vals["batting_hand"], "batting_hand", HANDS),
        role=_parse_enum(vals["role"], "role", ROLES),
    )


def _bowling_from_fields(vals: dict[str, str]) -> BowlingInnings:
    return BowlingInnings(
        player_id=vals["player_id"],
        player_name=vals["player_name"],
        match_date=_parse_date(vals["match_date"]),
        opposition=vals["opposition"],
        ground=vals["ground"],
        host_country=vals["host_country"],
        balls_bowled=_parse_int(vals["balls_bowled"], "balls_bowled", lo=0),
        runs_conceded=_parse_int(vals["runs_conceded"], "runs_conceded", lo=0),
        wickets=_parse_int(vals["wickets"], "wickets", lo=0, hi=10),
        innings_no=_parse_int(vals["innings_no"], "innings_no", lo=1, hi=2),
        match_type=_parse_enum(vals["match_type"], "match_type", MATCH_TYPES),
        match_time=_parse_enum(vals["match_time"], "match_time", MATCH_TIMES),
        tournament=_parse_enum(vals["tournament"], "tournament", TOURNAMENTS),
        toss_won=_parse_bool(vals["toss_won"], "toss_won"),
        venue_relation=_parse_enum(vals["venue_relation"], "venue_relation", VENUE_RELATIONS),
        bowling_hand=_parse_enum(vals["bowling_hand"], "bowling_hand", HANDS),
    )


def _parse_innings_csv(path, columns, builder):
    path = Path(path)
    records = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaMismatch(f"{path}: empty file, expected header {','.join(columns)}")
        if tuple(header) != columns:
            raise SchemaMismatch(
                f"{path}: header mismatch; expected {','.join(columns)}, got {','.join(header)}"
            )
        seq_by_player: dict[str, int] = {}
        for line_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(columns):
                raise MalformedRow(line_no, f"expected {len(columns)} fields, got {len(row)}")
            vals = dict(zip(columns, row))
            try:
                record = builder(vals)
            except ValueError as exc:
                raise MalformedRow(line_no, str(exc))
            seq = seq_by_player.get(record.player_id, 0)
            seq_by_player[record.player_id] = seq + 1
            records.append(replace(record, seq=seq))
    _check_player_order(records)
    return records


def _check_player_order(records) -> None:
    last_date: dict[str, date] = {}
    for rec in records:
        prev = last_date.get(rec.player_id)
        if prev is not None and rec.match_date < prev:
            raise OrderViolation(
                f"player {rec.player_id}: innings dated {rec.match_date} "
                f"appears after {prev}"
            )
        last_date[rec.player_id] = rec.match_date


def parse_batting_csv(path) -> list[BattingInnings]:
    """Parse a batting log. Raises MalformedRow/SchemaMismatch/OrderViolation."""
    return _parse_innings_csv(path, BATTING_COLUMNS, _batting_from_fields)


def parse_bowling_csv(path) -> list[BowlingInnings]:
    return _parse_innings_csv(path, BOWLING_COLUMNS, _bowling_from_fields)


def scan_csv_errors(path, kind: str) -> list[tuple[int, str]]:
    """Visit every row and collect (line_no, reason) diagnostics without stopping.

    Used by the CLI to report all problems in one pass; parsing proper is
    fail-fast.
    """
    columns, builder = {
        "batting": (BATTING_COLUMNS, _batting_from_fields),
        "bowling": (BOWLING_COLUMNS, _bowling_from_fields),
    }[kind]
    diagnostics: list[tuple[int, str]] = []
    with Path(path).open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or tuple(header) != columns:
            return [(1, "header mismatch")]
        for line_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(columns):
                diagnostics.append((line_no, f"expected {len(columns)} fields, got {len(row)}"))
                continue
            try:
                builder(dict(zip(columns, row)))
            except ValueError as exc:
                diagnostics.append((line_no, str(exc)))
    return diagnostics


def _bool_str(value: bool) -> str:
    return "1" if value else "0"


def write_batting_csv(path, records: list[BattingInnings]) -> None:
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(BATTING_COLUMNS)
        for r in records:
            writer.writerow(
                [
                    r.player_id,
                    r.player_name,
                    r.match_date.isoformat(),
                    r.opposition,
                    r.ground,
                    r.host_country,
                    r.runs,
                    r.balls_faced,
                    _bool_str(r.dismissed),
                    r.position,
                    r.innings_no,
                    r.match_type,
                    r.match_time,
                    r.tournament,
                    _bool_str(r.toss_won),
                    r.venue_relation,
                    _bool_str(r.captain),
                    _bool_str(r.wicketkeeper),
                    r.batting_hand,
                    r.role,
                ]
            )


def write_bowling_csv(path, records: list[BowlingInnings]) -> None:
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(BOWLING_COLUMNS)
        for r in records:
            writer.writerow(
                [
                    r.player_id,
                    r.player_name,
                    r.match_date.isoformat(),
                    r.opposition,
                    r.ground,
                    r.host_country,
                    r.balls_bowled,
                    r.runs_conceded,
                    r.wickets,
                    r.innings_no,
                    r.match_type,
                    r.match_time,
                    r.tournament,
                    _bool_str(r.toss_won),
                    r.venue_relation,
                    r.bowling_hand,
                ]
            )


def load_rosters(path) -> list[Roster]:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaMismatch(f"{path}: not valid JSON ({exc})")
    rosters = []
    for entry in payload:
        players = tuple(RosterEntry(p["player_id"], p["role"]) for p in entry["players"])
        if not players:
            raise SchemaMismatch(f"roster for {entry.get('team')!r} is empty")
        ids = [p.player_id for p in players]
        if len(set(ids)) != len(ids):
            raise SchemaMismatch(f"roster for {entry['team']!r} has duplicate player ids")
        rosters.append(
            Roster(team=entry["team"], as_of=_parse_date(entry["as_of"]), players=players)
        )
    return rosters


def write_rosters(path, rosters: list[Roster]) -> None:
    payload = [
        {
            "team": r.team,
            "as_of": r.as_of.isoformat(),
            "players": [{"player_id": p.player_id, "role": p.role} for p in r.players],
        }
        for r in rosters
    ]
    Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def group_by_player(records):
    """Group innings by player_id, preserving (date, seq) order."""
    grouped: dict[str, list] = {}
    for rec in records:
        grouped.setdefault(rec.player_id, []).append(rec)
    for rows in grouped.values():
        rows.sort(key=lambda r: (r.match_date, r.seq))
    return grouped


__all__ = [name for name in dir() if not name.startswith("_")]
