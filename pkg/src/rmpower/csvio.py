"""CSV ingestion and emission.

The primary on-disk format is wide: one header row ``group,subject,<time
label>...`` and one row per subject. A long-format reader
(``group,subject,time,value``) is provided as a convenience; power-curve
tables round-trip through their own small CSV schema.
"""

from __future__ import annotations

import csv
import io

from .errors import CsvError
from .power import CurvePoint, CurveTable
from .rmanova import GroupData, RMDataset, validate_dataset


def _rows_from_text(text: str) -> list[tuple[int, list[str]]]:
    """(1-based line number, cells) for each non-empty CSV record."""
    reader = csv.reader(io.StringIO(text.lstrip("\ufeff")))
    rows = []
    for record in reader:
        if not record or all(not cell.strip() for cell in record):
            continue
        rows.append((reader.line_num, [cell.strip() for cell in record]))
    return rows


def parse_wide_csv(text: str) -> RMDataset:
    """Parse wide-format CSV into a validated dataset.

    Group blocks are ordered by first appearance; (group, subject) pairs
    must be unique; every measurement cell must parse as a number.
    """
    rows = _rows_from_text(text)
    if not rows:
        raise CsvError("no data rows")
    header_line, header = rows[0]
    if len(header) < 4 or header[0].lower() != "group" or header[1].lower() != "subject":
        raise CsvError(
            f"line {header_line}: header must be 'group,subject,<time>...' "
            f"with at least 2 time columns, got {','.join(header)!r}"
        )
    time_labels = tuple(header[2:])
    if len(rows) == 1:
        raise CsvError("no data rows")

    order: list[str] = []
    blocks: dict[str, list[tuple[str, list[float]]]] = {}
    seen: set[tuple[str, str]] = set()
    for line_num, cells in rows[1:]:
        if len(cells) != len(header):
            raise CsvError(
                f"line {line_num}: expected {len(header)} columns, got {len(cells)}"
            )
        group, subject = cells[0], cells[1]
        if not group or not subject:
            raise CsvError(f"line {line_num}: empty group or subject id")
        if (group, subject) in seen:
            raise CsvError(
                f"line {line_num}: duplicate (group, subject) pair "
                f"({group!r}, {subject!r})"
            )
        seen.add((group, subject))
        values = []
        for col, cell in enumerate(cells[2:], start=3):
            try:
                values.append(float(cell))
            except ValueError:
                raise CsvError(
                    f"line {line_num}, column {col}: {cell!r} is not a number"
                ) from None
        if group not in blocks:
            order.append(group)
            blocks[group] = []
        blocks[group].append((subject, values))

    groups = tuple(
        GroupData(
            label=name,
            subjects=tuple(subject for subject, _ in blocks[name]),
            values=[values for _, values in blocks[name]],
        )
        for name in order
    )
    return validate_dataset(RMDataset(groups=groups, time_labels=time_labels))


def parse_long_csv(text: str) -> RMDataset:
    """Parse long-format CSV (``group,subject,time,value``); every
    (group, subject) must cover the full set of time labels."""
    rows = _rows_from_text(text)
    if not rows:
        raise CsvError("no data rows")
    header_line, header = rows[0]
    expected = ["group", "subject", "time", "value"]
    if [cell.lower() for cell in header] != expected:
        raise CsvError(
            f"line {header_line}: header must be 'group,subject,time,value', "
            f"got {','.join(header)!r}"
        )
    if len(rows) == 1:
        raise CsvError("no data rows")

    time_order: list[str] = []
    group_order: list[str] = []
    cells: dict[tuple[str, str], dict[str, float]] = {}
    subject_order: dict[str, list[str]] = {}
    for line_num, record in rows[1:]:
        if len(record) != 4:
            raise CsvError(f"line {line_num}: expected 4 columns, got {len(record)}")
        group, subject, time, raw = record
        try:
            value = float(raw)
        except ValueError:
            raise CsvError(
                f"line {line_num}, column 4: {raw!r} is not a number"
            ) from None
        if time not in time_order:
            time_order.append(time)
        if group not in group_order:
            group_order.append(group)
            subject_order[group] = []
        if subject not in subject_order[group]:
            subject_order[group].append(subject)
            cells[(group, subject)] = {}
        if time in cells[(group, subject)]:
            raise CsvError(
                f"line {line_num}: duplicate cell for ({group!r}, {subject!r}, {time!r})"
            )
        cells[(group, subject)][time] = value

    groups = []
    for group in group_order:
        matrix = []
        for subject in subject_order[group]:
            row = []
            for time in time_order:
                if time not in cells[(group, subject)]:
                    raise CsvError(
                        f"missing value for ({group!r}, {subject!r}, {time!r})"
                    )
                row.append(cells[(group, subject)][time])
            matrix.append(row)
        groups.append(
            GroupData(
                label=group,
                subjects=tuple(subject_order[group]),
                values=matrix,
            )
        )
    return validate_dataset(
        RMDataset(groups=tuple(groups), time_labels=tuple(time_order))
    )


def dataset_to_wide_csv(data: RMDataset) -> str:
    """Serialize a dataset back to wide CSV (floats via repr, so numbers
    round-trip exactly)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["group", "subject"] + list(data.time_labels))
    for block in data.groups:
        for subject, row in zip(block.subjects, block.values):
            writer.writerow([block.label, subject] + [repr(float(v)) for v in row])
    return out.getvalue()


def curve_to_csv(curve: CurveTable) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["f", "n_total", "power"])
    for point in curve:
        writer.writerow([repr(point.f), point.n_total, repr(point.power)])
    return out.getvalue()


def parse_curve_csv(text: str) -> CurveTable:
    rows = _rows_from_text(text)
    if not rows or [c.lower() for c in rows[0][1]] != ["f", "n_total", "power"]:
        raise CsvError("curve CSV must start with header 'f,n_total,power'")
    points = []
    for line_num, record in rows[1:]:
        if len(record) != 3:
            raise CsvError(f"line {line_num}: expected 3 columns")
        try:
            points.append(
                CurvePoint(
                    f=float(record[0]),
                    n_total=int(record[1]),
                    power=float(record[2]),
                )
            )
        except ValueError:
            raise CsvError(f"line {line_num}: malformed curve row") from None
    return CurveTable(points=tuple(points))
