import csv
import io
import json
import attr

from ..utils.humanize import flag


@attr.s(frozen=True)
class AnalysisReport:
    """
    Everything `analyze` reports about one group. `elapsed_ms` is only set
    when timings were asked for, so that reports are otherwise identical
    from run to run.
    """
    spec = attr.ib()
    order = attr.ib()
    abelian = attr.ib()
    exponent = attr.ib()
    subgroup_count = attr.ib()
    maximal_count = attr.ib()
    sigma = attr.ib()
    c3 = attr.ib()
    klein_quotients = attr.ib()
    theorem_b = attr.ib()
    corollary_c = attr.ib()
    theorem_d = attr.ib(converter=tuple)
    elapsed_ms = attr.ib(default=None)

    fields = (
        "spec",
        "order",
        "abelian",
        "exponent",
        "subgroup_count",
        "maximal_count",
        "sigma",
        "c3",
        "klein_quotients",
        "theorem_b",
        "corollary_c",
        "theorem_d",
    )

    @classmethod
    def from_dict(cls, data):
        return cls(**data)

    def to_dict(self):
        data = {name: getattr(self, name) for name in self.fields}
        data["theorem_d"] = list(self.theorem_d)
        if self.elapsed_ms is not None:
            data["elapsed_ms"] = self.elapsed_ms
        return data

    def to_json(self):
        return json.dumps(self.to_dict())

    def csv_row(self):
        row = [self.to_dict()[name] for name in self.fields]
        row[self.fields.index("theorem_d")] = "/".join(flag(x) for x in self.theorem_d)
        for i, value in enumerate(row):
            if isinstance(value, bool):
                row[i] = flag(value)
        if self.elapsed_ms is not None:
            row.append(self.elapsed_ms)
        return row


def csv_header(timings=False):
    return list(AnalysisReport.fields) + (["elapsed_ms"] if timings else [])


def write_json(reports, echo):
    """
    One JSON object per line.
    """
    for report in reports:
        echo(report.to_json())


def write_csv(reports, echo, timings=False):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(csv_header(timings))
    echo(buffer.getvalue(), nl=False)
    for report in reports:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(report.csv_row())
        echo(buffer.getvalue(), nl=False)
