from .pipeline import GroupAnalysis, analyze  # noqa
from .report import AnalysisReport, csv_header, write_csv, write_json  # noqa
