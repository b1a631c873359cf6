import csv
import logging
from pathlib import Path
from typing import List

from app.model.experiment import CSV_FIELDS, ExperimentRow
from app.repository.result import ResultRepository


class CsvResultDatastore(ResultRepository):
    """Experiment rows in a CSV file with a fixed header."""

    def start(self, path: Path) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        try:
            with open(path, "w", newline="", encoding="utf-8") as handle:
                csv.DictWriter(handle, fieldnames=CSV_FIELDS).writeheader()
        except OSError as e:
            logging.error(f"Error creating results file {path} - {e}")
            raise

    def append(self, path: Path, row: ExperimentRow) -> None:
        try:
            with open(path, "a", newline="", encoding="utf-8") as handle:
                csv.DictWriter(handle, fieldnames=CSV_FIELDS).writerow(row.as_record())
        except OSError as e:
            logging.error(f"Error appending to results file {path} with row={row} - {e}")
            raise

    def read(self, path: Path) -> List[ExperimentRow]:
        with open(path, newline="", encoding="utf-8") as handle:
            return [ExperimentRow.model_validate(record) for record in csv.DictReader(handle)]
