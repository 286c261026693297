# Flat-file NLML store: one record per line, key TAB class TAB timestamp TAB nlml
import fcntl
import logging
import os
import threading
from datetime import datetime, timezone
from typing import List, Optional

from ..core.lexicon import Lexicon
from ..core.nlml import canonicalize, deserialize, serialize
from ..core.nlom import build_model
from ..models.nlml import NlmlDocument
from ..models.parse import Mood
from ..models.record import DbClass, DbRecord
from ..models.sentence import SentenceModel
from ..utils.errors import KeyNotFound, StorageFailure, Unclassifiable

logger = logging.getLogger(__name__)

_SENTENCE_MOODS = (Mood.STATEMENT.value, Mood.ORDER.value, Mood.FULL_EXCLAMATION.value)


def classify(doc: NlmlDocument) -> DbClass:
    """
    Store class of a sentence document.

    Questions are questions; statements with a subordinate clause and bare
    subordinate clauses are relations; every other sentence is a fact.

    Raises:
        Unclassifiable: phrase-level mood
    """
    mood = doc.mood or ""
    if mood == Mood.QUESTION.value:
        return DbClass.QUESTION
    if mood == Mood.SUBCIRCUM.value:
        return DbClass.RELATION
    if mood not in _SENTENCE_MOODS:
        raise Unclassifiable(mood)
    if mood == Mood.STATEMENT.value and doc.find("subordinator") is not None:
        return DbClass.RELATION
    return DbClass.FACT


class NlmlStore:
    """
    Append-only record file.

    Writes are serialized by a lock within the process and an advisory
    file lock across processes; reads take a shared file lock.
    """

    def __init__(self, path: str):
        self.path = path
        self._lock = threading.Lock()
        self._ensure_store_file()

    def _ensure_store_file(self) -> None:
        """Create the store file (and its directory) if missing"""
        try:
            directory = os.path.dirname(os.path.abspath(self.path))
            os.makedirs(directory, exist_ok=True)
            if not os.path.exists(self.path):
                open(self.path, "a", encoding="utf-8").close()
        except OSError as e:
            raise StorageFailure(str(e)) from e

    def _read_records(self) -> List[DbRecord]:
        try:
            with open(self.path, "r", encoding="utf-8", newline="\n") as f:
                fcntl.flock(f, fcntl.LOCK_SH)
                try:
                    lines = f.readlines()
                finally:
                    fcntl.flock(f, fcntl.LOCK_UN)
        except OSError as e:
            raise StorageFailure(str(e)) from e
        records = []
        for number, line in enumerate(lines, start=1):
            if not line.strip():
                logger.warning("Skipping blank line %d in %s", number, self.path)
                continue
            try:
                records.append(DbRecord.from_line(line))
            except ValueError as e:
                raise StorageFailure(f"line {number}: {e}") from e
        return records

    def put(self, doc: NlmlDocument) -> int:
        """
        Store a document under its class.

        Returns:
            The new record's key (one more than the largest stored key)
        """
        db_class = classify(doc)
        nlml = serialize(canonicalize(doc))
        with self._lock:
            try:
                with open(self.path, "a+", encoding="utf-8", newline="\n") as f:
                    fcntl.flock(f, fcntl.LOCK_EX)
                    try:
                        f.seek(0)
                        keys = [DbRecord.from_line(line).key for line in f if line.strip()]
                        record = DbRecord(
                            key=max(keys, default=0) + 1,
                            db_class=db_class,
                            created_at=datetime.now(timezone.utc).isoformat(),
                            nlml=nlml,
                        )
                        f.write(record.to_line())
                        f.flush()
                    finally:
                        fcntl.flock(f, fcntl.LOCK_UN)
            except (OSError, ValueError) as e:
                raise StorageFailure(str(e)) from e
        logger.info("Stored record %d as %s", record.key, db_class.value)
        return record.key

    def get(self, key: int) -> DbRecord:
        for record in self._read_records():
            if record.key == key:
                return record
        raise KeyNotFound(key)

    def query(self, db_class: Optional[DbClass] = None) -> List[DbRecord]:
        """Records of one class (all records when None), in key order"""
        records = [r for r in self._read_records() if db_class is None or r.db_class == db_class]
        return sorted(records, key=lambda r: r.key)

    def rebuild(self, keys: List[int], lexicon: Optional[Lexicon] = None) -> List[SentenceModel]:
        """Sentence models of the given records, in the order of ``keys``"""
        by_key = {r.key: r for r in self._read_records()}
        models = []
        for key in keys:
            if key not in by_key:
                raise KeyNotFound(key)
            models.append(build_model(deserialize(by_key[key].nlml), lexicon))
        logger.info("Rebuilt %d model(s) from %s", len(models), os.path.basename(self.path))
        return models
