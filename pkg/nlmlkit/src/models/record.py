from dataclasses import dataclass
from enum import Enum
from typing import Dict


class DbClass(str, Enum):
    """Store classification of a sentence"""
    FACT = "fact"
    QUESTION = "question"
    RELATION = "relation"


@dataclass(frozen=True)
class DbRecord:
    """One stored NLML string"""
    key: int
    db_class: DbClass
    created_at: str  # ISO-8601
    nlml: str  # canonical NLML; never contains tabs or newlines

    def to_line(self) -> str:
        return f"{self.key}\t{self.db_class.value}\t{self.created_at}\t{self.nlml}\n"

    @classmethod
    def from_line(cls, line: str) -> "DbRecord":
        """Parse one store line; raises ValueError on a malformed line"""
        key, db_class, created_at, nlml = line.rstrip("\n").split("\t", 3)
        return cls(key=int(key), db_class=DbClass(db_class), created_at=created_at, nlml=nlml)

    def to_dict(self) -> Dict:
        """Convert DbRecord to dictionary for JSON serialization"""
        return {
            "key": self.key,
            "class": self.db_class.value,
            "created_at": self.created_at,
            "nlml": self.nlml,
        }
