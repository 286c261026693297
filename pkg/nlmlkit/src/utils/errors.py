"""
Exception hierarchy for nlmlkit.

Every error carries its structured fields as attributes so the CLI can map
them to exit codes and callers can inspect them without parsing messages.
"""
from typing import Optional


class NlmlError(Exception):
    """Base class for all nlmlkit errors"""


# Lexicon

class LexiconError(NlmlError):
    """Problem with the lexicon file"""


class MalformedLine(LexiconError):
    def __init__(self, line_number: int, reason: str):
        self.line_number = line_number
        self.reason = reason
        super().__init__(f"line {line_number}: {reason}")


class DuplicateEntry(LexiconError):
    def __init__(self, line_number: int, surface: str = ""):
        self.line_number = line_number
        self.surface = surface
        super().__init__(f"line {line_number}: duplicate entry {surface!r}")


class UnificationFailure(NlmlError):
    """Agreement violation: an affix dimension intersected to the empty set"""

    def __init__(self, dimension: str):
        self.dimension = dimension
        super().__init__(f"affix dimension {dimension!r} does not unify")


# Grammar

class ParseError(NlmlError):
    """The grammar could not analyse the input"""


class NoParse(ParseError):
    def __init__(self, furthest: int, token: Optional[str] = None):
        self.furthest = furthest
        self.token = token
        where = f" at {token!r}" if token else ""
        super().__init__(f"no analysis; furthest token index reached {furthest}{where}")


class UnknownAttachment(ParseError):
    def __init__(self, verb: str):
        self.verb = verb
        super().__init__(f"verb {verb!r} licenses none of the parsed complements")


class PositionViolation(ParseError):
    def __init__(self, word: str, position: str):
        self.word = word
        self.position = position
        super().__init__(f"adjective {word!r} cannot stand in {position} position")


class InvalidCharacter(ParseError):
    def __init__(self, position: int, char: str = ""):
        self.position = position
        self.char = char
        super().__init__(f"invalid character {char!r} at offset {position}")


# NLML markup

class NlmlSyntaxError(NlmlError):
    """Malformed NLML string"""


class UnbalancedTag(NlmlSyntaxError):
    def __init__(self, position: int, detail: str = ""):
        self.position = position
        super().__init__(f"unbalanced tag at offset {position}" + (f": {detail}" if detail else ""))


class UnknownTag(NlmlSyntaxError):
    def __init__(self, name: str, position: int):
        self.name = name
        self.position = position
        super().__init__(f"unknown tag {name!r} at offset {position}")


class StrayText(NlmlSyntaxError):
    def __init__(self, position: int):
        self.position = position
        super().__init__(f"text outside any element at offset {position}")


class InvalidTag(NlmlError):
    def __init__(self, tag: str):
        self.tag = tag
        super().__init__(f"tag {tag!r} is not in the NLML vocabulary")


# Object model

class ModelError(NlmlError):
    """The document cannot be turned into, or transformed as, a sentence model"""


class NotASentence(ModelError):
    def __init__(self, mood: str):
        self.mood = mood
        super().__init__(f"mood {mood!r} is a phrase-level reading, not a sentence")


class MissingTag(ModelError):
    def __init__(self, tag: str, context: str):
        self.tag = tag
        self.context = context
        super().__init__(f"missing <{tag}> in {context}")


class IndexOutOfRange(ModelError):
    def __init__(self, index: int, size: int):
        self.index = index
        self.size = size
        super().__init__(f"part index {index} out of range for {size} part(s)")


class UnsupportedMood(ModelError):
    def __init__(self, mood: str):
        self.mood = mood
        super().__init__(f"operation not supported for mood {mood!r}")


class UnsupportedComplexity(ModelError):
    def __init__(self, complexity: str):
        self.complexity = complexity
        super().__init__(f"operation not supported for complexity {complexity!r}")


# Store

class StoreError(NlmlError):
    """NLDB failure"""


class Unclassifiable(StoreError):
    def __init__(self, mood: str):
        self.mood = mood
        super().__init__(f"cannot classify a document with mood {mood!r}")


class KeyNotFound(StoreError):
    def __init__(self, key: int):
        self.key = key
        super().__init__(f"no record with key {key}")


class StorageFailure(StoreError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"storage failure: {reason}")


class ConfigError(NlmlError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"invalid configuration: {reason}")
