class HybridSummError(Exception):
    """Base class for all package errors."""


class FormatError(HybridSummError, ValueError):
    """A resource file does not follow its documented format."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}"
            if line is not None:
                where += f":{line}"
            where += ": "
        elif line is not None:
            where = f"line {line}: "
        super().__init__(where + message)


class ResourceError(HybridSummError):
    """A required external resource (lexicon, vectors, embeddings) is missing or unusable."""


class DataError(HybridSummError, ValueError):
    """Input documents or summaries are inconsistent with the requested operation."""
