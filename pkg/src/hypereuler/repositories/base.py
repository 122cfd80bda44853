"""Base repository for file-backed models."""

import sys
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Generic, TypeVar, Union

from hypereuler.core.exceptions import ParseError

ModelType = TypeVar("ModelType")

PathLike = Union[str, Path]

STDIN = "-"


def read_text(path: PathLike, encoding: str = "utf-8") -> str:
    """Contents of a file, or of stdin for ``-``.

    Raises:
        ParseError: IO_ERROR if the file cannot be read, MALFORMED if it is
            not valid text in the given encoding
    """
    try:
        if str(path) == STDIN:
            return sys.stdin.read()
        return Path(path).read_text(encoding=encoding)
    except UnicodeDecodeError as exc:
        raise ParseError(
            f"{path} is not valid {encoding} text (byte {exc.start})", code="MALFORMED"
        ) from exc
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}", code="IO_ERROR") from exc


class BaseRepository(ABC, Generic[ModelType]):
    """Read and write one model type through its text formats.

    Subclasses implement ``parse`` and ``serialize``; file access and
    encoding live here.
    """

    encoding = "utf-8"

    @abstractmethod
    def parse(self, text: str) -> ModelType:
        """Build a model from serialized text."""

    @abstractmethod
    def serialize(self, model: ModelType) -> str:
        """Serialize a model to its canonical text."""

    def read(self, path: PathLike) -> ModelType:
        """Load a model from a file, or from stdin for ``-``.

        Raises:
            ParseError: If the file cannot be read or parsed
        """
        return self.parse(read_text(path, self.encoding))

    def write(self, model: ModelType, path: PathLike) -> None:
        Path(path).write_text(self.serialize(model), encoding=self.encoding)
