"""Simple output classes."""
import json
import typing as t

from abc import ABC
from abc import abstractmethod

import pandas as pd

from shelflab.cayley import format_cayley
from shelflab.magma import FiniteMagma


SCHEMA_VERSION = 1


class IOutput(ABC):
    """Interface for things that collect a command's results."""

    @abstractmethod
    def write_magma(
        self, magma: FiniteMagma, comments: t.Iterable[str] = (), *, offset: int = 0,
    ) -> None:
        """Add a Cayley table."""
        raise NotImplementedError

    @abstractmethod
    def write_fields(self, fields: t.Mapping[str, t.Any]) -> None:
        """Add named scalar results."""
        raise NotImplementedError

    @abstractmethod
    def write_frame(self, name: str, frame: pd.DataFrame) -> None:
        """Add a table of results."""
        raise NotImplementedError

    @abstractmethod
    def write_text(self, text: str) -> None:
        """Add some plain text."""
        raise NotImplementedError

    @abstractmethod
    def render(self) -> str:
        """Everything written so far, as one document."""
        raise NotImplementedError


class TextOutput(IOutput):
    """Human-readable output; Cayley tables come out in the .cay format."""

    def __init__(self) -> None:
        self.blocks: list[str] = []

    def write_magma(
        self, magma: FiniteMagma, comments: t.Iterable[str] = (), *, offset: int = 0,
    ) -> None:
        self.blocks.append(format_cayley(magma, comments, offset=offset))

    def write_fields(self, fields: t.Mapping[str, t.Any]) -> None:
        lines = [f"{key}: {value}\n" for key, value in fields.items()]
        self.blocks.append("".join(lines))

    def write_frame(self, name: str, frame: pd.DataFrame) -> None:
        self.blocks.append(f"# {name}\n{frame.to_string()}\n")

    def write_text(self, text: str) -> None:
        self.blocks.append(text if text.endswith("\n") else text + "\n")

    def render(self) -> str:
        return "\n".join(self.blocks)


class JsonOutput(IOutput):
    """A single JSON document tagged with the schema version."""

    def __init__(self, command: str) -> None:
        self.document: dict[str, t.Any] = {"schema": SCHEMA_VERSION, "command": command}

    def write_magma(
        self, magma: FiniteMagma, comments: t.Iterable[str] = (), *, offset: int = 0,
    ) -> None:
        self.document.setdefault("tables", []).append({
            "order": magma.order,
            "offset": offset,
            "table": [[value + offset for value in row] for row in magma.table],
            "comments": list(comments),
        })

    def write_fields(self, fields: t.Mapping[str, t.Any]) -> None:
        self.document.update(fields)

    def write_frame(self, name: str, frame: pd.DataFrame) -> None:
        # to_json turns NaN into null, which json.dumps would not.
        self.document[name] = json.loads(frame.reset_index().to_json(orient="records"))

    def write_text(self, text: str) -> None:
        self.document.setdefault("text", []).append(text)

    def render(self) -> str:
        return json.dumps(self.document, indent=2) + "\n"


def create_output(fmt: str, command: str) -> IOutput:
    if fmt == "json":
        return JsonOutput(command)
    return TextOutput()
