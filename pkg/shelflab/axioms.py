"""Axiom systems for finite magmas."""
import enum
import functools
import operator


class Axiom(enum.Flag):
    """Axiom systems a Cayley table can be searched for or checked against."""

    NONE = 0

    SHELF = enum.auto()
    IDEMPOTENT = enum.auto()
    ASSOCIATIVE = enum.auto()
    RACK = enum.auto()
    SPINDLE = enum.auto()
    QUANDLE = enum.auto()
    QUASIGROUP = enum.auto()
    UNITAL = enum.auto()
    PROTO_UNITAL = enum.auto()
    PRE_UNITAL = enum.auto()

    @classmethod
    def parse(cls, text: str) -> "Axiom":
        """Convert "shelf,proto-unital" and friends into flags."""
        names = [name.strip() for name in text.split(",") if name.strip()]
        if not names:
            raise ValueError("No axioms given")
        try:
            flags = [cls[name.upper().replace("-", "_")] for name in names]
        except KeyError as exc:
            raise ValueError(f"Unknown axiom {exc.args[0]!r}") from exc
        return functools.reduce(operator.or_, flags, cls.NONE)

    def closure(self) -> "Axiom":
        """Add the axioms implied by definition (not by theorem)."""
        flags = self
        for flag, implied in _DEFINITIONS.items():
            if flag in flags:
                flags |= implied
        return flags

    def names(self) -> list[str]:
        """Lower-case names of the individual flags, in declaration order."""
        return [
            flag.name.lower() for flag in type(self)
            if flag.name and flag.value and flag in self
        ]


_DEFINITIONS: dict[Axiom, Axiom] = {
    Axiom.QUANDLE: Axiom.RACK | Axiom.SPINDLE,
    Axiom.PRE_UNITAL: Axiom.PROTO_UNITAL | Axiom.IDEMPOTENT,
    Axiom.SPINDLE: Axiom.SHELF | Axiom.IDEMPOTENT,
    Axiom.RACK: Axiom.SHELF,
    Axiom.UNITAL: Axiom.SHELF,
    Axiom.PROTO_UNITAL: Axiom.SHELF,
}
