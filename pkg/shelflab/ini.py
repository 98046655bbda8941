"""Ini file helper."""
import configparser
import dataclasses as dcl
import logging
from pathlib import Path
import shutil

from shelflab.blockspindle import SCAN_SIZE_LIMIT
from shelflab.blockspindle import SPINDLE_SIZE_LIMIT
from shelflab.enumeration import ENUMERATION_ORDER_LIMIT
from shelflab.enumeration import ENUMERATION_OVERRIDE_LIMIT
from shelflab.errors import ShelfLabError
from shelflab.freealg import EGF_TERMS_LIMIT
from shelflab.freealg import FAS_COUNT_LIMIT
from shelflab.freealg import FAS_ORDER_LIMIT
from shelflab.freealg import FREE_ORDER_LIMIT
from shelflab.homology import BOUNDARY_COLUMN_CAP
from shelflab.laver import LAVER_K_LIMIT
from shelflab.magma import CANONICAL_ORDER_LIMIT


class SettingsError(ShelfLabError):
    """We raise this for unreadable values in the settings file."""


@dcl.dataclass(frozen=True)
class Limits:
    """Every bound a run may override."""

    canonical_order: int = CANONICAL_ORDER_LIMIT
    enumeration_order: int = ENUMERATION_ORDER_LIMIT
    enumeration_override_order: int = ENUMERATION_OVERRIDE_LIMIT
    fas_order: int = FAS_ORDER_LIMIT
    free_order: int = FREE_ORDER_LIMIT
    laver_k: int = LAVER_K_LIMIT
    spindle_size: int = SPINDLE_SIZE_LIMIT
    scan_size: int = SCAN_SIZE_LIMIT
    boundary_column_cap: int = BOUNDARY_COLUMN_CAP
    egf_terms: int = EGF_TERMS_LIMIT
    fas_count_terms: int = FAS_COUNT_LIMIT


class SettingsFile(configparser.ConfigParser):
    """Settings .ini file."""

    ENCODING = "UTF-8"
    LIMITS_SECTION = "Limits"
    DEFAULT_NAME = "shelflab.ini"

    path: Path
    touched: bool = False

    def __init__(self, path: Path, *, fresh_start: bool = False) -> None:
        """Read ini file."""
        super().__init__()
        self.path = path

        if fresh_start or not self.exists():
            return

        logging.info("Reading %s", self.path)
        try:
            self.read(path, encoding=self.ENCODING)
        except configparser.Error as exc:
            raise SettingsError(f"{self.path}: {exc}") from exc

    def exists(self) -> bool:
        """Check if the .ini file currently exists."""
        return self.path.is_file()

    def limits(self) -> Limits:
        """Defaults, overridden by whatever the [Limits] section says."""
        if not self.has_section(self.LIMITS_SECTION):
            return Limits()
        section = self[self.LIMITS_SECTION]
        known = {field.name for field in dcl.fields(Limits)}
        values = {}
        for key, text in section.items():
            if key not in known:
                logging.warning("Ignoring unknown limit %r in %s", key, self.path)
                continue
            try:
                values[key] = int(text)
            except ValueError:
                raise SettingsError(
                    f"{self.path}: limit {key} must be an integer, not {text!r}",
                ) from None
            if values[key] < 0:
                raise SettingsError(f"{self.path}: limit {key} is negative")
        return Limits(**values)

    def update_limits(self, limits: Limits) -> None:
        """Store the limits; sets `self.touched` if anything was changed."""
        if not self.has_section(self.LIMITS_SECTION):
            self[self.LIMITS_SECTION] = {}
        section = self[self.LIMITS_SECTION]
        for field in dcl.fields(Limits):
            value = str(getattr(limits, field.name))
            self.touched |= section.get(field.name) != value
            section[field.name] = value

    def backup_and_write(self) -> None:
        """Write to disk, backing up first if modified."""
        if self.touched and self.exists():
            logging.debug("Backing up %s", self.path)
            shutil.copy(self.path, self.path.with_suffix(".bak"))

        logging.info("Writing %s", self.path)
        with self.path.open("w", encoding=self.ENCODING) as fobj:
            self.write(fobj)
