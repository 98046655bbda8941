"""Just your friendly neighborhood version number."""
SHELFLAB_VERSION = "0.3.1"
