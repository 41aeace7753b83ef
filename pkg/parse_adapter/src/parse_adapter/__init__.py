"""parse_adapter: raw review text -> CoNLL-U + coreference sidecar."""

__version__ = "0.1.0"

from .adapter import AdapterManifest, adapt, get_backend
