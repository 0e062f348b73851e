"""Local caching for computed spectra."""

import hashlib
import json
from pathlib import Path

import diskcache


def get_cache(name: str, cache_dir: str = "./cache") -> diskcache.Cache:
    """Get or create a named disk cache."""
    path = Path(cache_dir) / name
    path.mkdir(parents=True, exist_ok=True)
    return diskcache.Cache(str(path))


def cache_key(**parts) -> str:
    """Stable key from keyword parts (floats are rendered with repr)."""
    payload = json.dumps({k: repr(v) for k, v in sorted(parts.items())}, sort_keys=True)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()
