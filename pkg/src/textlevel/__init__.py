"""textlevel: linguistic feature extraction and difficulty-level
classification for English texts."""

__version__ = "0.1.0"
