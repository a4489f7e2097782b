import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for the oracles module

from puzzlefonts import fontdata


@pytest.fixture(scope="session")
def shipped():
    """All five shipped fonts, parsed once."""
    fonts = {}
    for fid in fontdata.FONT_IDS:
        fonts[fid] = fontdata.load_font_file(fontdata.find_font_file(fid))
    return fonts
