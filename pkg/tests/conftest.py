import pytest

from helpers import synthetic_photo


@pytest.fixture(scope="session")
def photo_scene():
    """512x512 grayscale photographic test scene, built once per run."""
    return synthetic_photo()
