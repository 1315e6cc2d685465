import pytest

from catalog.models import FamilyDocument


@pytest.fixture()
def intriguing_document():
    """The Krall-Sheffer example written out as a user document."""
    return {
        "name": "hand-written",
        "description": "Entered by hand.",
        "phi": [[{"terms": [[0, 1, "3"]]}, 1], [1, 0]],
        "psi": [{"terms": [[1, 0, "-1"]]}, {"terms": [[0, 1, "-1"]]}],
        "weight": {"s": {"terms": [[0, 3, "1"], [1, 1, "-1"]]}, "factors": []},
    }


@pytest.fixture()
@pytest.mark.django_db
def stored_family(intriguing_document):
    family = FamilyDocument(name="stored-intriguing", document=intriguing_document)
    family.save()
    return family
