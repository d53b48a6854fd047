import json
from fractions import Fraction

import pytest
from pydantic import ValidationError

from flags.identities import ANTI_PATH_EDGE, K3_EDGE, lc
from flags.serialization import LinCombPayload, TermPayload, dumps_lincomb, loads_lincomb

pytestmark = pytest.mark.unit


def test_round_trip_keeps_exact_coefficients():
    f = lc(K3_EDGE, Fraction(1, 2)) - lc(ANTI_PATH_EDGE, Fraction(2, 3))
    text = dumps_lincomb(f)
    payload = json.loads(text)
    assert payload["schema"] == 1
    assert payload["type"] == "E"
    assert loads_lincomb(text) == f


def test_payload_validation():
    with pytest.raises(ValidationError):
        TermPayload(graph6="Bw", labels=[0, 1], num=1, den=0)
    with pytest.raises(ValidationError):
        LinCombPayload(type="X", level=3)
