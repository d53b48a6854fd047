"""JSON payloads for flag combinations."""

import logging
from fractions import Fraction
from typing import List

from pydantic import BaseModel, ConfigDict, Field, validator

from core.graph6 import encode_graph6, parse_graph6
from flags.flag import make_flag
from flags.lincomb import LinComb
from flags.types import TypeName, type_by_name

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


class TermPayload(BaseModel):
    """One flag with its rational coefficient"""
    graph6: str = Field(..., description="graph6 of the flag graph, labels first")
    labels: List[int] = Field(default_factory=list)
    num: int
    den: int = 1

    @validator('den')
    def validate_den(cls, v):
        if v <= 0:
            raise ValueError("Denominator must be positive")
        return v


class LinCombPayload(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    type: str
    level: int
    terms: List[TermPayload] = Field(default_factory=list)

    @validator('type')
    def validate_type(cls, v):
        if v not in {name.value for name in TypeName}:
            raise ValueError(f"Unknown flag type {v!r}")
        return v


def lincomb_to_payload(f: LinComb) -> LinCombPayload:
    terms = [
        TermPayload(
            graph6=encode_graph6(flag.graph, canonicalize=False),
            labels=list(flag.labels),
            num=c.numerator,
            den=c.denominator,
        )
        for flag, c in f.items()
    ]
    return LinCombPayload(type=f.flag_type.name, level=f.level, terms=terms)


def lincomb_from_payload(payload: LinCombPayload) -> LinComb:
    """Rebuild a combination; flags are re-canonicalized so any labeling is accepted."""
    flag_type = type_by_name(payload.type)
    terms = {}
    for term in payload.terms:
        flag = make_flag(parse_graph6(term.graph6), term.labels, flag_type)
        terms[flag] = terms.get(flag, Fraction(0)) + Fraction(term.num, term.den)
    return LinComb(flag_type, payload.level, terms)


def dumps_lincomb(f: LinComb) -> str:
    return lincomb_to_payload(f).model_dump_json(by_alias=True)


def loads_lincomb(text: str) -> LinComb:
    return lincomb_from_payload(LinCombPayload.model_validate_json(text))
