"""Request and response bodies, shared by the HTTP routes and the CLI.

Conventions (schema version 1):

- Integers that can exceed 2**53 travel as decimal strings (fields named
  *_dec) or hex strings (*_hex) so non-Python JSON clients keep precision.
  Bounded counters and sizes stay plain JSON numbers.
- Timings are integer milliseconds.
- Validation that needs only the request itself lives here, so both
  transports reject bad input identically; anything needing computation
  stays in the handlers.
"""

from __future__ import annotations

import re
from typing import Annotated, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

SCHEMA_VERSION = 1

DecimalStr = Annotated[str, Field(pattern=r"^[0-9]+$")]
HexStr = Annotated[str, Field(pattern=r"^(?:[0-9a-fA-F]{2})+$")]


def _parse_even_literal(value: object) -> int:
    """Accept an int, a decimal string, or '2^k'; require even and >= 6."""
    if isinstance(value, bool):
        raise ValueError("two_n must be an integer or string")
    if isinstance(value, int):
        parsed = value
    elif isinstance(value, str):
        text = value.strip()
        power = re.fullmatch(r"2\^([0-9]+)", text)
        if power:
            exponent = int(power.group(1))
            if exponent > 64:
                raise ValueError("2^k literals are limited to k <= 64")
            parsed = 1 << exponent
        else:
            parsed = int(text)  # ValueError propagates as a validation error
    else:
        raise ValueError("two_n must be an integer or string")
    if parsed < 6 or parsed % 2:
        raise ValueError(f"two_n must be an even number >= 6, got {parsed}")
    return parsed


def _distinct_non_negative(values: list[int], what: str) -> list[int]:
    if any(v < 0 for v in values):
        raise ValueError(f"{what} entries must be non-negative")
    if len(set(values)) != len(values):
        raise ValueError(f"{what} entries must be distinct")
    return values


class DepthSweepRequest(BaseModel):
    pattern: list[int] = Field(min_length=1, description="set-bit indices of the start value")
    depths: list[int] = Field(min_length=1)
    mr_rounds: int = Field(default=25, ge=1)
    seed: int = 0

    @field_validator("pattern")
    @classmethod
    def _pattern_ok(cls, v: list[int]) -> list[int]:
        return _distinct_non_negative(v, "pattern")

    @field_validator("depths")
    @classmethod
    def _depths_ok(cls, v: list[int]) -> list[int]:
        if any(d < 0 for d in v):
            raise ValueError("depths must be non-negative")
        return v


class SweepRowOut(BaseModel):
    b: int  # trial depth
    a: int  # candidates that reached Miller-Rabin
    c_ms: int  # whole search
    d_ms: int  # Miller-Rabin stage
    e_ms: int  # trial-division stage


class DepthSweepResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    found_hex: str
    rows: list[SweepRowOut]


class CensusRequest(BaseModel):
    two_n: int = Field(description="even number >= 6; strings and '2^k' accepted")
    variants: list[Literal["star1", "star2", "gc"]] = ["star1", "star2", "gc"]

    @field_validator("two_n", mode="before")
    @classmethod
    def _two_n_ok(cls, v: object) -> int:
        return _parse_even_literal(v)

    @field_validator("variants")
    @classmethod
    def _variants_ok(cls, v: list[str]) -> list[str]:
        if not v:
            raise ValueError("variants must not be empty")
        if len(set(v)) != len(v):
            raise ValueError("variants must be distinct")
        return v


class CensusResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    two_n: int
    star1: Optional[int] = None
    star2: Optional[int] = None
    gc: Optional[int] = None
    elapsed_ms: int


class GenPrimeRequest(BaseModel):
    mode: Literal["search", "gc-assist"] = "search"
    bits: Optional[int] = Field(default=None, ge=8)
    pattern: Optional[list[int]] = Field(default=None, min_length=1)
    small_bits: Optional[int] = Field(default=None, ge=8)
    gc_mode: Literal["retry", "fallback"] = "retry"
    trial_depth: int = Field(default=60, ge=0)
    mr_rounds: int = Field(default=25, ge=1)
    seed: int = 0

    @field_validator("pattern")
    @classmethod
    def _pattern_ok(cls, v: Optional[list[int]]) -> Optional[list[int]]:
        if v is not None:
            _distinct_non_negative(v, "pattern")
        return v

    @model_validator(mode="after")
    def _mode_shape(self) -> "GenPrimeRequest":
        if self.mode == "search":
            if (self.bits is None) == (self.pattern is None):
                raise ValueError("search mode needs exactly one of bits or pattern")
            if self.small_bits is not None:
                raise ValueError("small_bits applies only to gc-assist mode")
        else:
            if self.bits is None or self.small_bits is None:
                raise ValueError("gc-assist mode needs bits and small_bits")
            if self.pattern is not None:
                raise ValueError("pattern applies only to search mode")
            if self.bits <= self.small_bits + 2:
                raise ValueError("bits must exceed small_bits + 2")
        return self


class SearchReportOut(BaseModel):
    candidates_scanned: int
    mr_candidates: int
    trial_depth: int
    total_ms: int
    trial_ms: int
    mr_ms: int


class GcAssistOut(BaseModel):
    p_dec: DecimalStr
    two_n_dec: DecimalStr
    attempts: int
    exact_sum: bool  # False when fallback search moved q past two_n - p


class GenPrimeResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    prime_hex: str
    prime_dec: DecimalStr
    report: Optional[SearchReportOut] = None
    gc_assist: Optional[GcAssistOut] = None


class KeygenRequest(BaseModel):
    bits: int = Field(ge=8)
    e: int = 65537
    e_strategy: Literal["fixed", "gc-derived"] = "fixed"
    trial_depth: int = Field(default=60, ge=0)
    mr_rounds: int = Field(default=25, ge=1)
    seed: int = 0

    @model_validator(mode="after")
    def _e_ok(self) -> "KeygenRequest":
        if self.e_strategy == "fixed" and (self.e < 3 or self.e % 2 == 0):
            raise ValueError("fixed e must be odd and >= 3")
        return self


class KeyPairOut(BaseModel):
    schema_version: int = SCHEMA_VERSION
    bits: int
    n_dec: DecimalStr
    n_hex: str
    e_dec: DecimalStr
    d_dec: DecimalStr
    p_dec: DecimalStr
    q_dec: DecimalStr
    phi_dec: DecimalStr


class EncryptRequest(BaseModel):
    n_dec: DecimalStr
    e_dec: DecimalStr
    m_dec: Optional[DecimalStr] = None
    text: Optional[str] = None

    @model_validator(mode="after")
    def _payload_ok(self) -> "EncryptRequest":
        if (self.m_dec is None) == (self.text is None):
            raise ValueError("provide exactly one of m_dec or text")
        return self


class EncryptResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    c_dec: DecimalStr
    c_hex: str


class DecryptRequest(BaseModel):
    n_dec: DecimalStr
    d_dec: DecimalStr
    c_dec: DecimalStr


class DecryptResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    m_dec: DecimalStr
    m_hex: str
    text: Optional[str] = None  # present only when the bytes decode as ASCII


class GcTableRequest(BaseModel):
    rows: int = Field(ge=1, le=10000)
    prime_bits: int = Field(ge=8)
    hash_id: str = "sha256"
    trial_depth: int = Field(default=60, ge=0)
    mr_rounds: int = Field(default=25, ge=1)
    seed: int = 0


class GcTableRowOut(BaseModel):
    two_n: int
    h_star1: HexStr
    h_gc: HexStr


class GcTableResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    hash_id: str
    rows: list[GcTableRowOut]
    table_text: str  # canonical file rendering of the same rows


class ResolveRequest(BaseModel):
    table_text: str
    h_star1: HexStr
    h_gc: HexStr

    @field_validator("h_star1", "h_gc")
    @classmethod
    def _lower(cls, v: str) -> str:
        return v.lower()


class ResolveResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    found: bool
    two_n: Optional[int] = None
    modulus: Optional[int] = None  # two_n - 1 when found


class HealthResponse(BaseModel):
    status: str
    version: str
