"""Canonical byte encodings and file formats for every protocol artifact.

These formats are normative and bit-exact; golden fixtures in the test suite
pin them.  All integers are big-endian and fixed-width:

    field element   ceil(bits(p)/8) bytes, value < p
    polynomial      count byte n (n <= 255), then n field elements,
                    constant term first, leading coefficient nonzero
    divisor         poly(u) || poly(v); the identity is u=1, v=0
    secret key      scalar in [1, r-1], ceil(bits(r)/8) bytes
    public key      divisor
    signature       divisor(Q) || s in [1, r-1] at secret-key width
    ciphertext      magic "HECC1", version 0x01, 8-byte plaintext length,
                    4-byte chunk count, then chunk pairs C1 || C2
    domain params   UTF-8 text, line-oriented "key = value" (see
                    read_domain_file)

Decoders reject anything non-canonical: oversized residues, padded
coefficient lists, non-monic u, deg v >= deg u, and divisors that fail the
Jacobian membership condition.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from .field import FieldElement
from .jacobian import (
    CurveParams,
    DomainParams,
    MumfordDivisor,
    is_valid_divisor,
    validate_curve,
    validate_domain,
)
from .poly import Polynomial

if TYPE_CHECKING:  # pragma: no cover
    from .protocols import Ciphertext, Signature

CIPHERTEXT_MAGIC = b"HECC1"
CIPHERTEXT_VERSION = 1


class FormatError(ValueError):
    """Malformed or non-canonical encoded data."""


def field_width(p: int) -> int:
    """Fixed byte width of one field element: ceil(bits(p)/8)."""
    return (p.bit_length() + 7) // 8


# --- field elements ---


def encode_field_element(x: FieldElement) -> bytes:
    return x.value.to_bytes(field_width(x.p), "big")


def _read_int(data: bytes, off: int, width: int, what: str) -> tuple[int, int]:
    if off + width > len(data):
        raise FormatError(f"truncated payload while reading {what}")
    return int.from_bytes(data[off:off + width], "big"), off + width


def _read_fe(data: bytes, off: int, p: int) -> tuple[int, int]:
    value, off = _read_int(data, off, field_width(p), "field element")
    if value >= p:
        raise FormatError(f"non-canonical field element {value} >= {p}")
    return value, off


def decode_field_element(data: bytes, p: int) -> FieldElement:
    value, off = _read_fe(data, 0, p)
    if off != len(data):
        raise FormatError("trailing bytes after field element")
    return FieldElement(value, p)


# --- polynomials ---


def encode_polynomial(a: Polynomial) -> bytes:
    n = len(a.coeffs)
    if n > 255:
        raise FormatError(f"polynomial has {n} coefficients; the format caps at 255")
    width = field_width(a.p)
    return bytes([n]) + b"".join(c.to_bytes(width, "big") for c in a.coeffs)


def _read_polynomial(data: bytes, off: int, p: int) -> tuple[Polynomial, int]:
    if off >= len(data):
        raise FormatError("truncated payload while reading polynomial length")
    n = data[off]
    off += 1
    coeffs = []
    for _ in range(n):
        value, off = _read_fe(data, off, p)
        coeffs.append(value)
    if coeffs and coeffs[-1] == 0:
        raise FormatError("non-canonical polynomial: leading coefficient is zero")
    return Polynomial._wrap(coeffs, p), off


def decode_polynomial(data: bytes, p: int) -> Polynomial:
    poly, off = _read_polynomial(data, 0, p)
    if off != len(data):
        raise FormatError("trailing bytes after polynomial")
    return poly


# --- divisors ---


def encode_divisor(div: MumfordDivisor, curve: CurveParams) -> bytes:
    if div.u.p != curve.p:
        raise FormatError("divisor modulus does not match the curve")
    return encode_polynomial(div.u) + encode_polynomial(div.v)


def _read_divisor(data: bytes, off: int, curve: CurveParams) -> tuple[MumfordDivisor, int]:
    u, off = _read_polynomial(data, off, curve.p)
    v, off = _read_polynomial(data, off, curve.p)
    if u.is_zero() or not u.is_monic():
        raise FormatError("divisor u polynomial must be monic and nonzero")
    if v.degree >= u.degree:
        raise FormatError("divisor v polynomial must have degree below deg u")
    div = MumfordDivisor(u, v)
    if not is_valid_divisor(div, curve):
        raise FormatError("divisor fails the Jacobian membership condition")
    return div, off


def decode_divisor(data: bytes, curve: CurveParams) -> MumfordDivisor:
    div, off = _read_divisor(data, 0, curve)
    if off != len(data):
        raise FormatError("trailing bytes after divisor")
    return div


# --- keys ---


def scalar_width(dp: DomainParams) -> int:
    return (dp.order.bit_length() + 7) // 8


def encode_secret_key(secret: int, dp: DomainParams) -> bytes:
    if not 1 <= secret < dp.order:
        raise FormatError(f"secret scalar out of range [1, {dp.order - 1}]")
    return secret.to_bytes(scalar_width(dp), "big")


def decode_secret_key(data: bytes, dp: DomainParams) -> int:
    value, off = _read_int(data, 0, scalar_width(dp), "secret scalar")
    if off != len(data):
        raise FormatError("trailing bytes after secret key")
    if not 1 <= value < dp.order:
        raise FormatError(f"secret scalar out of range [1, {dp.order - 1}]")
    return value


def encode_public_key(public: MumfordDivisor, dp: DomainParams) -> bytes:
    return encode_divisor(public, dp.curve)


def decode_public_key(data: bytes, dp: DomainParams) -> MumfordDivisor:
    return decode_divisor(data, dp.curve)


# --- signatures ---


def encode_signature(sig: "Signature", dp: DomainParams) -> bytes:
    if sig.commitment.is_identity:
        raise FormatError("signature commitment must not be the identity")
    if not 1 <= sig.s < dp.order:
        raise FormatError("signature scalar out of range")
    return encode_divisor(sig.commitment, dp.curve) + sig.s.to_bytes(scalar_width(dp), "big")


def decode_signature(data: bytes, dp: DomainParams) -> "Signature":
    from .protocols import Signature

    commitment, off = _read_divisor(data, 0, dp.curve)
    s, off = _read_int(data, off, scalar_width(dp), "signature scalar")
    if off != len(data):
        raise FormatError("trailing bytes after signature")
    if commitment.is_identity:
        raise FormatError("signature commitment must not be the identity")
    if not 1 <= s < dp.order:
        raise FormatError("signature scalar out of range")
    return Signature(commitment=commitment, s=s)


# --- ciphertexts ---


def encode_ciphertext(ct: "Ciphertext", dp: DomainParams) -> bytes:
    if ct.plaintext_length < 0 or ct.plaintext_length >= 1 << 64:
        raise FormatError("plaintext length does not fit the 8-byte header field")
    if len(ct.chunks) >= 1 << 32:
        raise FormatError("chunk count does not fit the 4-byte header field")
    out = [
        CIPHERTEXT_MAGIC,
        bytes([CIPHERTEXT_VERSION]),
        ct.plaintext_length.to_bytes(8, "big"),
        len(ct.chunks).to_bytes(4, "big"),
    ]
    for c1, c2 in ct.chunks:
        out.append(encode_divisor(c1, dp.curve))
        out.append(encode_divisor(c2, dp.curve))
    return b"".join(out)


def decode_ciphertext(data: bytes, dp: DomainParams) -> "Ciphertext":
    from .protocols import Ciphertext

    if data[:5] != CIPHERTEXT_MAGIC:
        raise FormatError("bad ciphertext magic")
    if len(data) < 6 or data[5] != CIPHERTEXT_VERSION:
        raise FormatError("unsupported ciphertext version")
    length, off = _read_int(data, 6, 8, "plaintext length")
    count, off = _read_int(data, off, 4, "chunk count")
    chunks = []
    for _ in range(count):
        c1, off = _read_divisor(data, off, dp.curve)
        c2, off = _read_divisor(data, off, dp.curve)
        chunks.append((c1, c2))
    if off != len(data):
        raise FormatError("trailing bytes after ciphertext")
    return Ciphertext(chunks=chunks, plaintext_length=length)


# --- domain parameter files ---

_DOMAIN_KEYS = ("p", "genus", "f", "h", "R", "r")


def write_domain_file(dp: DomainParams) -> str:
    """Serialize domain parameters as line-oriented "key = value" text.

    p, genus and r are decimal; f and h are comma-separated decimal
    coefficients, constant term first ("0" for the zero polynomial); R is the
    hex divisor encoding.
    """
    def poly_text(a: Polynomial) -> str:
        return ",".join(str(c) for c in a.coeffs) if a.coeffs else "0"

    lines = [
        f"p = {dp.curve.p}",
        f"genus = {dp.curve.genus}",
        f"f = {poly_text(dp.curve.f)}",
        f"h = {poly_text(dp.curve.h)}",
        f"R = {encode_divisor(dp.base, dp.curve).hex()}",
        f"r = {dp.order}",
    ]
    return "\n".join(lines) + "\n"


def read_domain_file(text: str) -> DomainParams:
    """Parse and fully validate a domain parameter file.

    Unknown or repeated keys are rejected; blank lines and lines starting
    with '#' are ignored.  Validation delegates to validate_curve and
    validate_domain, so a file whose r does not annihilate R is refused.
    """
    values: dict[str, str] = {}
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key or not value:
            raise FormatError(f"line {lineno}: expected 'key = value'")
        if key not in _DOMAIN_KEYS:
            raise FormatError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise FormatError(f"line {lineno}: repeated key {key!r}")
        values[key] = value
    for key in _DOMAIN_KEYS:
        if key not in values:
            raise FormatError(f"missing key {key!r}")

    def parse_int(key: str) -> int:
        try:
            return int(values[key])
        except ValueError:
            raise FormatError(f"key {key!r}: not a decimal integer") from None

    p = parse_int("p")
    genus = parse_int("genus")
    if p < 3 or genus < 1:
        raise FormatError("p must be >= 3 and genus >= 1")

    def parse_poly(key: str) -> Polynomial:
        try:
            coeffs = [int(c) for c in values[key].split(",")]
        except ValueError:
            raise FormatError(f"key {key!r}: not a comma-separated integer list") from None
        if any(c < 0 or c >= p for c in coeffs):
            raise FormatError(f"key {key!r}: coefficient out of [0, p)")
        return Polynomial(coeffs, p)

    curve = CurveParams(p=p, genus=genus, f=parse_poly("f"), h=parse_poly("h"))
    validate_curve(curve)
    try:
        base_bytes = bytes.fromhex(values["R"])
    except ValueError:
        raise FormatError("key 'R': not valid hex") from None
    base = decode_divisor(base_bytes, curve)
    dp = DomainParams(curve=curve, base=base, order=parse_int("r"))
    validate_domain(dp)
    return dp


# --- generic kind-tagged dispatch ---

KINDS = (
    "field-element",
    "polynomial",
    "divisor",
    "public-key",
    "secret-key",
    "ciphertext",
    "signature",
    "domain-params",
)


def encode(value, kind: str, context: DomainParams) -> bytes:
    """Encode any protocol artifact by its kind tag."""
    if kind == "field-element":
        return encode_field_element(value)
    if kind == "polynomial":
        return encode_polynomial(value)
    if kind == "divisor":
        return encode_divisor(value, context.curve)
    if kind == "public-key":
        return encode_public_key(value, context)
    if kind == "secret-key":
        return encode_secret_key(value, context)
    if kind == "ciphertext":
        return encode_ciphertext(value, context)
    if kind == "signature":
        return encode_signature(value, context)
    if kind == "domain-params":
        return write_domain_file(value).encode("utf-8")
    raise FormatError(f"unknown artifact kind {kind!r}")


def decode(data: bytes, kind: str, context: DomainParams):
    """Decode any protocol artifact by its kind tag."""
    if kind == "field-element":
        return decode_field_element(data, context.curve.p)
    if kind == "polynomial":
        return decode_polynomial(data, context.curve.p)
    if kind == "divisor":
        return decode_divisor(data, context.curve)
    if kind == "public-key":
        return decode_public_key(data, context)
    if kind == "secret-key":
        return decode_secret_key(data, context)
    if kind == "ciphertext":
        return decode_ciphertext(data, context)
    if kind == "signature":
        return decode_signature(data, context)
    if kind == "domain-params":
        try:
            return read_domain_file(data.decode("utf-8"))
        except UnicodeDecodeError:
            raise FormatError("domain parameter file is not valid UTF-8") from None
    raise FormatError(f"unknown artifact kind {kind!r}")
