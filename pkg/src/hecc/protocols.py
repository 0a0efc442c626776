"""Key agreement, encryption and signatures over a Jacobian group.

Three schemes share one domain: a curve, a base divisor R and its prime
order r.

* Diffie-Hellman: secret a, public P = aR; the shared secret is aQ = abR.
* ElGamal: ephemeral a per message, C1 = aR, C2 = M + aQ; decryption is
  M = C2 - bC1.  A byte-level wrapper splits messages into fixed blocks and
  embeds each block as a weight-1 divisor by x-coordinate search.
* DSA-style signatures: commitment Q = kR and s = k^-1 (H(m) + a phi(Q))
  mod r, verified by checking v1 R + v2 P = Q with v1 = s^-1 H(m) and
  v2 = s^-1 phi(Q).

H is SHA-256 truncated to its leftmost 160 bits.  phi maps a divisor to the
integer value of its canonical byte encoding reduced mod r (0 for the
identity).  Nonces are derived deterministically from the secret key and the
message hash by default; a randomized mode is available.

Scalar randomness comes from caller-supplied providers with a
random.Random-style ``randrange``; passing None selects the os-backed
``secrets`` source.  Every scalar drawn lies in [1, r-1].
"""

from __future__ import annotations

import hashlib
import secrets
import warnings
from dataclasses import dataclass

from . import codec
from .field import sqrt_mod
from .jacobian import (
    CurveParams,
    DomainParams,
    FixedBaseMultiplier,
    MumfordDivisor,
    is_valid_divisor,
    jac_add,
    jac_neg,
    scalar_mul,
)
from .poly import Polynomial


class ProtocolError(ValueError):
    """A protocol-level precondition was violated."""


class InvalidPeerError(ProtocolError):
    """A peer public element failed the membership or order check."""


class InvalidCiphertextError(ProtocolError):
    """A ciphertext component is not a valid group element or is inconsistent."""


class MessageEncodingError(ProtocolError):
    """A byte block could not be embedded into, or read back from, the group."""


# --- artifact types ---


@dataclass(frozen=True)
class KeyPair:
    """Secret scalar in [1, r-1] and its public divisor secret * R."""

    secret: int
    public: MumfordDivisor


@dataclass(frozen=True)
class SharedSecret:
    """The agreed group element abR."""

    divisor: MumfordDivisor


@dataclass(frozen=True)
class Ciphertext:
    """Ordered (C1, C2) chunk pairs plus the exact plaintext byte count."""

    chunks: list[tuple[MumfordDivisor, MumfordDivisor]]
    plaintext_length: int


@dataclass(frozen=True)
class Signature:
    """Nonce commitment Q = kR and the response scalar s."""

    commitment: MumfordDivisor
    s: int


@dataclass(frozen=True)
class VerifyResult:
    """Outcome of signature verification; every failure carries a reason."""

    accepted: bool
    reason: str = "ok"

    def __bool__(self) -> bool:
        return self.accepted


# --- scalars and shared helpers ---


def _rand_scalar(order: int, rng) -> int:
    """Uniform scalar in [1, order - 1]; rng=None uses the secrets module."""
    if order < 3:
        raise ProtocolError(f"group order {order} leaves no usable scalar range")
    if rng is None:
        return 1 + secrets.randbelow(order - 1)
    return rng.randrange(1, order)


def _require_member(div: MumfordDivisor, curve: CurveParams, exc, what: str) -> None:
    if not is_valid_divisor(div, curve):
        raise exc(f"{what} is not a valid element of the Jacobian")


# --- key generation and Diffie-Hellman ---


def keygen(dp: DomainParams, rng=None) -> KeyPair:
    """Fresh keypair: uniform secret in [1, r-1], public = secret * R."""
    secret = _rand_scalar(dp.order, rng)
    return KeyPair(secret=secret, public=scalar_mul(secret, dp.base, dp.curve))


def dh_shared(own: KeyPair, peer_public: MumfordDivisor, dp: DomainParams) -> SharedSecret:
    """Common secret own.secret * peer_public, after vetting the peer element.

    The peer divisor must be a group member whose order divides r; the
    identity passes both checks but yields a constant secret, so it is
    accepted with a warning.
    """
    _require_member(peer_public, dp.curve, InvalidPeerError, "peer public key")
    if not scalar_mul(dp.order, peer_public, dp.curve).is_identity:
        raise InvalidPeerError("peer public key order does not divide r")
    if peer_public.is_identity:
        warnings.warn("peer public key is the identity; shared secret is degenerate",
                      stacklevel=2)
    return SharedSecret(divisor=scalar_mul(own.secret, peer_public, dp.curve))


# --- ElGamal on group elements ---


def elgamal_encrypt_divisor(
    message: MumfordDivisor,
    peer_public: MumfordDivisor,
    dp: DomainParams,
    rng=None,
) -> tuple[MumfordDivisor, MumfordDivisor]:
    """One ElGamal pair (C1, C2) = (aR, M + aQ) with a fresh ephemeral a."""
    _require_member(message, dp.curve, ProtocolError, "message divisor")
    _require_member(peer_public, dp.curve, ProtocolError, "recipient public key")
    ephemeral = _rand_scalar(dp.order, rng)
    c1 = scalar_mul(ephemeral, dp.base, dp.curve)
    c2 = jac_add(message, scalar_mul(ephemeral, peer_public, dp.curve), dp.curve)
    return c1, c2


def elgamal_decrypt_divisor(
    chunk: tuple[MumfordDivisor, MumfordDivisor],
    own: KeyPair,
    dp: DomainParams,
) -> MumfordDivisor:
    """Recover M = C2 - b * C1."""
    c1, c2 = chunk
    _require_member(c1, dp.curve, InvalidCiphertextError, "ciphertext component C1")
    _require_member(c2, dp.curve, InvalidCiphertextError, "ciphertext component C2")
    mask = scalar_mul(own.secret, c1, dp.curve)
    return jac_add(c2, jac_neg(mask, dp.curve), dp.curve)


# --- byte blocks as group elements ---

BLOCK_TRIAL_BITS = 16
MIN_FIELD_BITS = 32


def message_block_size(curve: CurveParams) -> int:
    """Bytes carried per block: field width minus 3 (two trial bytes plus
    headroom so every candidate x stays below p)."""
    if curve.p.bit_length() < MIN_FIELD_BITS:
        raise MessageEncodingError(
            f"field too small for byte embedding (need >= {MIN_FIELD_BITS} bits)")
    return codec.field_width(curve.p) - 3


def encode_message_block(block: bytes, curve: CurveParams) -> MumfordDivisor:
    """Embed a byte block as the weight-1 divisor of a curve point.

    The candidate x = block * 2^16 + j is stepped through j = 0, 1, ... until
    the fiber quadratic y^2 + h(x) y = f(x) has a root; each j succeeds with
    probability about 1/2, so failure of all 2^16 trials is negligible.  y is
    the canonical root of the completed square.
    """
    limit = message_block_size(curve)
    if len(block) > limit:
        raise MessageEncodingError(f"block of {len(block)} bytes exceeds limit {limit}")
    p = curve.p
    f, h = curve.f, curve.h
    inv2 = pow(2, -1, p)
    base_x = int.from_bytes(block, "big") << BLOCK_TRIAL_BITS
    for j in range(1 << BLOCK_TRIAL_BITS):
        x = base_x + j
        hx = h(x)
        disc = (hx * hx + 4 * f(x)) % p
        s = sqrt_mod(disc, p)
        if s is None:
            continue
        y = (s - hx) * inv2 % p
        return MumfordDivisor(
            Polynomial([-x, 1], p),
            Polynomial([y], p),
        )
    raise MessageEncodingError("no embeddable x found within 2^16 trials")


def decode_message_block(div: MumfordDivisor, curve: CurveParams, length: int) -> bytes:
    """Invert the block embedding: drop the 16 trial bits of the x-coordinate."""
    if div.u.degree != 1:
        raise MessageEncodingError("block divisor must have weight 1")
    x = (-div.u[0]) % curve.p
    value = x >> BLOCK_TRIAL_BITS
    if value >> (8 * length):
        raise MessageEncodingError(f"embedded value does not fit {length} bytes")
    return value.to_bytes(length, "big")


# --- ElGamal on byte strings ---

_COMB_THRESHOLD = 32  # chunks; below this, plain double-and-add is cheaper


def elgamal_encrypt_bytes(
    message: bytes,
    peer_public: MumfordDivisor,
    dp: DomainParams,
    rng=None,
) -> Ciphertext:
    """Chunked ElGamal: fixed-size blocks, an independent ephemeral scalar
    per chunk (reusing one scalar would link plaintext differences)."""
    _require_member(peer_public, dp.curve, ProtocolError, "recipient public key")
    block = message_block_size(dp.curve)
    blocks = [message[i:i + block] for i in range(0, len(message), block)]
    if len(blocks) >= _COMB_THRESHOLD:
        mul_base = FixedBaseMultiplier(dp.base, dp.curve, dp.order - 1).mul
        mul_peer = FixedBaseMultiplier(peer_public, dp.curve, dp.order - 1).mul
    else:
        mul_base = lambda n: scalar_mul(n, dp.base, dp.curve)  # noqa: E731
        mul_peer = lambda n: scalar_mul(n, peer_public, dp.curve)  # noqa: E731
    chunks = []
    for piece in blocks:
        embedded = encode_message_block(piece, dp.curve)
        ephemeral = _rand_scalar(dp.order, rng)
        c1 = mul_base(ephemeral)
        c2 = jac_add(embedded, mul_peer(ephemeral), dp.curve)
        chunks.append((c1, c2))
    return Ciphertext(chunks=chunks, plaintext_length=len(message))


def elgamal_decrypt_bytes(ct: Ciphertext, own: KeyPair, dp: DomainParams) -> bytes:
    """Invert elgamal_encrypt_bytes; length bookkeeping recovers the final
    partial block exactly."""
    block = message_block_size(dp.curve)
    n = len(ct.chunks)
    length = ct.plaintext_length
    if n == 0:
        if length != 0:
            raise InvalidCiphertextError("chunk count inconsistent with plaintext length")
        return b""
    if not (block * (n - 1) < length <= block * n):
        raise InvalidCiphertextError("chunk count inconsistent with plaintext length")
    out = bytearray()
    for i, chunk in enumerate(ct.chunks):
        piece_len = block if i < n - 1 else length - block * (n - 1)
        recovered = elgamal_decrypt_divisor(chunk, own, dp)
        out += decode_message_block(recovered, dp.curve, piece_len)
    return bytes(out)


# --- hashing and the divisor-to-integer map ---


def hash_to_int(message: bytes) -> int:
    """SHA-256 truncated to its leftmost 160 bits, as a big-endian integer."""
    return int.from_bytes(hashlib.sha256(message).digest()[:20], "big")


def phi(div: MumfordDivisor, dp: DomainParams) -> int:
    """Deterministic map from group elements to [0, r): the canonical divisor
    encoding read as a big-endian integer, reduced mod r.  The identity maps
    to 0 by convention."""
    if div.is_identity:
        return 0
    return int.from_bytes(codec.encode_divisor(div, dp.curve), "big") % dp.order


# --- signatures ---


def _derive_nonce(secret: int, message: bytes, dp: DomainParams, counter: int) -> int:
    material = codec.encode_secret_key(secret, dp) + hashlib.sha256(message).digest()
    if counter:
        material += counter.to_bytes(4, "big")
    digest = hashlib.sha256(material).digest()
    return 1 + int.from_bytes(digest, "big") % (dp.order - 1)


def sign(
    message: bytes,
    own: KeyPair,
    dp: DomainParams,
    nonce_mode: str = "deterministic",
    rng=None,
    k_override: int | None = None,
) -> Signature:
    """Sign a message: Q = kR, s = k^-1 (H(m) + a phi(Q)) mod r.

    Deterministic mode derives k from the encoded secret key and the message
    hash, so equal inputs give byte-identical signatures; randomized mode
    draws k from the provider.  Degenerate draws (phi(Q) = 0 or s = 0) are
    resampled.  k_override pins the nonce and is for tests only: reusing a
    nonce across two messages reveals the secret key.
    """
    if nonce_mode not in ("deterministic", "randomized"):
        raise ProtocolError(f"unknown nonce mode {nonce_mode!r}")
    r = dp.order
    if r < 3:
        raise ProtocolError(f"group order {r} leaves no usable nonce range")
    digest = hash_to_int(message)
    attempt = 0
    while True:
        if k_override is not None:
            k = k_override
        elif nonce_mode == "deterministic":
            k = _derive_nonce(own.secret, message, dp, attempt)
        else:
            k = _rand_scalar(r, rng)
        commitment = scalar_mul(k, dp.base, dp.curve)
        phi_q = phi(commitment, dp)
        s = pow(k, -1, r) * (digest + own.secret * phi_q) % r
        if (phi_q == 0 or s == 0) and k_override is None:
            attempt += 1
            continue
        return Signature(commitment=commitment, s=s)


def verify(
    message: bytes,
    sig: Signature,
    signer_public: MumfordDivisor,
    dp: DomainParams,
) -> VerifyResult:
    """Check v1 R + v2 P = Q with v1 = s^-1 H(m), v2 = s^-1 phi(Q), mod r.

    Never raises: malformed inputs come back as a rejection with a reason.
    """
    r = dp.order
    if not isinstance(sig.s, int) or not 1 <= sig.s < r:
        return VerifyResult(False, "signature scalar out of range")
    if sig.commitment.is_identity:
        return VerifyResult(False, "signature commitment is the identity")
    if sig.commitment.u.p != dp.curve.p or not is_valid_divisor(sig.commitment, dp.curve):
        return VerifyResult(False, "signature commitment is not a group element")
    if signer_public.u.p != dp.curve.p or not is_valid_divisor(signer_public, dp.curve):
        return VerifyResult(False, "signer public key is not a group element")
    s_inv = pow(sig.s, -1, r)
    v1 = s_inv * hash_to_int(message) % r
    v2 = s_inv * phi(sig.commitment, dp) % r
    check = jac_add(
        scalar_mul(v1, dp.base, dp.curve),
        scalar_mul(v2, signer_public, dp.curve),
        dp.curve,
    )
    if check != sig.commitment:
        return VerifyResult(False, "verification equation mismatch")
    return VerifyResult(True)
