"""hecc: a hyperelliptic curve cryptography toolkit.

Jacobian group arithmetic in Mumford representation over odd prime fields,
with Diffie-Hellman key agreement, ElGamal encryption and DSA-style
signatures on top, canonical byte encodings for every artifact, and a
brute-force oracle for small-field verification.
"""

from .field import FieldElement, legendre_symbol, sqrt_mod
from .poly import Polynomial, xgcd
from .jacobian import (
    INFINITY,
    AffinePoint,
    CurveError,
    CurveParams,
    DomainParams,
    ExplicitDivisor,
    FixedBaseMultiplier,
    MumfordDivisor,
    explicit_to_mumford,
    is_on_curve,
    is_reduced,
    is_semi_reduced,
    is_special_point,
    is_valid_divisor,
    jac_add,
    jac_neg,
    mumford_to_explicit,
    opposite_point,
    random_divisor,
    scalar_mul,
    validate_curve,
    validate_domain,
)
from .oracle import (
    EnumeratedGroup,
    ec_chord_tangent_add,
    element_order,
    enumerate_points,
    enumerate_reduced_divisors,
    enumeration_report,
    group_order_bruteforce,
    hasse_weil_interval,
)
from .codec import FormatError, decode, encode, read_domain_file, write_domain_file
from .protocols import (
    Ciphertext,
    InvalidCiphertextError,
    InvalidPeerError,
    KeyPair,
    MessageEncodingError,
    ProtocolError,
    SharedSecret,
    Signature,
    VerifyResult,
    decode_message_block,
    dh_shared,
    elgamal_decrypt_bytes,
    elgamal_decrypt_divisor,
    elgamal_encrypt_bytes,
    elgamal_encrypt_divisor,
    encode_message_block,
    hash_to_int,
    keygen,
    phi,
    sign,
    verify,
)

__version__ = "0.1.0"
