"""Hashing, key derivation and authenticated symmetric encryption.

The cipher is a SHA-256 keystream XOR with a truncated-SHA-256 tag. It is
built from a single hash primitive on purpose: byte-exact test vectors stay
portable, and real AEAD strength is explicitly not a goal here.
"""

from __future__ import annotations

import hashlib
import hmac
from dataclasses import dataclass

from .algebra import FieldElement
from .pairing import GtElement
from .errors import AuthenticationFailed

KDF_TAG = b"GKA-KDF-v1"
CREDENTIAL_KDF_TAG = b"CRED-KDF-v1"
NONCE_SIZE = 16
TAG_SIZE = 16


def hash_bytes(data: bytes) -> bytes:
    return hashlib.sha256(data).digest()


@dataclass(frozen=True)
class SymmetricKey:
    """32-byte key. weak marks a key derived from the trivial pairing value."""

    key: bytes
    weak: bool = False

    def __post_init__(self):
        if len(self.key) != 32:
            raise ValueError("keys are 32 bytes")

    def __repr__(self):
        # never show key material in logs or tracebacks
        return f"SymmetricKey(<32 bytes>, weak={self.weak})"


def kdf(z: GtElement, context: bytes) -> SymmetricKey:
    """Derive a key from a pairing value, bound to a context string."""
    digest = hash_bytes(KDF_TAG + context + z.encode())
    return SymmetricKey(digest, weak=z.is_one)


def kdf_from_secret(s: FieldElement, context: bytes) -> SymmetricKey:
    """Derive a key from a recovered group secret (credential updates)."""
    return SymmetricKey(hash_bytes(CREDENTIAL_KDF_TAG + context + s.encode()))


@dataclass(frozen=True)
class Ciphertext:
    nonce: bytes
    body: bytes
    tag: bytes

    def to_bytes(self) -> bytes:
        return self.nonce + self.body + self.tag

    @classmethod
    def from_bytes(cls, data: bytes) -> "Ciphertext":
        if len(data) < NONCE_SIZE + TAG_SIZE:
            raise AuthenticationFailed("ciphertext too short")
        return cls(
            nonce=data[:NONCE_SIZE],
            body=data[NONCE_SIZE:-TAG_SIZE],
            tag=data[-TAG_SIZE:],
        )


def _keystream(key: bytes, nonce: bytes, length: int) -> bytes:
    out = bytearray()
    counter = 0
    while len(out) < length:
        out += hashlib.sha256(key + b"enc" + nonce + counter.to_bytes(8, "big")).digest()
        counter += 1
    return bytes(out[:length])


def _tag(key: bytes, nonce: bytes, body: bytes) -> bytes:
    return hashlib.sha256(key + b"mac" + nonce + body).digest()[:TAG_SIZE]


def encrypt(key: SymmetricKey, plaintext: bytes, rng) -> Ciphertext:
    nonce = rng.getrandbits(8 * NONCE_SIZE).to_bytes(NONCE_SIZE, "big")
    body = bytes(a ^ b for a, b in zip(plaintext, _keystream(key.key, nonce, len(plaintext))))
    return Ciphertext(nonce=nonce, body=body, tag=_tag(key.key, nonce, body))


def decrypt(key: SymmetricKey, ciphertext: Ciphertext) -> bytes:
    expected = _tag(key.key, ciphertext.nonce, ciphertext.body)
    if not hmac.compare_digest(expected, ciphertext.tag):
        raise AuthenticationFailed("ciphertext tag mismatch")
    stream = _keystream(key.key, ciphertext.nonce, len(ciphertext.body))
    return bytes(a ^ b for a, b in zip(ciphertext.body, stream))
