# Copyright 2026 The Octopus Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent reference computations for the constants frozen in the C++ tests.

Run with python3; needs mpmath, scipy and cryptography.
"""
import hashlib
import hmac
import math
import struct

import mpmath
from cryptography.hazmat.primitives.ciphers.aead import AESGCM
from scipy import integrate


def blob(b):
    return struct.pack(">I", len(b)) + b


def int_bytes(x):
    return x.to_bytes((x.bit_length() + 7) // 8, "big") if x else b""


def prf_label(*parts):
    return b"".join(blob(p.encode()) for p in parts)


def prf_eval(seed, label, rng):
    nbits = rng.bit_length()
    nbytes = (nbits + 7) // 8
    stream = b""
    counter = 0
    pos = 0
    while True:
        while len(stream) - pos < nbytes:
            stream += hmac.new(seed, label + struct.pack(">I", counter), hashlib.sha256).digest()
            counter += 1
        buf = bytearray(stream[pos:pos + nbytes])
        pos += nbytes
        if nbits % 8:
            buf[0] &= (1 << (nbits % 8)) - 1
        v = int.from_bytes(buf, "big")
        if v < rng:
            return v


def main():
    print("sha256(abc)", hashlib.sha256(b"abc").hexdigest())
    print("hmac rfc4231 tc2", hmac.new(b"Jefe", b"what do ya want for nothing?", hashlib.sha256).hexdigest())

    key = bytes(range(32))
    nonce = bytes(range(12))
    print("aes-gcm", AESGCM(key).encrypt(nonce, b"octopus relay", b"session").hex())

    seed = bytes(range(32))
    label = prf_label("rc", "alice", "2026-01-01")
    print("prf label", label.hex())
    print("prf 2^61-1", prf_eval(seed, label, 2**61 - 1))
    print("prf 1000", prf_eval(seed, label, 1000))
    print("prf q-ish", prf_eval(seed, label, 2**255 + 95))

    # Paillier with p = 11, q = 13, g = n + 1.
    p, q = 11, 13
    n = p * q
    n2 = n * n
    c = (1 + 42 * n) * pow(5, n, n2) % n2
    print("paillier E(42; 5) mod 143^2", c)
    lam = math.lcm(p - 1, q - 1)
    mu = pow((pow(n + 1, lam, n2) - 1) // n, -1, n)
    print("paillier lambda mu", lam, mu)

    # Pedersen toy group.
    P, g, h = 23, 4, 9
    F = lambda x, r: pow(g, x, P) * pow(h, r, P) % P
    print("pedersen F(3,5) F(0,2) F(3,7)", F(3, 5), F(0, 2), F(3, 7), (F(3, 5) * F(0, 2)) % P)

    # Fiat-Shamir transcript.
    state = blob(b"octopus-test") + blob(b"abc") + blob(int_bytes(12345)) + struct.pack(">IQ", 8, 7)
    print("transcript challenge", int.from_bytes(hashlib.sha256(state).digest()[:16], "big"))

    # Laplace calibration.
    mpmath.mp.dps = 40
    eps, delta = mpmath.mpf("0.7"), mpmath.mpf("1e-4")
    lam = 2 / eps
    t = 2 * (1 - mpmath.sqrt(1 - delta))
    mu = 1 - lam * mpmath.log(t)
    print("laplace(0.7,1e-4) mu lambda", mpmath.nstr(mu, 20), mpmath.nstr(lam, 20))

    def truncated_mean(mu, lam):
        # E[ceil(max(0, X))] by integrating the density against ceil(max(0, x)).
        mu, lam = float(mu), float(lam)
        pdf = lambda x: math.exp(-abs(x - mu) / lam) / (2 * lam)
        total = 0.0
        j = 1
        while True:
            piece, _ = integrate.quad(pdf, j - 1, j, epsabs=1e-14, epsrel=1e-12)
            total += j * piece
            if j > mu and piece < 1e-18:
                break
            j += 1
        return total

    print("truncated mean (0.7,1e-4)", repr(truncated_mean(mu, lam)))
    per_eps, per_delta = mpmath.mpf("0.7") / 5, mpmath.mpf("1e-4") / 5
    lam5 = 2 / per_eps
    t5 = 2 * (1 - mpmath.sqrt(1 - per_delta))
    mu5 = 1 - lam5 * mpmath.log(t5)
    print("defaults per-query mu lambda", mpmath.nstr(mu5, 20), mpmath.nstr(lam5, 20))
    print("defaults expected total (2 types)", repr(2 * truncated_mean(mu5, lam5)))


if __name__ == "__main__":
    main()
