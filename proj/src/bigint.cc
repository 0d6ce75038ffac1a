// Copyright 2026 The Octopus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "octopus/bigint.hpp"

#include <stdexcept>

namespace octopus {

size_t bit_length(const BigInt& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

size_t byte_length(const BigInt& x) { return (bit_length(x) + 7) / 8; }

Bytes to_bytes_be(const BigInt& x, size_t width) {
  if (x < 0) throw std::domain_error("negative integer cannot be serialized");
  size_t len = byte_length(x);
  if (width != 0 && len > width) throw std::length_error("integer exceeds fixed width");
  size_t out_len = width != 0 ? width : len;
  Bytes out(out_len, 0);
  if (len > 0) {
    size_t written = 0;
    mpz_export(out.data() + (out_len - len), &written, 1, 1, 1, 0, x.get_mpz_t());
  }
  return out;
}

BigInt from_bytes_be(ByteSpan data) {
  BigInt x;
  if (!data.empty()) mpz_import(x.get_mpz_t(), data.size(), 1, 1, 1, 0, data.data());
  return x;
}

void write_int(ByteWriter& w, const BigInt& x, size_t width) { w.put_blob(to_bytes_be(x, width)); }

BigInt read_int(ByteReader& r) {
  uint32_t n = r.u32();
  return from_bytes_be(r.bytes(n));
}

BigInt powm(const BigInt& base, const BigInt& exp, const BigInt& m) {
  BigInt out;
  if (exp < 0) {
    BigInt inv = invert(base, m);
    BigInt e = -exp;
    mpz_powm(out.get_mpz_t(), inv.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  } else {
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  }
  return out;
}

BigInt invert(const BigInt& a, const BigInt& m) {
  BigInt out;
  if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::domain_error("value is not invertible");
  }
  return out;
}

BigInt mod(const BigInt& a, const BigInt& m) {
  BigInt out;
  mpz_mod(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return out;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

bool is_probable_prime(const BigInt& x, int reps) {
  return mpz_probab_prime_p(x.get_mpz_t(), reps) != 0;
}

}  // namespace octopus
