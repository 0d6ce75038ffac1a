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

#pragma once

#include <gmpxx.h>

#include <cstddef>

#include "octopus/bytes.hpp"

namespace octopus {

using BigInt = mpz_class;

size_t bit_length(const BigInt& x);
size_t byte_length(const BigInt& x);

// Big-endian unsigned magnitude. With width > 0 the output is left-padded to
// exactly `width` bytes; throws std::length_error if x does not fit.
Bytes to_bytes_be(const BigInt& x, size_t width = 0);
BigInt from_bytes_be(ByteSpan data);

// Wire encoding: u32 length prefix, then the magnitude (optionally padded).
void write_int(ByteWriter& w, const BigInt& x, size_t width = 0);
BigInt read_int(ByteReader& r);
// Size in bytes of write_int(x, width) for a value that fits in `width`.
constexpr size_t encoded_int_size(size_t width) { return 4 + width; }

BigInt powm(const BigInt& base, const BigInt& exp, const BigInt& mod);
// Throws std::domain_error when a is not invertible modulo m.
BigInt invert(const BigInt& a, const BigInt& m);
// Non-negative residue of a modulo m.
BigInt mod(const BigInt& a, const BigInt& m);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
bool is_probable_prime(const BigInt& x, int reps = 30);

}  // namespace octopus
