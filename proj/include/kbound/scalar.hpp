// Copyright 2026 The kbound Authors.
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

#include <complex>
#include <string>
#include <string_view>
#include <variant>

#include "kbound/error.hpp"

namespace kbound {

enum class FieldMode { kRational, kGaussianRational, kComplexFloat };

std::string_view field_mode_name(FieldMode mode);
FieldMode parse_field_mode(std::string_view name);

inline bool is_exact(FieldMode mode) { return mode != FieldMode::kComplexFloat; }

// Element of Q(i) with rational real and imaginary parts.
struct Gaussian {
  mpq_class re;
  mpq_class im;
};

// A field element tagged with its field mode. Rationals are kept canonical
// (lowest terms, positive denominator). Arithmetic between different modes
// throws FieldMismatch.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}

  static Scalar rational(mpq_class q);
  static Scalar integer(long v) { return rational(mpq_class(v)); }
  static Scalar gaussian(mpq_class re, mpq_class im);
  static Scalar complex(std::complex<double> z) { return Scalar(z); }
  static Scalar zero(FieldMode mode);
  static Scalar one(FieldMode mode);
  // Embeds an exact rational into `mode` (as a float in complex_float mode).
  static Scalar from_rational(FieldMode mode, const mpq_class& q);

  FieldMode mode() const;

  // Exact zero test; float values compare against 0.0 literally. Callers
  // that need tolerance use magnitude() against a scale.
  bool is_zero() const;

  Scalar conj() const;
  // |x|^2 in the same field mode (imaginary part zero).
  Scalar abs2() const;
  double magnitude() const;

  // Exact real value. Requires an exact mode and zero imaginary part.
  mpq_class real_rational() const;
  const mpq_class& as_rational() const;
  const Gaussian& as_gaussian() const;
  std::complex<double> to_complex() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  // Exact equality in exact modes, bitwise equality of doubles otherwise.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  explicit Scalar(Gaussian g) : value_(std::move(g)) {}
  explicit Scalar(std::complex<double> z) : value_(z) {}

  void require_same_mode(const Scalar& o) const;

  std::variant<mpq_class, Gaussian, std::complex<double>> value_;
};

// Parses "p", "p/q" or "-p/q" into a canonical rational.
mpq_class parse_rational(std::string_view text);
std::string rational_to_string(const mpq_class& q);

// Smallest integer >= q.
mpz_class ceil_rational(const mpq_class& q);
mpz_class floor_rational(const mpq_class& q);

}  // namespace kbound
