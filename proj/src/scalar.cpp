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

#include "kbound/scalar.hpp"

#include <cmath>
#include <sstream>

namespace kbound {

std::string_view field_mode_name(FieldMode mode) {
  switch (mode) {
    case FieldMode::kRational:
      return "rational";
    case FieldMode::kGaussianRational:
      return "gaussian_rational";
    case FieldMode::kComplexFloat:
      return "complex_float";
  }
  return "unknown";
}

FieldMode parse_field_mode(std::string_view name) {
  if (name == "rational") return FieldMode::kRational;
  if (name == "gaussian_rational") return FieldMode::kGaussianRational;
  if (name == "complex_float") return FieldMode::kComplexFloat;
  throw PreconditionError("unknown field mode: " + std::string(name));
}

Scalar Scalar::rational(mpq_class q) {
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::gaussian(mpq_class re, mpq_class im) {
  re.canonicalize();
  im.canonicalize();
  return Scalar(Gaussian{std::move(re), std::move(im)});
}

Scalar Scalar::zero(FieldMode mode) { return from_rational(mode, mpq_class(0)); }
Scalar Scalar::one(FieldMode mode) { return from_rational(mode, mpq_class(1)); }

Scalar Scalar::from_rational(FieldMode mode, const mpq_class& q) {
  switch (mode) {
    case FieldMode::kRational:
      return rational(q);
    case FieldMode::kGaussianRational:
      return gaussian(q, mpq_class(0));
    case FieldMode::kComplexFloat:
      return complex({q.get_d(), 0.0});
  }
  return Scalar();
}

FieldMode Scalar::mode() const {
  switch (value_.index()) {
    case 0:
      return FieldMode::kRational;
    case 1:
      return FieldMode::kGaussianRational;
    default:
      return FieldMode::kComplexFloat;
  }
}

void Scalar::require_same_mode(const Scalar& o) const {
  if (value_.index() != o.value_.index()) {
    throw FieldMismatch("cannot mix " + std::string(field_mode_name(mode())) +
                        " and " + std::string(field_mode_name(o.mode())));
  }
}

bool Scalar::is_zero() const {
  switch (value_.index()) {
    case 0:
      return sgn(std::get<0>(value_)) == 0;
    case 1: {
      const auto& g = std::get<1>(value_);
      return sgn(g.re) == 0 && sgn(g.im) == 0;
    }
    default:
      return std::get<2>(value_) == std::complex<double>(0.0, 0.0);
  }
}

Scalar Scalar::conj() const {
  if (value_.index() == 1) {
    const auto& g = std::get<1>(value_);
    return Scalar(Gaussian{g.re, -g.im});
  }
  if (value_.index() == 2) return Scalar(std::conj(std::get<2>(value_)));
  return *this;
}

Scalar Scalar::abs2() const {
  switch (value_.index()) {
    case 0: {
      mpq_class q = std::get<0>(value_) * std::get<0>(value_);
      return Scalar(std::move(q));
    }
    case 1: {
      const auto& g = std::get<1>(value_);
      mpq_class q = g.re * g.re + g.im * g.im;
      return Scalar(Gaussian{std::move(q), mpq_class(0)});
    }
    default:
      return Scalar(std::complex<double>(std::norm(std::get<2>(value_)), 0.0));
  }
}

double Scalar::magnitude() const {
  switch (value_.index()) {
    case 0:
      return std::abs(std::get<0>(value_).get_d());
    case 1: {
      const auto& g = std::get<1>(value_);
      return std::hypot(g.re.get_d(), g.im.get_d());
    }
    default:
      return std::abs(std::get<2>(value_));
  }
}

mpq_class Scalar::real_rational() const {
  switch (value_.index()) {
    case 0:
      return std::get<0>(value_);
    case 1: {
      const auto& g = std::get<1>(value_);
      if (sgn(g.im) != 0) throw PreconditionError("value is not real: " + to_string());
      return g.re;
    }
    default:
      throw FieldMismatch("complex_float value has no exact rational form");
  }
}

const mpq_class& Scalar::as_rational() const {
  if (value_.index() != 0) throw FieldMismatch("expected a rational scalar");
  return std::get<0>(value_);
}

const Gaussian& Scalar::as_gaussian() const {
  if (value_.index() != 1) throw FieldMismatch("expected a gaussian_rational scalar");
  return std::get<1>(value_);
}

std::complex<double> Scalar::to_complex() const {
  switch (value_.index()) {
    case 0:
      return {std::get<0>(value_).get_d(), 0.0};
    case 1: {
      const auto& g = std::get<1>(value_);
      return {g.re.get_d(), g.im.get_d()};
    }
    default:
      return std::get<2>(value_);
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_mode(o);
  switch (value_.index()) {
    case 0:
      std::get<0>(value_) += std::get<0>(o.value_);
      break;
    case 1: {
      auto& g = std::get<1>(value_);
      const auto& h = std::get<1>(o.value_);
      g.re += h.re;
      g.im += h.im;
      break;
    }
    default:
      std::get<2>(value_) += std::get<2>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_mode(o);
  switch (value_.index()) {
    case 0:
      std::get<0>(value_) -= std::get<0>(o.value_);
      break;
    case 1: {
      auto& g = std::get<1>(value_);
      const auto& h = std::get<1>(o.value_);
      g.re -= h.re;
      g.im -= h.im;
      break;
    }
    default:
      std::get<2>(value_) -= std::get<2>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_mode(o);
  switch (value_.index()) {
    case 0:
      std::get<0>(value_) *= std::get<0>(o.value_);
      break;
    case 1: {
      auto& g = std::get<1>(value_);
      const auto& h = std::get<1>(o.value_);
      mpq_class re = g.re * h.re - g.im * h.im;
      mpq_class im = g.re * h.im + g.im * h.re;
      g.re = std::move(re);
      g.im = std::move(im);
      break;
    }
    default:
      std::get<2>(value_) *= std::get<2>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_mode(o);
  if (o.is_zero() && value_.index() != 2) throw PreconditionError("division by zero");
  switch (value_.index()) {
    case 0:
      std::get<0>(value_) /= std::get<0>(o.value_);
      break;
    case 1: {
      auto& g = std::get<1>(value_);
      const auto& h = std::get<1>(o.value_);
      mpq_class den = h.re * h.re + h.im * h.im;
      mpq_class re = (g.re * h.re + g.im * h.im) / den;
      mpq_class im = (g.im * h.re - g.re * h.im) / den;
      g.re = std::move(re);
      g.im = std::move(im);
      break;
    }
    default:
      std::get<2>(value_) /= std::get<2>(o.value_);
  }
  return *this;
}

Scalar Scalar::operator-() const {
  switch (value_.index()) {
    case 0: {
      mpq_class q = -std::get<0>(value_);
      return Scalar(std::move(q));
    }
    case 1: {
      const auto& g = std::get<1>(value_);
      return Scalar(Gaussian{-g.re, -g.im});
    }
    default:
      return Scalar(-std::get<2>(value_));
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  switch (a.value_.index()) {
    case 0:
      return std::get<0>(a.value_) == std::get<0>(b.value_);
    case 1: {
      const auto& g = std::get<1>(a.value_);
      const auto& h = std::get<1>(b.value_);
      return g.re == h.re && g.im == h.im;
    }
    default:
      return std::get<2>(a.value_) == std::get<2>(b.value_);
  }
}

std::string Scalar::to_string() const {
  switch (value_.index()) {
    case 0:
      return rational_to_string(std::get<0>(value_));
    case 1: {
      const auto& g = std::get<1>(value_);
      return "(" + rational_to_string(g.re) + ")+(" + rational_to_string(g.im) + ")i";
    }
    default: {
      std::ostringstream os;
      os.precision(17);
      os << std::get<2>(value_);
      return os.str();
    }
  }
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (start == t.size()) return false;
    for (size_t i = start; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw PreconditionError("malformed rational: '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw PreconditionError("zero denominator in '" + s + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

mpz_class floor_rational(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class ceil_rational(const mpq_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace kbound
