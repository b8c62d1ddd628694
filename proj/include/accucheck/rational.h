// Copyright 2026 The Accucheck Authors.
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

#ifndef ACCUCHECK_RATIONAL_H_
#define ACCUCHECK_RATIONAL_H_

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace accucheck {

// Exact non-negative fraction. Scores are kept exact and only rounded when
// rendered.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double ToDouble() const { return static_cast<double>(num_) / den_; }

  // Decimal rendering with round-half-up at the given number of places.
  std::string ToFixed(int places) const;

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational &a, const Rational &b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational &a, const Rational &b) {
    return !(b < a);
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// A ratio that is undefined when its denominator is zero (rendered "-").
using Ratio = std::optional<Rational>;

inline Ratio MakeRatio(std::int64_t num, std::int64_t den) {
  if (den == 0) return std::nullopt;
  return Rational(num, den);
}

inline std::string Rational::ToFixed(int places) const {
  std::int64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = num_ < 0;
  const __int128 n = negative ? -static_cast<__int128>(num_) : num_;
  const __int128 scaled = (n * scale * 2 + den_) / (2 * den_);
  const auto whole = static_cast<std::int64_t>(scaled / scale);
  const auto frac = static_cast<std::int64_t>(scaled % scale);
  std::string out = (negative && scaled != 0 ? "-" : "") + std::to_string(whole);
  if (places > 0) {
    std::string digits = std::to_string(frac);
    out += "." + std::string(places - digits.size(), '0') + digits;
  }
  return out;
}

inline std::string RenderRatio(const Ratio &r, int places = 3) {
  return r ? r->ToFixed(places) : "-";
}

}  // namespace accucheck

#endif  // ACCUCHECK_RATIONAL_H_
