// Copyright 2026 The kstele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KSTELE_EXACT_PROB_H
#define KSTELE_EXACT_PROB_H

#include <boost/rational.hpp>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace kstele {

using Rational = boost::rational<int64_t>;

/// "num/den" rendering used in every JSON document.
std::string rational_str(const Rational &r);
/// Accepts "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// A probability: an exact rational in [0, 1], kept in lowest terms.
class ExactProb {
   public:
    ExactProb() = default;
    /// Throws std::invalid_argument if the value is outside [0, 1] or den == 0.
    ExactProb(int64_t num, int64_t den);
    explicit ExactProb(const Rational &value);

    static ExactProb zero() {
        return ExactProb();
    }
    static ExactProb one() {
        return ExactProb(1, 1);
    }
    static ExactProb parse(std::string_view text) {
        return ExactProb(parse_rational(text));
    }

    int64_t numerator() const {
        return value_.numerator();
    }
    int64_t denominator() const {
        return value_.denominator();
    }
    const Rational &value() const {
        return value_;
    }
    double to_double() const;
    std::string str() const {
        return rational_str(value_);
    }

    bool operator==(const ExactProb &other) const {
        return value_ == other.value_;
    }
    std::strong_ordering operator<=>(const ExactProb &other) const;

   private:
    Rational value_{0};
};

inline ExactProb operator*(const ExactProb &a, const ExactProb &b) {
    return ExactProb(a.value() * b.value());
}

std::ostream &operator<<(std::ostream &out, const ExactProb &p);

}  // namespace kstele

#endif
