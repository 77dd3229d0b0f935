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

#include "kstele/exact_prob.h"

#include <charconv>
#include <stdexcept>

namespace kstele {

namespace {

int64_t parse_int(std::string_view text, std::string_view whole) {
    int64_t v = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("Not a rational number: '" + std::string(whole) + "'.");
    }
    return v;
}

}  // namespace

std::string rational_str(const Rational &r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
    size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text, text));
    }
    int64_t num = parse_int(text.substr(0, slash), text);
    int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 0) {
        throw std::invalid_argument("Zero denominator in '" + std::string(text) + "'.");
    }
    return Rational(num, den);
}

ExactProb::ExactProb(int64_t num, int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("Probability with zero denominator.");
    }
    *this = ExactProb(Rational(num, den));
}

ExactProb::ExactProb(const Rational &value) : value_(value) {
    if (value_ < 0 || value_ > 1) {
        throw std::invalid_argument("Probability " + rational_str(value_) + " is outside [0, 1].");
    }
}

double ExactProb::to_double() const {
    return boost::rational_cast<double>(value_);
}

std::strong_ordering ExactProb::operator<=>(const ExactProb &other) const {
    if (value_ < other.value_) {
        return std::strong_ordering::less;
    }
    if (other.value_ < value_) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::ostream &operator<<(std::ostream &out, const ExactProb &p) {
    return out << p.str();
}

}  // namespace kstele
