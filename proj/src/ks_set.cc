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

#include "kstele/ks_set.h"

#include <cctype>
#include <fstream>
#include <sstream>

namespace kstele {

std::ostream &operator<<(std::ostream &out, const Occurrence &occ) {
    return out << "(S" << occ.basis << ", slot " << occ.slot << ")";
}

bool Basis::is_orthogonal() const {
    for (size_t a = 0; a < 4; a++) {
        for (size_t b = a + 1; b < 4; b++) {
            if (dot(vectors[a], vectors[b]) != 0) {
                return false;
            }
        }
    }
    return true;
}

KsSet::KsSet(std::vector<Basis> bases) : bases_(std::move(bases)) {
    if (bases_.empty() || bases_.size() > MAX_BASES) {
        throw std::invalid_argument(
            "A vector set needs between 1 and " + std::to_string(MAX_BASES) + " bases, got " +
            std::to_string(bases_.size()) + ".");
    }
    slot_rays_.reserve(bases_.size());
    for (size_t k = 0; k < bases_.size(); k++) {
        std::array<size_t, 4> ids{};
        for (size_t s = 0; s < 4; s++) {
            CanonicalVec c = canonicalize(bases_[k].vectors[s]);
            auto [it, inserted] = ray_ids_.try_emplace(c, rays_.size());
            if (inserted) {
                rays_.push_back(c);
                occurrences_.emplace_back();
            }
            occurrences_[it->second].push_back(Occurrence{static_cast<int>(k + 1), static_cast<int>(s + 1)});
            ids[s] = it->second;
        }
        slot_rays_.push_back(ids);
    }
}

const Basis &KsSet::basis(int index) const {
    if (index < 1 || static_cast<size_t>(index) > bases_.size()) {
        throw std::out_of_range("Basis index " + std::to_string(index) + " out of range.");
    }
    return bases_[index - 1];
}

const IntVec4 &KsSet::vector_at(Occurrence occ) const {
    if (occ.slot < 1 || occ.slot > 4) {
        throw std::out_of_range("Slot index " + std::to_string(occ.slot) + " out of range.");
    }
    return basis(occ.basis).vectors[occ.slot - 1];
}

std::optional<size_t> KsSet::find_ray(const CanonicalVec &v) const {
    auto it = ray_ids_.find(v);
    if (it == ray_ids_.end()) {
        return std::nullopt;
    }
    return it->second;
}

size_t KsSet::ray_id(const CanonicalVec &v) const {
    auto id = find_ray(v);
    if (!id.has_value()) {
        throw std::out_of_range("Ray " + v.str() + " is not part of the set.");
    }
    return *id;
}

size_t KsSet::ray_at(int basis, int slot) const {
    vector_at(Occurrence{basis, slot});
    return slot_rays_[basis - 1][slot - 1];
}

KsSet KsSet::restricted(const std::vector<int> &basis_indices) const {
    std::vector<Basis> kept;
    kept.reserve(basis_indices.size());
    for (int k : basis_indices) {
        kept.push_back(basis(k));
    }
    return KsSet(std::move(kept));
}

KsSet KsSet::without_basis(int index) const {
    std::vector<int> keep;
    for (int k = 1; k <= static_cast<int>(bases_.size()); k++) {
        if (k != index) {
            keep.push_back(k);
        }
    }
    return restricted(keep);
}

const KsSet &cabello_set() {
    static const KsSet set({
        Basis{{IntVec4(0, 0, 0, 1), IntVec4(0, 0, 1, 0), IntVec4(1, 1, 0, 0), IntVec4(1, -1, 0, 0)}},
        Basis{{IntVec4(0, 0, 0, 1), IntVec4(0, 1, 0, 0), IntVec4(1, 0, 1, 0), IntVec4(1, 0, -1, 0)}},
        Basis{{IntVec4(1, -1, 1, -1), IntVec4(1, -1, -1, 1), IntVec4(1, 1, 0, 0), IntVec4(0, 0, 1, 1)}},
        Basis{{IntVec4(1, -1, 1, -1), IntVec4(1, 1, 1, 1), IntVec4(1, 0, -1, 0), IntVec4(0, 1, 0, -1)}},
        Basis{{IntVec4(0, 0, 1, 0), IntVec4(0, 1, 0, 0), IntVec4(1, 0, 0, 1), IntVec4(1, 0, 0, -1)}},
        Basis{{IntVec4(1, -1, -1, 1), IntVec4(1, 1, 1, 1), IntVec4(1, 0, 0, -1), IntVec4(0, 1, -1, 0)}},
        Basis{{IntVec4(1, 1, -1, 1), IntVec4(1, 1, 1, -1), IntVec4(1, -1, 0, 0), IntVec4(0, 0, 1, 1)}},
        Basis{{IntVec4(1, 1, -1, 1), IntVec4(-1, 1, 1, 1), IntVec4(1, 0, 1, 0), IntVec4(0, 1, 0, -1)}},
        Basis{{IntVec4(1, 1, 1, -1), IntVec4(-1, 1, 1, 1), IntVec4(1, 0, 0, 1), IntVec4(0, 1, -1, 0)}},
    });
    return set;
}

KsSet standard_basis_set() {
    return KsSet({Basis{{IntVec4(1, 0, 0, 0), IntVec4(0, 1, 0, 0), IntVec4(0, 0, 1, 0), IntVec4(0, 0, 0, 1)}}});
}

bool ValidationReport::all_orthogonal() const {
    for (const auto &b : bases) {
        if (!b.orthogonal) {
            return false;
        }
    }
    return true;
}

bool ValidationReport::all_occurrences_equal(size_t n) const {
    for (const auto &[ray, count] : occurrence_counts) {
        if (count != n) {
            return false;
        }
    }
    return true;
}

ValidationReport validate_ks_set(const KsSet &set) {
    ValidationReport report;
    for (size_t k = 0; k < set.num_bases(); k++) {
        BasisCheck check{static_cast<int>(k + 1), true, {}};
        const auto &vs = set.bases()[k].vectors;
        for (int a = 0; a < 4; a++) {
            for (int b = a + 1; b < 4; b++) {
                int64_t d = dot(vs[a], vs[b]);
                if (d != 0) {
                    check.orthogonal = false;
                    check.violations.push_back(PairViolation{a + 1, b + 1, d});
                }
            }
        }
        report.bases.push_back(std::move(check));
    }
    report.distinct_vectors = set.num_rays();
    for (size_t r = 0; r < set.num_rays(); r++) {
        report.occurrence_counts.emplace_back(set.rays()[r], set.occurrences(r).size());
    }
    return report;
}

ParseError::ParseError(size_t line, size_t column, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {
}

namespace {

struct LineParser {
    std::string_view text;
    size_t line;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string &message) const {
        throw ParseError(line, pos + 1, message);
    }
    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            pos++;
        }
    }
    bool at_end() {
        skip_space();
        return pos >= text.size();
    }
    void expect(char c) {
        skip_space();
        if (pos >= text.size()) {
            fail(std::string("expected '") + c + "' but the line ended");
        }
        if (text[pos] != c) {
            fail(std::string("expected '") + c + "' but got '" + text[pos] + "'");
        }
        pos++;
    }
    int integer() {
        skip_space();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            pos++;
        }
        size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            pos++;
        }
        if (pos == digits) {
            pos = start;
            fail("expected an integer");
        }
        if (pos - digits > 6) {
            pos = start;
            fail("integer too large");
        }
        return std::stoi(std::string(text.substr(start, pos - start)));
    }
    IntVec4 vector() {
        skip_space();
        size_t start = pos;
        expect('(');
        std::array<int, 4> coords{};
        for (size_t k = 0; k < 4; k++) {
            if (k > 0) {
                expect(',');
            }
            coords[k] = integer();
        }
        expect(')');
        try {
            return IntVec4(coords);
        } catch (const std::invalid_argument &ex) {
            pos = start;
            fail(ex.what());
        }
    }
};

}  // namespace

KsSet parse_ks_set(std::string_view text) {
    std::vector<Basis> bases;
    size_t line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        line_no++;
        start = end + 1;

        LineParser p{line, line_no};
        if (p.at_end() || line[p.pos] == '#') {
            continue;
        }
        std::vector<IntVec4> vs;
        while (!p.at_end()) {
            if (vs.size() == 4) {
                p.fail("more than four vectors on one line");
            }
            vs.push_back(p.vector());
        }
        if (vs.size() != 4) {
            p.fail("expected four vectors but got " + std::to_string(vs.size()));
        }
        if (bases.size() == MAX_BASES) {
            throw ParseError(line_no, 1, "more than " + std::to_string(MAX_BASES) + " bases");
        }
        bases.push_back(Basis{{vs[0], vs[1], vs[2], vs[3]}});
    }
    if (bases.empty()) {
        throw ParseError(line_no, 1, "no bases found");
    }
    return KsSet(std::move(bases));
}

KsSet load_ks_set(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("Failed to open vector-set file '" + path + "'.");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_ks_set(ss.str());
}

std::string format_ks_set(const KsSet &set) {
    std::string out;
    for (const auto &b : set.bases()) {
        for (size_t s = 0; s < 4; s++) {
            if (s > 0) {
                out += ' ';
            }
            out += b.vectors[s].str();
        }
        out += '\n';
    }
    return out;
}

}  // namespace kstele
