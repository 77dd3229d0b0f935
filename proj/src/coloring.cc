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

#include "kstele/coloring.h"

#include <string>

namespace kstele {

bool satisfies(const NcAssignment &a, const KsSet &set) {
    if (a.values.size() != set.num_rays()) {
        throw std::invalid_argument(
            "Assignment covers " + std::to_string(a.values.size()) + " vectors but the set has " +
            std::to_string(set.num_rays()) + ".");
    }
    for (size_t k = 1; k <= set.num_bases(); k++) {
        int ones = 0;
        for (int s = 1; s <= 4; s++) {
            ones += a.values[set.ray_at(static_cast<int>(k), s)] == 1;
        }
        if (ones != 1) {
            return false;
        }
    }
    return true;
}

namespace {

struct NcSearch {
    const KsSet &set;
    std::vector<int> ones;
    std::vector<int> unassigned;
    std::vector<uint8_t> values;
    std::vector<NcAssignment> found;

    explicit NcSearch(const KsSet &s)
        : set(s), ones(s.num_bases(), 0), unassigned(s.num_bases(), 4), values(s.num_rays(), 0) {
    }

    // Applies value v to ray r; returns false if some basis became infeasible.
    // Always fully applied so that `undo` is symmetric.
    bool apply(size_t r, uint8_t v) {
        bool feasible = true;
        for (const auto &occ : set.occurrences(r)) {
            size_t b = occ.basis - 1;
            ones[b] += v;
            unassigned[b]--;
            if (ones[b] > 1 || (unassigned[b] == 0 && ones[b] == 0)) {
                feasible = false;
            }
        }
        return feasible;
    }

    void undo(size_t r, uint8_t v) {
        for (const auto &occ : set.occurrences(r)) {
            size_t b = occ.basis - 1;
            ones[b] -= v;
            unassigned[b]++;
        }
    }

    void run(size_t r) {
        if (r == set.num_rays()) {
            found.push_back(NcAssignment{values});
            return;
        }
        for (uint8_t v : {uint8_t{0}, uint8_t{1}}) {
            values[r] = v;
            if (apply(r, v)) {
                run(r + 1);
            }
            undo(r, v);
        }
        values[r] = 0;
    }
};

}  // namespace

std::vector<NcAssignment> search_noncontextual(const KsSet &set) {
    if (set.num_rays() > MAX_SEARCH_RAYS) {
        throw SearchTooLarge(
            "Refusing to enumerate 2^" + std::to_string(set.num_rays()) + " assignments (limit 2^" +
            std::to_string(MAX_SEARCH_RAYS) + ").");
    }
    NcSearch search(set);
    search.run(0);
    return std::move(search.found);
}

std::optional<ParityCertificate> parity_certificate(const KsSet &set) {
    if (set.num_bases() % 2 == 0) {
        return std::nullopt;
    }
    ParityCertificate cert{set.num_bases(), {}};
    for (size_t r = 0; r < set.num_rays(); r++) {
        size_t n = set.occurrences(r).size();
        if (n % 2 != 0) {
            return std::nullopt;
        }
        cert.occurrence_counts.emplace_back(set.rays()[r], n);
    }
    return cert;
}

std::vector<size_t> mismatched_rays(const KsSet &set, const CtxAssignment &a) {
    if (a.choices.size() != set.num_bases()) {
        throw std::invalid_argument("Contextual assignment does not have one choice per basis.");
    }
    std::vector<size_t> out;
    for (size_t r = 0; r < set.num_rays(); r++) {
        const auto &occs = set.occurrences(r);
        uint8_t first = a.value(occs.front());
        for (size_t k = 1; k < occs.size(); k++) {
            if (a.value(occs[k]) != first) {
                out.push_back(r);
                break;
            }
        }
    }
    return out;
}

std::optional<ContextualityResult> min_contextuality_where(
    const KsSet &set, const std::function<bool(const CtxAssignment &)> &accept) {
    size_t num_bases = set.num_bases();
    if (num_bases > MAX_CONTEXT_BASES) {
        throw SearchTooLarge(
            "Refusing to enumerate 4^" + std::to_string(num_bases) + " contextual assignments (limit 4^" +
            std::to_string(MAX_CONTEXT_BASES) + ").");
    }

    // Each repeated ray compares its two (basis, slot) positions.
    struct Pair {
        size_t basis_a;
        int slot_a;
        size_t basis_b;
        int slot_b;
    };
    std::vector<Pair> pairs;
    for (size_t r = 0; r < set.num_rays(); r++) {
        const auto &occs = set.occurrences(r);
        if (occs.size() > 2) {
            throw std::invalid_argument(
                "min_contextuality needs every vector to occur once or twice; " + set.rays()[r].str() + " occurs " +
                std::to_string(occs.size()) + " times.");
        }
        if (occs.size() == 2) {
            pairs.push_back(Pair{size_t(occs[0].basis - 1), occs[0].slot, size_t(occs[1].basis - 1), occs[1].slot});
        }
    }

    std::optional<ContextualityResult> best;
    CtxAssignment current{std::vector<int>(num_bases, 1)};
    while (true) {
        size_t defect = 0;
        for (const auto &p : pairs) {
            defect += (current.choices[p.basis_a] == p.slot_a) != (current.choices[p.basis_b] == p.slot_b);
        }
        if ((!best.has_value() || defect < best->defect) && (!accept || accept(current))) {
            best = ContextualityResult{defect, current, {}};
            if (defect == 0) {
                break;
            }
        }

        // Odometer step; the last basis is the least significant digit.
        size_t k = num_bases;
        while (k > 0 && current.choices[k - 1] == 4) {
            current.choices[k - 1] = 1;
            k--;
        }
        if (k == 0) {
            break;
        }
        current.choices[k - 1]++;
    }

    if (best.has_value()) {
        for (size_t r : mismatched_rays(set, best->witness)) {
            best->mismatched.push_back(set.rays()[r]);
        }
    }
    return best;
}

ContextualityResult min_contextuality(const KsSet &set) {
    return *min_contextuality_where(set, {});
}

}  // namespace kstele
