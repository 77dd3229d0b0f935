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

#include "kstele/serialize.h"

#include <stdexcept>

namespace kstele {

Json vector_json(const IntVec4 &v) {
    return Json::array({v[0], v[1], v[2], v[3]});
}

namespace {

Json occurrence_counts_json(const std::vector<std::pair<CanonicalVec, size_t>> &counts) {
    Json out = Json::array();
    for (const auto &[ray, count] : counts) {
        out.push_back(Json{{"vector", vector_json(ray.vec())}, {"count", count}});
    }
    return out;
}

IntVec4 vector_from_json(const Json &j) {
    if (!j.is_array() || j.size() != 4) {
        throw std::invalid_argument("A vector must be an array of four integers.");
    }
    return IntVec4(j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>());
}

}  // namespace

Json to_json(const ValidationReport &report) {
    Json bases = Json::array();
    for (const auto &b : report.bases) {
        Json violations = Json::array();
        for (const auto &v : b.violations) {
            violations.push_back(Json{{"slots", Json::array({v.slot_a, v.slot_b})}, {"dot", v.dot}});
        }
        bases.push_back(Json{{"basis", b.basis}, {"orthogonal", b.orthogonal}, {"violations", violations}});
    }
    return Json{
        {"ok", report.ok()},
        {"bases", bases},
        {"distinctVectors", report.distinct_vectors},
        {"occurrenceCounts", occurrence_counts_json(report.occurrence_counts)},
    };
}

Json to_json(const ParityCertificate &cert) {
    return Json{
        {"basisCount", cert.basis_count},
        {"occurrenceCounts", occurrence_counts_json(cert.occurrence_counts)},
    };
}

Json search_json(const KsSet &set, const std::vector<NcAssignment> &found, const std::optional<ParityCertificate> &cert) {
    Json vectors = Json::array();
    for (const auto &r : set.rays()) {
        vectors.push_back(vector_json(r.vec()));
    }
    Json satisfying = Json::array();
    for (const auto &a : found) {
        satisfying.push_back(a.values);
    }
    return Json{
        {"vectors", vectors},
        {"satisfying", satisfying},
        {"parityCertificate", cert.has_value() ? to_json(*cert) : Json(nullptr)},
    };
}

Json to_json(const ContextualityResult &result) {
    Json mismatched = Json::array();
    for (const auto &v : result.mismatched) {
        mismatched.push_back(vector_json(v.vec()));
    }
    return Json{
        {"defect", result.defect},
        {"witness", result.witness.choices},
        {"mismatchedVectors", mismatched},
    };
}

Json to_json(const DeterministicStrategy &strategy) {
    const KsSet &set = strategy.set();
    Json bob = Json::array();
    for (size_t r = 0; r < set.num_rays(); r++) {
        bob.push_back(Json{{"vector", vector_json(set.rays()[r].vec())}, {"value", strategy.bob_table().values[r]}});
    }
    return Json{{"alice", strategy.alice_choices()}, {"bob", bob}};
}

Json to_json(const BestClassical &best) {
    return Json{
        {"winProb", best.win_prob.str()},
        {"minLosses", best.min_losses},
        {"strategy", to_json(best.strategy)},
    };
}

Json to_json(const JointDistribution &d) {
    Json probs = Json::array();
    for (const auto &row : d.probs) {
        Json r = Json::array();
        for (const auto &p : row) {
            r.push_back(p.str());
        }
        probs.push_back(r);
    }
    return Json{{"aliceBasis", d.alice_basis}, {"bobBasis", d.bob_basis}, {"probs", probs}};
}

Json to_json(const Transcript &t) {
    Json rounds = Json::array();
    for (const auto &r : t.rounds) {
        Json j{
            {"i", r.index},
            {"set", r.question.alice_set},
            {"slot", r.question.bob_slot},
            {"alice", r.alice.bits},
            {"bob", r.bob.bit},
            {"won", r.won},
            {"bitsAB", r.bits_alice_to_bob},
            {"bitsBA", r.bits_bob_to_alice},
        };
        if (!r.error.empty()) {
            j["error"] = r.error;
        }
        rounds.push_back(std::move(j));
    }
    return Json{
        {"seed", t.seed},
        {"strategy", t.strategy},
        {"rounds", rounds},
        {"summary",
         Json{
             {"rounds", t.summary.rounds},
             {"wins", t.summary.wins},
             {"winRate", t.summary.win_rate.str()},
             {"meanBits", rational_str(t.summary.mean_bits)},
         }},
    };
}

Json to_json(const std::vector<hvt2d::GridRow> &rows) {
    Json out = Json::array();
    for (const auto &r : rows) {
        out.push_back(Json{
            {"cosine", r.cosine},
            {"analytic", r.analytic},
            {"born", r.born},
            {"mcEstimate", r.mc_estimate},
            {"stdError", r.std_error},
        });
    }
    return out;
}

DeterministicStrategy deterministic_from_json(const KsSet &set, const Json &doc) {
    std::vector<int> alice = doc.at("alice").get<std::vector<int>>();
    NcAssignment bob{std::vector<uint8_t>(set.num_rays(), 0)};
    std::vector<bool> seen(set.num_rays(), false);
    for (const auto &entry : doc.at("bob")) {
        CanonicalVec v = canonicalize(vector_from_json(entry.at("vector")));
        auto id = set.find_ray(v);
        if (!id.has_value()) {
            throw std::invalid_argument("Bob's table names " + v.str() + ", which is not in the set.");
        }
        if (seen[*id]) {
            throw std::invalid_argument("Bob's table lists " + v.str() + " twice.");
        }
        seen[*id] = true;
        int value = entry.at("value").get<int>();
        if (value != 0 && value != 1) {
            throw std::invalid_argument("Bob's table values must be 0 or 1.");
        }
        bob.values[*id] = static_cast<uint8_t>(value);
    }
    for (size_t r = 0; r < seen.size(); r++) {
        if (!seen[r]) {
            throw std::invalid_argument("Bob's table has no value for " + set.rays()[r].str() + ".");
        }
    }
    return DeterministicStrategy(set, std::move(alice), std::move(bob));
}

MixtureStrategy mixture_from_json(const KsSet &set, const Json &doc) {
    std::vector<MixtureStrategy::Component> components;
    for (const auto &entry : doc.at("components")) {
        components.push_back(MixtureStrategy::Component{
            ExactProb::parse(entry.at("weight").get<std::string>()),
            deterministic_from_json(set, entry.at("strategy")),
        });
    }
    return MixtureStrategy(std::move(components));
}

}  // namespace kstele
