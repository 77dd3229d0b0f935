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

#ifndef KSTELE_SERIALIZE_H
#define KSTELE_SERIALIZE_H

#include <optional>
#include <vector>

#include "json.hpp"
#include "kstele/coloring.h"
#include "kstele/harness.h"
#include "kstele/hvt2d.h"
#include "kstele/ks_set.h"
#include "kstele/quantum.h"
#include "kstele/strategies.h"

namespace kstele {

/// Keys are emitted in insertion order so documents are byte-stable.
using Json = nlohmann::ordered_json;

Json vector_json(const IntVec4 &v);

Json to_json(const ValidationReport &report);
Json to_json(const ParityCertificate &cert);
/// {"vectors": [...], "satisfying": [[bit per vector], ...], "parityCertificate": {...} | null}
Json search_json(const KsSet &set, const std::vector<NcAssignment> &found, const std::optional<ParityCertificate> &cert);
/// {"defect": int, "witness": [slot per basis], "mismatchedVectors": [[a,b,c,d], ...]}
Json to_json(const ContextualityResult &result);
/// {"alice": [slot per basis], "bob": [{"vector": [a,b,c,d], "value": bit}, ...]}
Json to_json(const DeterministicStrategy &strategy);
Json to_json(const BestClassical &best);
/// {"aliceBasis": int, "bobBasis": int, "probs": [["num/den" x4] x4]}
Json to_json(const JointDistribution &d);
Json to_json(const Transcript &t);
Json to_json(const std::vector<hvt2d::GridRow> &rows);

/// Inverse of to_json(DeterministicStrategy). Throws std::invalid_argument
/// (or nlohmann::json::exception) on malformed documents.
DeterministicStrategy deterministic_from_json(const KsSet &set, const Json &doc);
/// {"components": [{"weight": "num/den", "strategy": <deterministic>}, ...]}
MixtureStrategy mixture_from_json(const KsSet &set, const Json &doc);

}  // namespace kstele

#endif
