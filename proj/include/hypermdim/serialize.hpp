// Copyright 2026 The hypermdim Authors
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

#include "json.hpp"

#include "hypermdim/circle_class.hpp"
#include "hypermdim/explosion.hpp"
#include "hypermdim/hyperspace.hpp"
#include "hypermdim/sepspan.hpp"
#include "hypermdim/sets.hpp"
#include "hypermdim/system.hpp"
#include "hypermdim/wandering.hpp"

namespace hypermdim {

using json = nlohmann::json;

// Non-finite doubles serialize as null.
json number(double v);

void to_json(json& j, Space space);
void to_json(json& j, const FinitePoint& set);
void to_json(json& j, const ArcPoint& arc);
void to_json(json& j, const SystemSpec& spec);
void from_json(const json& j, SystemSpec& spec);
json pool_to_json(const Pool& pool);

void to_json(json& j, const SepSpanResult& r);
void to_json(json& j, const EntropyEstimate& e);
void to_json(json& j, const EntropyRow& row);
void to_json(json& j, const EntropyCurve& curve);

void to_json(json& j, const SubsetVerification& v);
void to_json(json& j, const SubsetCertificate& c);
void to_json(json& j, const WanderingCheck& c);
void to_json(json& j, const WanderingResult& r);
void to_json(json& j, const EmbedConfig& cfg);
void to_json(json& j, const SymbolBlock& block);
void to_json(json& j, const ConjugacyReport& r);
void to_json(json& j, const GrowthReport& r);

void to_json(json& j, const RotationNumber& r);
void to_json(json& j, const IdentityPowerReport& r);
void to_json(json& j, const MinimalityEvidence& e);
void to_json(json& j, const WanderingWitness& w);
void to_json(json& j, const ClassifyOptions& o);
void to_json(json& j, const MdimVerdict& v);

}  // namespace hypermdim
