#pragma once

// JSON emission for the command line tool. All documents carry a
// schema_version field and are byte-deterministic for fixed inputs.

#include "polyfree/algebra.hpp"
#include "polyfree/arrangements.hpp"
#include "polyfree/groups.hpp"
#include "polyfree/intlin.hpp"
#include "polyfree/invariants.hpp"
#include "polyfree/maps.hpp"

#include "json.hpp"

namespace polyfree::cli {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

/// Integers that fit in 64 bits are emitted as JSON numbers, larger ones as
/// decimal strings.
Json json_int(const Int& v);

Json to_json(const AlgebraSpec& a);
Json element_to_json(const AlgebraSpec& a, const LieElement& x);
Json lattice_to_json(const Lattice& l);
Json profile_to_json(const AlgebraSpec& a, const CentralizerProfile& p);
Json incidence_to_json(const IncidenceReport& r);
Json map_to_json(const LieMap& f);
Json hom_report_to_json(const LieMap& f, const HomReport& r);
Json consistency_to_json(const AlgebraSpec& a, const ConsistencyReport& r);
Json mccool_report_to_json(const McCoolReport& r);

std::string dump(const Json& j);

}  // namespace polyfree::cli
