#ifndef SREES_IO_HPP
#define SREES_IO_HPP

#include <json.hpp>

#include "srees/instance.hpp"

namespace srees {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input document:
//   {"field": {"prime": p} | "rational",
//    "input": {"matrix": [["poly", ...], ...]}
//           | {"pair": {"sigma": s, "tau": t, "F1": "...", "F2": "..."}}}
// When `field` is absent, `fallback` is used.
PresentationData parse_input_document(const nlohmann::json& doc, FieldSpec fallback);

// Optional explicit field in the document (nullopt when absent).
std::optional<FieldSpec> document_field(const nlohmann::json& doc);

nlohmann::json field_to_json(const FieldSpec& f);
nlohmann::json presentation_to_json(const PresentationData& pd);
nlohmann::json input_document(const PresentationData& pd);

nlohmann::json validation_to_json(const ValidationReport& rep);
nlohmann::json canonical_to_json(const Instance& inst);
nlohmann::json tuples_to_json(const std::vector<EligibleTuple>& ts);
nlohmann::json rees_to_json(const Instance& inst);
nlohmann::json fiber_to_json(const Instance& inst);
nlohmann::json betti_to_json(const BettiTable& t);
nlohmann::json invariants_to_json(const Instance& inst);

}  // namespace srees

#endif
