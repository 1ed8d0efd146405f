#ifndef SREES_INSTANCE_HPP
#define SREES_INSTANCE_HPP

#include "srees/oracle.hpp"

namespace srees {

// Thrown when the input fails validation; carries the report for diagnostics.
struct ValidationFailure : std::runtime_error {
    ValidationReport report;
    explicit ValidationFailure(ValidationReport r)
        : std::runtime_error(r.message), report(std::move(r)) {}
};

// The full pipeline state for one input ideal: validation, canonical form,
// scroll-coordinate presentation, scroll data and Rees generators.
struct Instance {
    PresentationData input;
    ValidationReport input_report;
    CanonicalForm cf;
    PresentationData pd;          // scroll coordinates
    std::vector<BiPoly> delta;    // signed minors of pd
    ScrollStructure st;
    ReesGenerators rg;
    SymbolicPowerGens spg;

    Instance() : cf(FieldSpec::default_field(), 3) {}

    int m() const { return pd.m; }
    int n() const { return pd.n; }
    int d() const { return pd.d; }
};

Instance build_instance(const PresentationData& input);

}  // namespace srees

#endif
