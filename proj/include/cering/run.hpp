#ifndef CERING_RUN_HPP
#define CERING_RUN_HPP

#include <set>

#include "cering/report.hpp"

namespace cering {

struct RunConfig {
    std::string input;                  // construction name or spec-file path
    CeMethod method = CeMethod::Auto;
    uint64_t seed = 1;
    std::set<std::string> skip;         // cores, invariant, local, minimal-ideals, essential
    size_t jobs = 1;
    std::vector<std::string> generators;  // quotient command
    std::string family;                 // scan command
};

/// Resolves a construction name (exterior:<field>:<n>, group:<field>:q8,
/// group:<field>:@<cayley-file>) or a spec-file path. "diffmat" is not
/// an Algebra and is handled by the commands that accept it.
AlgebraPtr resolve_input(const std::string& input);

/// Validates the algebra and emits its spec document (so constructions
/// can be exported to files).
Json cmd_build(const RunConfig& cfg);

/// Full structure + essentiality report. For input "diffmat" emits the
/// randomized check report of the differential matrix ring instead.
Json cmd_report(const RunConfig& cfg);

/// Quotient by the two-sided ideal generated by the given element
/// expressions, then the quotient's report.
Json cmd_quotient(const RunConfig& cfg);

/// One report row per family member: exterior:<field>:<maxn>,
/// groups:@<directory-of-cayley-files>, quotients:<input> (all
/// principal two-sided quotients). Rows are canonically ordered and
/// independent of the worker count.
Json cmd_scan(const RunConfig& cfg);

}  // namespace cering

#endif
