#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sclogic/equivalence.hpp"

namespace scl {

// Catalog record: an identity plus the semantics it is claimed to hold under
// and a short provenance tag.
struct LawEntry {
    Equation eq;
    SemanticsKind designated;
    std::string source;
};

// The shipped catalog. Every entry passes validate_law under its designated
// semantics with the default budget; `laws` in the CLI runs exactly this.
const std::vector<LawEntry>& law_catalog();

// The catalog as text, one record per line:
//   name | lhs | rhs | free|mem|static | source
// '#' starts a comment.
const std::string& law_catalog_text();

// Parses records in the catalog text format (also used for external files).
std::vector<LawEntry> parse_law_records(std::string_view text);

// Named axiom systems over the sequential signature, usable as finite-model
// axiom sets: "eqfscl", "eqmscl", "eqsscl".
const AxiomSet& axiom_set(const std::string& name);

}  // namespace scl
