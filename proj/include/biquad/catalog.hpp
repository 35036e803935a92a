#pragma once

#include "biquad/presentation.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace biquad {

struct UnknownName : std::domain_error {
    explicit UnknownName(const std::string& name)
        : std::domain_error("no catalog entry named '" + name + "'") {}
};

/// Directory holding the built-in presentation files.  The compiled-in
/// default can be overridden with the BIQUAD_CATALOG_DIR environment
/// variable.
std::string catalog_dir();

/// Names of all built-in entries, sorted.
std::vector<std::string> catalog_names();

/// Raw file contents of an entry.  Throws UnknownName.
std::string catalog_text(const std::string& name);

/// Parsed entry in canonical descending orientation.  Throws UnknownName.
AlgebraPresentation catalog_get(const std::string& name);

}  // namespace biquad
