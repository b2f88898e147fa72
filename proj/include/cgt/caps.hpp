#pragma once

#include <cstdint>
#include <string>

namespace cgt {

// Resource limits for the whole library. Exceeding a cap is always an
// explicit error (CapExceeded), never silent truncation. All values can be
// overridden from a JSON config file, see load_caps().
struct Caps {
    std::uint64_t max_degree = 4096;          // permutation degree
    std::uint64_t max_group_order = 1000000;  // element enumeration / class partition
    std::uint64_t max_points = 10000000;      // module / orbit point spaces
    std::uint64_t max_field = 531441;         // field size p^k (3^12)
    std::uint64_t dixon_max_classes = 40;
    std::uint64_t dixon_max_order = 100000;
    std::uint64_t hall_budget = 100000;       // randomized Hall search steps
};

// Reads overrides from a JSON object file, e.g. {"max_degree": 8192}.
// Unknown keys are rejected.
Caps load_caps(const std::string& path);

}  // namespace cgt
