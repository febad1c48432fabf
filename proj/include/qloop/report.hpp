#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qloop {

struct CheckResult {
    std::string check_id;
    std::string anchor;
    int window = 0;
    bool pass = false;
    std::string detail;
};

using Report = std::vector<CheckResult>;

inline bool all_pass(const Report& r)
{
    for (const auto& c : r)
        if (!c.pass) return false;
    return !r.empty();
}

struct MissingDrinfeldData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WindowTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AllPointsSingular : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qloop
