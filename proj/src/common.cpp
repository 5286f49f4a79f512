#include "gerst/common.hpp"

#include <cstdlib>

namespace gerst::limits {

namespace {

constexpr std::size_t kDefaultMaxEntries = 100'000'000;

std::size_t env_or_default() {
    if (const char* s = std::getenv("GERST_MAX_ENTRIES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultMaxEntries;
}

std::optional<std::size_t>& override_slot() {
    static std::optional<std::size_t> slot;
    return slot;
}

}  // namespace

std::size_t max_entries() {
    if (override_slot()) return *override_slot();
    static const std::size_t from_env = env_or_default();
    return from_env;
}

void set_max_entries(std::optional<std::size_t> value) { override_slot() = value; }

void check_entries(std::size_t needed, const std::string& what) {
    const std::size_t limit = max_entries();
    if (needed > limit) {
        throw ResourceLimitError("entry guard exceeded: " + what + " needs " +
                                 std::to_string(needed) + " entries, limit is " +
                                 std::to_string(limit) +
                                 " (override with GERST_MAX_ENTRIES)");
    }
}

}  // namespace gerst::limits
