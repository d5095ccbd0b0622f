#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace octmf {

uint64_t fnv1a64(std::string_view s);

// Content-addressed file cache.  Entries are keyed by a hash of
// (operation, canonical input, code version); unreadable entries are treated
// as missing and recomputed.
struct Workspace {
    std::string dir;
    bool enabled = true;

    // env OCTMF_WORKSPACE, else <tmp>/octmf-cache
    static Workspace standard(bool enabled = true);

    std::string entry_path(const std::string& op, const std::string& input) const;
    std::optional<std::string> lookup(const std::string& op, const std::string& input) const;
    void store(const std::string& op, const std::string& input, const std::string& payload) const;
};

}  // namespace octmf
