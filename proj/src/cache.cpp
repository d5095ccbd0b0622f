#include "octmf/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace octmf {

static const char* kVersionTag = "octmf-0.1.0";

uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

Workspace Workspace::standard(bool enabled) {
    Workspace w;
    w.enabled = enabled;
    if (const char* env = std::getenv("OCTMF_WORKSPACE"))
        w.dir = env;
    else
        w.dir = (std::filesystem::temp_directory_path() / "octmf-cache").string();
    return w;
}

std::string Workspace::entry_path(const std::string& op, const std::string& input) const {
    std::ostringstream key;
    key << kVersionTag << "\x1f" << op << "\x1f" << input;
    uint64_t h = fnv1a64(key.str());
    std::ostringstream name;
    name << op << "-" << std::hex << h << ".json";
    return (std::filesystem::path(dir) / name.str()).string();
}

std::optional<std::string> Workspace::lookup(const std::string& op, const std::string& input) const {
    if (!enabled) return std::nullopt;
    std::ifstream in(entry_path(op, input));
    if (!in) return std::nullopt;
    std::ostringstream body;
    body << in.rdbuf();
    if (!in.good() && !in.eof()) return std::nullopt;
    std::string s = body.str();
    if (s.empty()) return std::nullopt;
    return s;
}

void Workspace::store(const std::string& op, const std::string& input,
                      const std::string& payload) const {
    if (!enabled) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;
    std::string path = entry_path(op, input);
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << payload;
        if (!out.good()) return;
    }
    std::filesystem::rename(tmp, path, ec);
}

}  // namespace octmf
