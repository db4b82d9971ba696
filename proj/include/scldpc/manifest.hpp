#ifndef SCLDPC_MANIFEST_HPP
#define SCLDPC_MANIFEST_HPP

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace scldpc {

inline constexpr const char* kToolName = "scldpc";
inline constexpr const char* kToolVersion = "0.1.0";

inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(errc::io_failure, "cannot open '" + path + "' for checksumming");
    std::ostringstream buf;
    buf << in.rdbuf();
    return fnv1a64(buf.str());
}

inline std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// Write the full contents to a sibling temp file, then rename into place,
// so failures never leave a partial artifact.
inline void atomic_write_file(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) raise(errc::io_failure, "cannot open '" + tmp + "' for writing");
        out << contents;
        if (!out) raise(errc::io_failure, "write failed for '" + tmp + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) raise(errc::io_failure, "cannot rename '" + tmp + "' to '" + path + "': " + ec.message());
}

// Plain-text key: value run record; one per command invocation.
class Manifest {
  public:
    Manifest(std::string command, std::string args) {
        add("tool", std::string(kToolName) + " " + kToolVersion);
        add("command", std::move(command));
        add("args", std::move(args));
    }

    void add(std::string key, std::string value) { entries_.emplace_back(std::move(key), std::move(value)); }

    void add_input(const std::string& path) { add("input", path + " fnv1a64:" + hex64(fnv1a64_file(path))); }

    void add_output(const std::string& path, const std::string& contents) {
        add("output", path + " fnv1a64:" + hex64(fnv1a64(contents)));
    }

    std::string to_text() const {
        std::string out;
        for (const auto& [k, v] : entries_) out += k + ": " + v + "\n";
        return out;
    }

    void write(const std::string& path) const { atomic_write_file(path, to_text()); }

  private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

} // namespace scldpc

#endif
