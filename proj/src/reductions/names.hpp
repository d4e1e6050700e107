#pragma once

#include <cstdint>
#include <set>
#include <string>

namespace ltlsync::detail {

/// Hands out names not used before, suffixing "_0", "_1", ... on clashes.
class NamePool {
public:
    void reserve(const std::string& name) { used_.insert(name); }
    std::string fresh(const std::string& base) {
        std::string name = base;
        for (int i = 0; used_.count(name) != 0; ++i) name = base + "_" + std::to_string(i);
        used_.insert(name);
        return name;
    }

private:
    std::set<std::string> used_;
};

inline std::string fnv1a(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 15];
    return out;
}

}  // namespace ltlsync::detail
