/*
   Copyright 2026 The frobkit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FROBKIT_CACHE_HPP
#define FROBKIT_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>

#ifdef __unix__
#include <sys/file.h>
#include <unistd.h>
#include <fcntl.h>
#endif

namespace frobkit {

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

// Content-addressed cache of computed Groebner bases. Keys and payloads are
// the canonical serializations produced by the groebner module; the cache is
// advisory only, so unreadable or mismatched entries are silently ignored.
// An in-process map is always active; a directory backend is attached by the
// CLI unless --no-cache is given.
class GroebnerCache {
   public:
    static GroebnerCache& instance() {
        static GroebnerCache c;
        return c;
    }

    void set_directory(std::optional<std::filesystem::path> dir) {
        std::lock_guard<std::mutex> lock(mu_);
        dir_ = std::move(dir);
        if (dir_) {
            std::error_code ec;
            std::filesystem::create_directories(*dir_, ec);
            if (ec) dir_.reset();
        }
    }

    std::optional<std::filesystem::path> directory() const {
        std::lock_guard<std::mutex> lock(mu_);
        return dir_;
    }

    void clear_memory() {
        std::lock_guard<std::mutex> lock(mu_);
        mem_.clear();
    }

    std::optional<std::string> lookup(const std::string& key) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = mem_.find(key);
            if (it != mem_.end()) return it->second;
        }
        auto dir = directory();
        if (!dir) return std::nullopt;
        std::filesystem::path file = *dir / (hex64(fnv1a64(key)) + ".gb");
        std::ifstream in(file, std::ios::binary);
        if (!in) return std::nullopt;
        std::ostringstream buf;
        buf << in.rdbuf();
        std::string content = buf.str();
        auto sep = content.find("\n----\n");
        if (sep == std::string::npos) return std::nullopt;
        if (content.substr(0, sep) != key) return std::nullopt;  // hash collision or stale
        std::string payload = content.substr(sep + 6);
        std::lock_guard<std::mutex> lock(mu_);
        mem_[key] = payload;
        return payload;
    }

    void store(const std::string& key, const std::string& payload) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            mem_[key] = payload;
        }
        auto dir = directory();
        if (!dir) return;
        std::filesystem::path file = *dir / (hex64(fnv1a64(key)) + ".gb");
        std::filesystem::path tmp = file;
        tmp += ".tmp." + std::to_string(
#ifdef __unix__
            static_cast<long>(::getpid())
#else
            0L
#endif
        );
#ifdef __unix__
        // Advisory lock so concurrent invocations never interleave writes.
        std::filesystem::path lockfile = *dir / ".lock";
        int lfd = ::open(lockfile.c_str(), O_CREAT | O_RDWR, 0644);
        if (lfd >= 0) ::flock(lfd, LOCK_EX);
#endif
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (out) {
                out << key << "\n----\n" << payload;
                out.flush();
            }
        }
        std::error_code ec;
        std::filesystem::rename(tmp, file, ec);
        if (ec) std::filesystem::remove(tmp, ec);
#ifdef __unix__
        if (lfd >= 0) {
            ::flock(lfd, LOCK_UN);
            ::close(lfd);
        }
#endif
    }

   private:
    GroebnerCache() = default;
    mutable std::mutex mu_;
    std::unordered_map<std::string, std::string> mem_;
    std::optional<std::filesystem::path> dir_;
};

}  // namespace frobkit

#endif
