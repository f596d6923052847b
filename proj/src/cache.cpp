#include "isc/bench.hpp"

#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <fcntl.h>
#include <fstream>
#include <unistd.h>

namespace isc {

nlohmann::json to_json(const CacheEntry& e)
{
    return {{"graph_key", e.graph_key},
            {"quantity", e.quantity},
            {"value", e.value},
            {"method", e.method},
            {"created_at", e.created_at}};
}

CacheEntry cache_entry_from_json(const nlohmann::json& j)
{
    CacheEntry e;
    e.graph_key = j.at("graph_key").get<std::string>();
    e.quantity = j.at("quantity").get<std::string>();
    e.value = j.at("value").get<int>();
    e.method = j.at("method").get<std::string>();
    e.created_at = j.at("created_at").get<std::string>();
    return e;
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::optional<std::string> cache_path(const std::optional<std::string>& flag)
{
    if (flag && !flag->empty()) return flag;
    if (const char* env = std::getenv("ISC_CACHE"); env && *env) return std::string(env);
    return std::nullopt;
}

ResultCache::ResultCache(std::string path) : path_(std::move(path))
{
    load();
}

void ResultCache::load()
{
    std::ifstream in(path_);
    if (!in) {
        // A missing file is just an empty cache.
        if (errno != ENOENT) warnings_.push_back("cache " + path_ + " unreadable; continuing without it");
        return;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            CacheEntry e = cache_entry_from_json(nlohmann::json::parse(line));
            entries_[{e.graph_key, e.quantity, e.method}] = std::move(e);
        } catch (const std::exception&) {
            warnings_.push_back("cache " + path_ + ": skipped bad line " + std::to_string(lineno));
        }
    }
}

std::optional<CacheEntry> ResultCache::lookup(const std::string& graph_key, const std::string& quantity,
                                              const std::string& method) const
{
    std::lock_guard lock(mutex_);
    auto it = entries_.find({graph_key, quantity, method});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ResultCache::store(const CacheEntry& entry)
{
    std::lock_guard lock(mutex_);
    entries_[{entry.graph_key, entry.quantity, entry.method}] = entry;
    const std::string line = to_json(entry).dump() + "\n";
    const int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
    if (fd < 0) {
        warnings_.push_back("cache " + path_ + " not writable: " + std::strerror(errno));
        return;
    }
    // A line that does not end with a newline was cut short; start ours on a fresh line.
    std::string payload = line;
    if (::lseek(fd, 0, SEEK_END) > 0) {
        char last = '\n';
        const int rd = ::open(path_.c_str(), O_RDONLY | O_CLOEXEC);
        if (rd >= 0) {
            if (::lseek(rd, -1, SEEK_END) >= 0 && ::read(rd, &last, 1) == 1 && last != '\n') payload = "\n" + line;
            ::close(rd);
        }
    }
    const ssize_t written = ::write(fd, payload.data(), payload.size());
    if (written != static_cast<ssize_t>(payload.size())) warnings_.push_back("cache " + path_ + ": short write");
    ::close(fd);
}

std::vector<std::string> ResultCache::warnings() const
{
    std::lock_guard lock(mutex_);
    return warnings_;
}

} // namespace isc
