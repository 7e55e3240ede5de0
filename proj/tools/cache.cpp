#include "cache.hpp"

#include "session.hpp"
#include "singulocus/poly_parse.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace singulocus::cli {
namespace {

const std::string kMagic = "singulocus-cache";

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path dir, std::ostream* warnings)
    : dir_(std::move(dir)), warnings_(warnings) {}

std::filesystem::path ResultCache::default_dir() {
  const char* env = std::getenv("SINGULOCUS_CACHE");
  return env && *env ? std::filesystem::path(env) : std::filesystem::path(".singulocus-cache");
}

std::filesystem::path ResultCache::entry_path(const std::string& key) const {
  return dir_ / (hex64(fnv1a(key)) + ".txt");
}

void ResultCache::warn(const std::string& msg) const {
  if (warnings_) *warnings_ << "warning: " << msg << "\n";
}

std::optional<std::vector<std::string>> ResultCache::lookup(const std::string& key, const RingPtr& ring) const {
  if (!enabled()) return std::nullopt;
  const auto path = entry_path(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  auto corrupt = [&](const std::string& why) -> std::optional<std::vector<std::string>> {
    warn("corrupt cache entry " + path.string() + " (" + why + "), recomputing");
    return std::nullopt;
  };

  std::string line;
  if (!std::getline(in, line) || line.rfind(kMagic + " ", 0) != 0) return corrupt("bad header");
  if (line != kMagic + " " + std::to_string(kVersion)) return std::nullopt;
  if (!std::getline(in, line) || line.rfind("input ", 0) != 0) return corrupt("missing input line");
  // A different input under the same hash is a collision, not corruption.
  if (line.substr(6) != key) return std::nullopt;
  if (!std::getline(in, line) || line.rfind("count ", 0) != 0) return corrupt("missing count");
  std::size_t count = 0;
  try {
    std::size_t used = 0;
    count = std::stoul(line.substr(6), &used);
    if (used != line.size() - 6) return corrupt("bad count");
  } catch (const std::exception&) {
    return corrupt("bad count");
  }
  std::vector<std::string> gens;
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(in, line)) return corrupt("truncated");
    try {
      ring->parse(line);
    } catch (const ParseError&) {
      return corrupt("unparsable generator");
    }
    gens.push_back(line);
  }
  if (!std::getline(in, line) || line != "end") return corrupt("missing end marker");
  if (std::getline(in, line)) return corrupt("trailing data");
  return gens;
}

void ResultCache::store(const std::string& key, const std::vector<std::string>& gens) const {
  if (!enabled()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto path = entry_path(key);
  const auto tmp = path.string() + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << kMagic << " " << kVersion << "\n"
        << "input " << key << "\n"
        << "count " << gens.size() << "\n";
    for (const auto& g : gens) out << g << "\n";
    out << "end\n";
    if (!out) {
      std::filesystem::remove(tmp, ec);
      warn("could not write cache entry " + path.string());
      return;
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    warn("could not write cache entry " + path.string());
  }
}

std::vector<std::string> ResultCache::get(const std::string& key, const RingPtr& ring,
                                          const std::function<std::vector<std::string>()>& compute) const {
  if (auto hit = lookup(key, ring)) return *hit;
  auto gens = compute();
  store(key, gens);
  return gens;
}

}  // namespace singulocus::cli
