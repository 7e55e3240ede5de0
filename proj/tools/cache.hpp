#pragma once

#include "singulocus/ring.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace singulocus::cli {

/// On-disk store of generator lists keyed by the text of a computation.
/// Entry layout:
///
///   singulocus-cache <version>
///   input <key text>
///   count <n>
///   <generator>   (n lines, canonical polynomial text)
///   end
class ResultCache {
 public:
  static constexpr int kVersion = 1;

  /// Disabled when `dir` is empty.
  ResultCache(std::filesystem::path dir, std::ostream* warnings);

  /// SINGULOCUS_CACHE, or `.singulocus-cache` when unset.
  static std::filesystem::path default_dir();

  bool enabled() const { return !dir_.empty(); }
  std::filesystem::path entry_path(const std::string& key) const;

  /// Stored generators for `key`, each re-parsed in `ring` as a validity
  /// check. Missing, stale or corrupt entries give nullopt.
  std::optional<std::vector<std::string>> lookup(const std::string& key, const RingPtr& ring) const;
  /// Atomic write (temporary file then rename); failures only warn.
  void store(const std::string& key, const std::vector<std::string>& gens) const;

  /// lookup, or compute and store.
  std::vector<std::string> get(const std::string& key, const RingPtr& ring,
                               const std::function<std::vector<std::string>()>& compute) const;

 private:
  void warn(const std::string& msg) const;

  std::filesystem::path dir_;
  std::ostream* warnings_;
};

}  // namespace singulocus::cli
