#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace trivex::app {

// Directory of JSON envelopes, one per key. An envelope whose key, tool
// version or payload checksum does not match reads as a miss, so the caller
// rebuilds and overwrites it.
class Cache {
 public:
  Cache() = default;
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  [[nodiscard]] bool enabled() const { return !dir_.empty(); }
  [[nodiscard]] std::filesystem::path path_for(const std::string& key) const;
  [[nodiscard]] std::optional<std::string> load(const std::string& key) const;
  // Written to a temporary file and renamed into place.
  void store(const std::string& key, const std::string& payload) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace trivex::app
