#include "app/cache.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "trivex/util/hash.hpp"
#include "trivex/version.hpp"

namespace trivex::app {

namespace {
constexpr const char* kEnvelopeFormat = "trivex.cache";
}

std::filesystem::path Cache::path_for(const std::string& key) const { return dir_ / (hex64(fnv1a64(key)) + ".json"); }

std::optional<std::string> Cache::load(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const auto j = nlohmann::json::parse(buf.str());
    if (j.at("format") != kEnvelopeFormat || j.at("tool") != kVersion || j.at("key") != key) return std::nullopt;
    auto payload = j.at("payload").get<std::string>();
    if (j.at("checksum") != hex64(fnv1a64(payload))) return std::nullopt;
    return payload;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void Cache::store(const std::string& key, const std::string& payload) const {
  if (!enabled()) return;
  std::filesystem::create_directories(dir_);
  const nlohmann::json j = {{"format", kEnvelopeFormat}, {"tool", kVersion}, {"key", key}, {"checksum", hex64(fnv1a64(payload))},
                            {"payload", payload}};
  const auto target = path_for(key);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace trivex::app
