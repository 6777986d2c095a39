#include "app/ledger.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "trivex/version.hpp"

namespace trivex::app {

void Ledger::add(LedgerRow row) {
  const auto at = std::upper_bound(rows_.begin(), rows_.end(), row.id, [](const std::string& id, const LedgerRow& r) { return id < r.id; });
  rows_.insert(at, std::move(row));
}

bool Ledger::all_pass() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const LedgerRow& r) { return r.pass; });
}

std::string Ledger::table() const {
  std::ostringstream os;
  for (const auto& r : rows_) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%9.1f ms", r.runtime_ms);
    os << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << ms << "  " << r.anchor << '\n';
    os << "      expected:  " << r.expected << '\n';
    os << "      computed:  " << r.computed << '\n';
    if (!r.tolerance.empty()) os << "      tolerance: " << r.tolerance << '\n';
  }
  const auto passed = std::count_if(rows_.begin(), rows_.end(), [](const LedgerRow& r) { return r.pass; });
  os << passed << "/" << rows_.size() << " rows pass\n";
  return os.str();
}

std::string Ledger::json(bool with_runtime) const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : rows_) {
    nlohmann::json j = {{"id", r.id},
                        {"anchor", r.anchor},
                        {"expected", r.expected},
                        {"computed", r.computed},
                        {"tolerance", r.tolerance},
                        {"pass", r.pass}};
    if (with_runtime) j["runtime_ms"] = r.runtime_ms;
    rows.push_back(std::move(j));
  }
  const nlohmann::json doc = {{"format", "trivex.ledger"}, {"tool_version", kVersion}, {"all_pass", all_pass()}, {"rows", rows}};
  return doc.dump(2) + "\n";
}

}  // namespace trivex::app
