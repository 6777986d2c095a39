#pragma once

#include <string>
#include <vector>

namespace trivex::app {

struct LedgerRow {
  std::string id;      // "AC-01" ...
  std::string anchor;  // the claim, in words
  std::string expected;
  std::string computed;
  std::string tolerance;
  bool pass = false;
  double runtime_ms = 0;
};

class Ledger {
 public:
  void add(LedgerRow row);
  // Sorted by id.
  [[nodiscard]] const std::vector<LedgerRow>& rows() const { return rows_; }
  [[nodiscard]] bool all_pass() const;
  [[nodiscard]] std::string table() const;
  // Deterministic apart from runtime_ms, which is omitted when with_runtime is false.
  [[nodiscard]] std::string json(bool with_runtime = true) const;

 private:
  std::vector<LedgerRow> rows_;
};

}  // namespace trivex::app
