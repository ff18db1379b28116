#pragma once

#include <string>
#include <vector>

namespace holochern {

// Outcome of one verification; witnesses locate the first failures.
struct CheckReport {
  std::string name;
  bool ok = true;
  long checked = 0;
  std::vector<std::string> witnesses;

  void fail(std::string witness) {
    ok = false;
    if (witnesses.size() < 8) witnesses.push_back(std::move(witness));
  }
  void merge(const CheckReport& o) {
    checked += o.checked;
    if (!o.ok) {
      ok = false;
      for (const auto& w : o.witnesses) {
        if (witnesses.size() < 8) witnesses.push_back(w);
      }
    }
  }
};

}  // namespace holochern
