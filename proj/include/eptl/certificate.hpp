#pragma once

#include <string>
#include <vector>

namespace eptl {

// Machine-readable verification report: one entry per identity checked.
struct Certificate {
  struct Entry {
    std::string name;
    bool pass = false;
    std::string detail;  // witness or evidence, empty when not needed
  };

  std::string check;
  std::string params;
  uint64_t seed = 0;
  std::vector<Entry> entries;

  void add(const std::string& name, bool pass, const std::string& detail = "");
  bool all_pass() const;
  std::string json() const;
  std::string text() const;
};

}  // namespace eptl
