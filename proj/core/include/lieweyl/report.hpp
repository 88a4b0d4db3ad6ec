#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lieweyl {

struct CheckReport {
  std::string name;
  bool pass = true;
  std::vector<std::string> details;

  void fail(std::string why) {
    pass = false;
    details.push_back(std::move(why));
  }
  void note(std::string what) { details.push_back(std::move(what)); }
  void absorb(const CheckReport& sub) {
    if (!sub.pass) pass = false;
    for (const auto& d : sub.details) details.push_back(sub.name.empty() ? d : sub.name + ": " + d);
  }
};

// Thrown when a truncation cutoff is too small to produce an exact answer.
struct CutoffError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lieweyl
