#pragma once
#include <string>
#include <vector>

namespace enet {

struct CheckReport {
  std::string name;
  std::string status = "pass";  // pass | fail | skipped
  std::vector<std::string> witnesses;

  void fail(std::string witness) {
    status = "fail";
    witnesses.push_back(std::move(witness));
  }
  void skip(std::string why) {
    status = "skipped";
    witnesses.push_back(std::move(why));
  }
  bool passed() const { return status == "pass"; }
};

}  // namespace enet
