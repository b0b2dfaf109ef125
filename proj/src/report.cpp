#include "dasep/report.hpp"

#include "json.hpp"

namespace dasep {

void Report::fail(std::string witness) {
  pass = false;
  ++failure_count;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

void Report::note(std::string witness) {
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

void Report::absorb(const Report& other) {
  pass = pass && other.pass;
  failure_count += other.failure_count;
  for (const auto& w : other.witnesses)
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(w);
}

std::string Report::to_json() const {
  nlohmann::ordered_json out;
  out["theorem"] = theorem;
  out["params"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : params) out["params"][key] = value;
  out["pass"] = pass;
  out["failure_count"] = failure_count;
  out["witnesses"] = witnesses;
  return out.dump(2);
}

}  // namespace dasep
