#include "dasep/lumping.hpp"

#include <map>

#include "dasep/combinatorics.hpp"
#include "dasep/error.hpp"
#include "json.hpp"

namespace dasep {

LumpingMap::LumpingMap(const TransitionSystem& source, const TransitionSystem& target,
                       std::vector<std::size_t> assignment)
    : source_(&source), target_(&target), assignment_(std::move(assignment)) {
  if (assignment_.size() != source.size())
    throw Error(ErrorCode::InvalidParams, "assignment must cover every source state");
  std::vector<bool> hit(target.size(), false);
  for (std::size_t y : assignment_) {
    if (y >= target.size()) throw Error(ErrorCode::InvalidParams, "assignment points outside the target");
    hit[y] = true;
  }
  for (std::size_t y = 0; y < hit.size(); ++y)
    if (!hit[y]) throw Error(ErrorCode::InvalidParams, "assignment misses target state " + target.state(y));
}

std::vector<std::size_t> LumpingMap::fiber_sizes() const {
  std::vector<std::size_t> sizes(target_->size(), 0);
  for (std::size_t y : assignment_) ++sizes[y];
  return sizes;
}

namespace {

std::size_t lookup(const TransitionSystem& sys, const std::string& label) {
  auto idx = sys.index_of(label);
  if (!idx) throw Error(ErrorCode::IndexMismatch, "state " + label + " missing from " + to_string(sys.kind()));
  return *idx;
}

}  // namespace

LumpingMap decompose_map(const TransitionSystem& dasep, const TransitionSystem& cbp) {
  std::vector<std::size_t> assignment;
  assignment.reserve(dasep.size());
  for (const auto& label : dasep.states())
    assignment.push_back(lookup(cbp, decompose(Word::parse(label)).to_string()));
  return {dasep, cbp, std::move(assignment)};
}

LumpingMap shape_map(const TransitionSystem& cbp, const TransitionSystem& rrg) {
  std::vector<std::size_t> assignment;
  assignment.reserve(cbp.size());
  for (const auto& label : cbp.states()) assignment.push_back(lookup(rrg, CbpState::parse(label).shape.to_string()));
  return {cbp, rrg, std::move(assignment)};
}

LumpingReport verify_lumping(const LumpingMap& map) {
  const auto& source = map.source();
  const auto& target = map.target();
  if (source.scale() != target.scale())
    throw Error(ErrorCode::ScaleMismatch,
                std::to_string(source.scale()) + " vs " + std::to_string(target.scale()));
  LumpingReport report;
  for (std::size_t x0 = 0; x0 < source.size(); ++x0) {
    const std::size_t y0 = map(x0);
    std::map<std::size_t, BivarPoly> found;
    found[y0] += source.diagonal(x0);
    for (const auto& [x, r] : source.row(x0)) found[map(x)] += r;
    std::map<std::size_t, BivarPoly> expected;
    expected[y0] = target.diagonal(y0);
    for (const auto& [y, r] : target.row(y0)) expected[y] += r;
    for (const auto& [y, r] : expected) found.try_emplace(y);
    for (const auto& [y1, got] : found) {
      auto it = expected.find(y1);
      BivarPoly want = it == expected.end() ? BivarPoly() : it->second;
      if (got != want) {
        report.pass = false;
        if (report.violations.size() < 10)
          report.violations.push_back({target.state(y0), target.state(y1), source.state(x0), want, got});
        ++report.violation_count;
      }
    }
  }
  return report;
}

std::string LumpingReport::to_json() const {
  nlohmann::json j;
  j["pass"] = pass;
  j["violation_count"] = violation_count;
  auto list = nlohmann::json::array();
  for (const auto& v : violations)
    list.push_back({{"y0", v.y0},
                    {"y1", v.y1},
                    {"x0", v.x0},
                    {"expected", v.expected.to_string()},
                    {"found", v.found.to_string()}});
  j["violations"] = std::move(list);
  return j.dump(2);
}

StationaryVector push_distribution(const LumpingMap& map, const StationaryVector& pi) {
  if (pi.states != map.source().states())
    throw Error(ErrorCode::IndexMismatch, "vector is not indexed by the lumping source");
  StationaryVector out;
  out.states = map.target().states();
  out.mode = pi.mode;
  out.point = pi.point;
  out.normalization = Normalization::unnormalized;
  if (pi.mode == StationaryVector::Mode::symbolic) {
    out.polys.assign(out.states.size(), BivarPoly());
    for (std::size_t x = 0; x < pi.size(); ++x) out.polys[map(x)] += pi.polys[x];
  } else {
    out.values.assign(out.states.size(), Rational(0));
    for (std::size_t x = 0; x < pi.size(); ++x) out.values[map(x)] += pi.values[x];
  }
  return out;
}

}  // namespace dasep
