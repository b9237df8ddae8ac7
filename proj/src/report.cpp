#include <cstdio>
#include <sstream>

#include "relax/errors.hpp"
#include "relax/history.hpp"

#include <json.hpp>

namespace relax {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string RegretReport::to_json() const {
  std::ostringstream os;
  os << "{\"horizon\":" << horizon << ",\"comparator_loss\":"
     << fmt17(comparator_loss) << ",\"regret\":" << fmt17(regret)
     << ",\"bound\":" << (std::isnan(bound) ? "null" : fmt17(bound))
     << ",\"loss_lo\":" << fmt17(loss_lo) << ",\"loss_hi\":" << fmt17(loss_hi)
     << ",\"per_round_loss\":[";
  for (size_t i = 0; i < per_round_loss.size(); ++i) {
    if (i) os << ",";
    os << fmt17(per_round_loss[i]);
  }
  os << "],\"blocks\":[";
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << ",";
    os << "{\"length\":" << blocks[i].length << ",\"bound\":"
       << fmt17(blocks[i].bound) << "}";
  }
  os << "]}";
  return os.str();
}

std::string RegretReport::to_csv() const {
  // Scalar fields ride along as comment headers so the file round-trips.
  std::ostringstream os;
  os << "# horizon=" << horizon << " comparator_loss=" << fmt17(comparator_loss)
     << " bound=" << (std::isnan(bound) ? "nan" : fmt17(bound))
     << " loss_lo=" << fmt17(loss_lo) << " loss_hi=" << fmt17(loss_hi) << "\n";
  os << "t,loss,cumulative_regret,bound_remaining\n";
  double cum = 0.0;
  for (size_t i = 0; i < per_round_loss.size(); ++i) {
    cum += per_round_loss[i];
    double cum_regret = cum - comparator_loss;
    os << (i + 1) << "," << fmt17(per_round_loss[i]) << "," << fmt17(cum_regret)
       << "," << fmt17(bound - cum_regret) << "\n";
  }
  return os.str();
}

RegretReport parse_report_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  RegretReport r;
  r.horizon = j.at("horizon").get<int>();
  r.comparator_loss = j.at("comparator_loss").get<double>();
  r.regret = j.at("regret").get<double>();
  r.bound = j.at("bound").is_null() ? std::nan("") : j.at("bound").get<double>();
  r.loss_lo = j.at("loss_lo").get<double>();
  r.loss_hi = j.at("loss_hi").get<double>();
  for (const auto& v : j.at("per_round_loss")) r.per_round_loss.push_back(v.get<double>());
  for (const auto& b : j.at("blocks"))
    r.blocks.push_back({b.at("length").get<int>(), b.at("bound").get<double>()});
  return r;
}

RegretReport parse_report_csv(const std::string& text) {
  RegretReport r;
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line.rfind("# ", 0) != 0)
    throw ConfigError("csv report missing header comment");
  auto field = [&](const std::string& key) {
    size_t p = line.find(key + "=");
    if (p == std::string::npos) throw ConfigError("csv header missing " + key);
    return line.substr(p + key.size() + 1, line.find(' ', p) - p - key.size() - 1);
  };
  r.horizon = std::stoi(field("horizon"));
  r.comparator_loss = std::stod(field("comparator_loss"));
  r.bound = std::stod(field("bound"));
  r.loss_lo = std::stod(field("loss_lo"));
  r.loss_hi = std::stod(field("loss_hi"));
  std::getline(is, line);  // column header
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    size_t c1 = line.find(','), c2 = line.find(',', c1 + 1);
    r.per_round_loss.push_back(std::stod(line.substr(c1 + 1, c2 - c1 - 1)));
  }
  r.regret = r.total_loss() - r.comparator_loss;
  return r;
}

}  // namespace relax
