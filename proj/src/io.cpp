#include "monotoric/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace monotoric {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

long parseLong(const std::string& s) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError("expected an integer, got '" + s + "'");
  }
}

// section name -> list of entry lines ("a b c" or "name: a b c")
std::map<std::string, std::vector<std::string>> readSections(std::istream& in) {
  std::map<std::string, std::vector<std::string>> sections;
  std::string line, current;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool indented = !line.empty() && (line[0] == ' ' || line[0] == '\t');
    std::string t = trim(line);
    if (t.empty()) continue;
    if (!indented && t.back() == ':') {
      current = t.substr(0, t.size() - 1);
      sections[current];
      continue;
    }
    if (!indented && t.find(':') != std::string::npos) {
      // single-line "key: values" entry at top level
      auto colon = t.find(':');
      std::string key = trim(t.substr(0, colon));
      sections[key].push_back(trim(t.substr(colon + 1)));
      continue;
    }
    if (current.empty()) throw InputError("file entry outside any section: '" + t + "'");
    sections[current].push_back(t);
  }
  return sections;
}

}  // namespace

const ToricDivisor& FanDocument::divisor(const std::string& name) const {
  auto it = divisors.find(name);
  if (it == divisors.end()) throw InputError("unknown divisor '" + name + "'");
  return it->second;
}

FanDocument parseFanDocument(std::istream& in) {
  auto sections = readSections(in);
  if (!sections.count("rays")) throw InputError("fan file: missing 'rays' section");
  if (!sections.count("max_cones")) throw InputError("fan file: missing 'max_cones' section");

  std::vector<IntVec> rays;
  for (const auto& line : sections["rays"]) {
    auto ts = tokens(line);
    IntVec r(static_cast<Index>(ts.size()));
    for (size_t i = 0; i < ts.size(); ++i) r[static_cast<Index>(i)] = parseLong(ts[i]);
    rays.push_back(r);
  }
  std::vector<std::vector<int>> cones;
  for (const auto& line : sections["max_cones"]) {
    std::vector<int> c;
    for (const auto& t : tokens(line)) c.push_back(static_cast<int>(parseLong(t)));
    cones.push_back(c);
  }
  FanDocument doc{Fan::create(std::move(rays), std::move(cones)), {}};
  if (sections.count("divisors")) {
    for (const auto& line : sections["divisors"]) {
      auto colon = line.find(':');
      if (colon == std::string::npos) {
        throw InputError("fan file: divisor entry needs 'name: coefficients'");
      }
      std::string name = trim(line.substr(0, colon));
      ToricDivisor d;
      for (const auto& t : tokens(line.substr(colon + 1))) d.coeffs.push_back(parseLong(t));
      if (d.coeffs.size() != static_cast<size_t>(doc.fan.numRays())) {
        throw InputError("fan file: divisor '" + name + "' has wrong coefficient count");
      }
      doc.divisors.emplace(std::move(name), std::move(d));
    }
  }
  return doc;
}

FanDocument loadFanFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open fan file '" + path + "'");
  return parseFanDocument(in);
}

MonomialDivision parseDivisionDocument(std::istream& in, const std::vector<IntVec>& rays) {
  auto sections = readSections(in);
  MonomialDivision d;
  d.rays = rays;
  auto readRationals = [&](const std::string& key) {
    if (!sections.count(key)) throw InputError("division file: missing '" + key + "'");
    std::vector<Rational> out;
    for (const auto& line : sections[key]) {
      for (const auto& t : tokens(line)) {
        try {
          out.push_back(Rational::parse(t));
        } catch (const std::invalid_argument& e) {
          throw InputError(std::string("division file: ") + e.what());
        }
      }
    }
    return out;
  };
  d.k = readRationals("k");
  d.logc = readRationals("logc");
  auto slack = readRationals("slack");
  if (slack.size() != 1) throw InputError("division file: 'slack' must be a single value");
  d.slack = slack[0];
  if (d.k.size() != rays.size() || d.logc.size() != rays.size()) {
    throw InputError("division file: k/logc length must match the fan's ray count");
  }
  d.validate();
  return d;
}

MonomialDivision loadDivisionFile(const std::string& path, const std::vector<IntVec>& rays) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open division file '" + path + "'");
  return parseDivisionDocument(in, rays);
}

std::string resolveOutputPath(const std::string& path) {
  const char* dir = std::getenv("MONOTORIC_OUTDIR");
  if (!dir || !*dir || path.empty() || path[0] == '/') return path;
  std::string d(dir);
  if (d.back() != '/') d += '/';
  return d + path;
}

std::string gradedHomReportJson(const GradedHom& h, const std::vector<std::string>& verified) {
  nlohmann::json j;
  j["verified"] = verified;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [w, betti] : h.dims) {
    for (size_t deg = 0; deg < betti.size(); ++deg) {
      if (betti[deg] == 0) continue;
      entries.push_back({{"weight", w}, {"degree", deg}, {"dim", betti[deg]}});
    }
  }
  j["entries"] = entries;
  nlohmann::json totals = nlohmann::json::array();
  for (int deg = 0; deg <= h.degreeRange; ++deg) totals.push_back(h.total(deg));
  j["totals"] = totals;
  return j.dump(2) + "\n";
}

void writeGradedHomTable(std::ostream& os, const GradedHom& h) {
  os << "weight";
  for (int d = 0; d <= h.degreeRange; ++d) os << "\th^" << d;
  os << "\n";
  for (const auto& [w, betti] : h.dims) {
    os << repr(fromStd(w));
    for (int d = 0; d <= h.degreeRange; ++d) {
      long v = d < static_cast<int>(betti.size()) ? betti[static_cast<size_t>(d)] : 0;
      os << "\t" << v;
    }
    os << "\n";
  }
  os << "total";
  for (int d = 0; d <= h.degreeRange; ++d) os << "\t" << h.total(d);
  os << "\n";
}

}  // namespace monotoric
