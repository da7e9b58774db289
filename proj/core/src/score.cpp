#include "xsk/score.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace xsk {

size_t ScoreReport::generator_failures(const std::string& gen) const {
  auto it = cells.find(gen);
  if (it == cells.end()) return 0;
  size_t n = 0;
  for (const auto& [test, st] : it->second) n += st.failed;
  return n;
}

std::vector<std::string> ScoreReport::systematic_tests(const std::string& gen) const {
  std::vector<std::string> out;
  auto it = cells.find(gen);
  if (it == cells.end()) return out;
  for (const auto& [test, st] : it->second)
    if (st.systematic()) out.push_back(test);
  return out;
}

std::vector<ScoreRecord> parse_score_csv(std::istream& in, const std::string& origin) {
  std::vector<ScoreRecord> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line == "generator,seed,test,p") continue; // header
    std::vector<std::string> f;
    std::istringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) f.push_back(tok);
    if (f.size() != 4)
      throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                               ": expected 4 comma-separated fields");
    ScoreRecord r;
    r.generator = f[0];
    r.seed = f[1];
    r.test = f[2];
    try {
      size_t used = 0;
      r.p = std::stod(f[3], &used);
      if (used != f[3].size()) throw std::invalid_argument("");
    } catch (...) {
      throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                               ": bad p-value '" + f[3] + "'");
    }
    if (r.p < 0.0 || r.p > 1.0)
      throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                               ": p-value outside [0,1]");
    out.push_back(std::move(r));
  }
  return out;
}

ScoreReport aggregate_scores(const std::vector<ScoreRecord>& records) {
  ScoreReport rep;
  for (const auto& r : records) {
    auto& st = rep.cells[r.generator][r.test];
    st.seeds++;
    rep.records++;
    if (score_fails(r.p)) {
      st.failed++;
      rep.failures++;
    }
  }
  return rep;
}

void write_report_text(std::ostream& out, const ScoreReport& rep) {
  out << "records " << rep.records << ", failures " << rep.failures
      << " (fail = p outside [" << kScoreLow << ", " << kScoreHigh << "])\n";
  for (const auto& [gen, tests] : rep.cells) {
    size_t fails = rep.generator_failures(gen);
    out << gen << ": " << fails << " failed\n";
    for (const auto& [test, st] : tests) {
      if (st.failed == 0) continue;
      out << "  " << test << ": " << st.failed << "/" << st.seeds << " seeds";
      if (st.systematic()) out << " [systematic]";
      out << "\n";
    }
  }
  // pair forward runs with their "-rev" partners
  std::set<std::string> bases;
  for (const auto& [gen, _] : rep.cells)
    if (gen.size() > 4 && gen.ends_with("-rev") &&
        rep.cells.count(gen.substr(0, gen.size() - 4)))
      bases.insert(gen.substr(0, gen.size() - 4));
  for (const auto& base : bases) {
    size_t fwd = rep.generator_failures(base);
    size_t rev = rep.generator_failures(base + "-rev");
    out << base << " + reversed: " << (fwd + rev) << " failed (forward " << fwd
        << ", reversed " << rev << ")\n";
  }
}

void write_report_csv(std::ostream& out, const ScoreReport& rep) {
  out << "generator,test,seeds,failed,systematic\n";
  for (const auto& [gen, tests] : rep.cells)
    for (const auto& [test, st] : tests)
      out << gen << ',' << test << ',' << st.seeds << ',' << st.failed << ','
          << (st.systematic() ? 1 : 0) << '\n';
}

} // namespace xsk
