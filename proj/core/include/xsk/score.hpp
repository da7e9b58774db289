#ifndef XSK_SCORE_HPP
#define XSK_SCORE_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace xsk {

// One p-value from an external statistical battery, as CSV
// "generator,seed,test,p". A generator named "<base>-rev" is read as the
// bit-reversed run of "<base>" and paired with it in the report.
struct ScoreRecord {
  std::string generator;
  std::string seed;
  std::string test;
  double p = 0;
};

inline constexpr double kScoreLow = 0.001;
inline constexpr double kScoreHigh = 0.999;
// Outside the closed interval [0.001, 0.999] counts as a failure, so
// p = 0.001 passes and p = 0.0005 fails.
inline bool score_fails(double p) { return p < kScoreLow || p > kScoreHigh; }

struct TestStats {
  size_t seeds = 0;
  size_t failed = 0;
  bool systematic() const { return seeds > 0 && failed == seeds; }
};

struct ScoreReport {
  // generator -> test -> stats over seeds
  std::map<std::string, std::map<std::string, TestStats>> cells;
  size_t records = 0;
  size_t failures = 0;

  size_t generator_failures(const std::string& gen) const;
  std::vector<std::string> systematic_tests(const std::string& gen) const;
};

std::vector<ScoreRecord> parse_score_csv(std::istream& in, const std::string& origin);
ScoreReport aggregate_scores(const std::vector<ScoreRecord>& records);
void write_report_text(std::ostream& out, const ScoreReport& rep);
void write_report_csv(std::ostream& out, const ScoreReport& rep);

} // namespace xsk

#endif
