// xs: drive the xorshift toolkit from the command line.
// Everything here is deterministic: seeds come from flags, files, or the
// fixed seed ladder -- never from system entropy.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "xsk/emit.hpp"
#include "xsk/engine.hpp"
#include "xsk/factor_table.hpp"
#include "xsk/jump.hpp"
#include "xsk/metrics.hpp"
#include "xsk/min_poly.hpp"
#include "xsk/period.hpp"
#include "xsk/score.hpp"
#include "xsk/seed_schedule.hpp"

using namespace xsk;

namespace {

struct FamilyInfo {
  unsigned t;
  unsigned a, b, c;
  bool scrambled;
  uint64_t default_mult;
};

FamilyInfo family_info(const std::string& name) {
  if (name == "x64") return {1, 12, 25, 27, false, 0};
  if (name == "x64star") return {1, 12, 25, 27, true, kMult64};
  if (name == "x1024") return {16, 31, 11, 30, false, 0};
  if (name == "x1024star") return {16, 31, 11, 30, true, kMult1024};
  if (name == "x4096") return {64, 25, 3, 49, false, 0};
  if (name == "x4096star") return {64, 25, 3, 49, true, kMult4096};
  throw CLI::ValidationError("--family",
                             "unknown family '" + name +
                                 "' (x64|x64star|x1024|x1024star|x4096|x4096star)");
}

uint64_t parse_mult(const std::string& s) {
  if (s == "M32") return kMult64;
  if (s == "M8") return kMult1024;
  if (s == "M2") return kMult4096;
  size_t used = 0;
  uint64_t m = std::stoull(s, &used, 0);
  if (used != s.size())
    throw CLI::ValidationError("--mult", "expected M32, M8, M2 or an integer");
  return m;
}

void parse_abc(const std::string& s, unsigned& a, unsigned& b, unsigned& c) {
  if (std::sscanf(s.c_str(), "%u,%u,%u", &a, &b, &c) != 3)
    throw CLI::ValidationError("--abc", "expected a,b,c");
}

// Options shared by every subcommand that runs a generator.
struct GenOpts {
  std::string family = "x64star";
  std::string variant = "A1";
  std::string abc;
  std::string mult;
  std::vector<std::string> seed_words;
  unsigned p = 0;
  int seed_index = -1;
  std::string state_file;

  void attach(CLI::App* cmd, bool with_seed = true) {
    cmd->add_option("--family", family,
                    "x64|x64star|x1024|x1024star|x4096|x4096star");
    cmd->add_option("--variant", variant, "shift order A0..A7 (64-bit shapes)");
    cmd->add_option("--abc", abc, "override the shift triple, e.g. 31,11,30");
    cmd->add_option("--mult", mult, "scrambling multiplier: M32|M8|M2|integer");
    if (with_seed) {
      cmd->add_option("--seed-words", seed_words,
                      "explicit state words (hex 0x.. or decimal)");
      cmd->add_option("--p", p, "state rotation index for --seed-words");
      cmd->add_option("--seed-index", seed_index, "seed-ladder index (0..99)");
      cmd->add_option("--state", state_file, "read the start state from a file");
    }
  }

  Params params() const {
    FamilyInfo fi = family_info(family);
    unsigned a = fi.a, b = fi.b, c = fi.c;
    if (!abc.empty()) parse_abc(abc, a, b, c);
    std::optional<uint64_t> m;
    if (!mult.empty()) m = parse_mult(mult);
    else if (fi.scrambled)
      throw CLI::ValidationError(
          "--mult", "family " + family + " scrambles its output; pass --mult "
                    "(M32, M8, M2 or an odd integer)");
    if (fi.t == 1) return scalar_params(parse_variant(variant), a, b, c, 64, m);
    return block_params(fi.t, a, b, c, 64, m);
  }

  EngineState start_state(const Params& prm) const {
    int sources = (!seed_words.empty()) + (seed_index >= 0) + (!state_file.empty());
    if (sources > 1)
      throw CLI::ValidationError("--seed-words/--seed-index/--state",
                                 "pick a single seed source");
    if (!state_file.empty()) {
      std::ifstream in(state_file);
      if (!in) throw std::runtime_error("cannot open state file '" + state_file + "'");
      return parse_state_text(in, prm.t);
    }
    if (!seed_words.empty()) {
      if (seed_words.size() != prm.t)
        throw std::runtime_error("need exactly " + std::to_string(prm.t) +
                                 " seed words");
      EngineState st;
      for (const auto& s : seed_words) {
        size_t used = 0;
        uint64_t w = std::stoull(s, &used, 0);
        if (used != s.size()) throw std::runtime_error("bad seed word '" + s + "'");
        st.words.push_back(w);
      }
      st.p = p;
      return st;
    }
    return schedule_seed(prm.state_bits(), seed_index >= 0 ? unsigned(seed_index) : 0);
  }

  Engine64 engine() const {
    Params prm = params();
    EngineState st = start_state(prm);
    return Engine64(prm, st.words, st.p);
  }
};

std::ofstream open_out(const std::string& path, bool binary = false) {
  std::ofstream f(path, binary ? std::ios::binary : std::ios::out);
  if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
  return f;
}

// Factor-table search dirs that work regardless of the caller's cwd: next to
// the installed binary, in the build tree, and in the source checkout.
std::vector<std::string> tool_data_dirs() {
  std::vector<std::string> dirs;
  std::error_code ec;
  auto exe = std::filesystem::read_symlink("/proc/self/exe", ec);
  if (!ec) {
    auto d = exe.parent_path();
    dirs.push_back((d / ".." / "share" / "xskit" / "data").string());
    dirs.push_back((d / ".." / ".." / "core" / "data").string());
  }
#ifdef XS_SOURCE_DATA_DIR
  dirs.push_back(XS_SOURCE_DATA_DIR);
#endif
  return dirs;
}

FactorTable load_factors(unsigned n, const std::string& override_path) {
  std::string path = override_path;
  if (path.empty()) path = find_factor_file(n, tool_data_dirs());
  if (path.empty())
    throw std::runtime_error("no factor table for n=" + std::to_string(n) +
                             " found; pass --factors");
  FactorTable t = FactorTable::load(path);
  if (t.n != n)
    throw std::runtime_error("factor table " + path + " is for n=" +
                             std::to_string(t.n) + ", need " + std::to_string(n));
  t.verify();
  return t;
}

unsigned bits_to_t(unsigned bits) {
  if (bits == 64) return 1;
  if (bits == 1024) return 16;
  if (bits == 4096) return 64;
  throw CLI::ValidationError("--bits", "supported widths: 64, 1024, 4096");
}

Params shape_params(unsigned bits, const std::string& abc_str) {
  unsigned a, b, c;
  if (bits == 64) { a = 12; b = 25; c = 27; }
  else if (bits == 1024) { a = 31; b = 11; c = 30; }
  else { a = 25; b = 3; c = 49; }
  if (!abc_str.empty()) parse_abc(abc_str, a, b, c);
  unsigned t = bits_to_t(bits);
  if (t == 1) return scalar_params(Variant::A1, a, b, c);
  return block_params(t, a, b, c);
}

GF2Poly certified_char_poly(const Params& prm) {
  MinPolyResult mp = min_poly(prm);
  if (!mp.full_degree())
    throw std::runtime_error(
        prm.id() + ": transition polynomial has degree " +
        std::to_string(mp.poly.degree()) + " < " +
        std::to_string(prm.state_bits()) +
        " (not full period; jumping across a short cycle is ambiguous)");
  return mp.poly;
}

// ---- subcommand bodies ----

int cmd_emit(const GenOpts& g, const std::string& mode, uint64_t count,
             const std::string& out_path) {
  Engine64 eng = g.engine();
  OutputMode m = parse_output_mode(mode);
  if (!out_path.empty()) {
    auto f = open_out(out_path, true);
    emit_stream(eng, m, count, f);
  } else {
    emit_stream(eng, m, count, std::cout);
  }
  return 0;
}

int cmd_enumerate(unsigned bits, const std::string& factors_path,
                  const std::string& out_path) {
  unsigned t = bits_to_t(bits);
  FactorTable table = load_factors(bits, factors_path);
  auto rows = (t == 1) ? enumerate_scalar(table) : enumerate_block(t, table);
  std::ostringstream csv;
  csv << "a,b,c,weight\n";
  for (const auto& r : rows)
    csv << r.a << ',' << r.b << ',' << r.c << ',' << r.weight << '\n';
  if (!out_path.empty()) open_out(out_path) << csv.str();
  else std::cout << csv.str();
  std::cerr << rows.size() << " full-period triples for x" << bits << "\n";
  return 0;
}

int cmd_jumpmask(unsigned bits, const std::string& abc_str,
                 const std::string& jump_str, const std::string& out_path) {
  Params prm = shape_params(bits, abc_str);
  mpz_class dist = parse_distance(jump_str);
  JumpMask mask = make_jump_mask(prm, dist, certified_char_poly(prm));
  if (!out_path.empty()) {
    auto f = open_out(out_path);
    write_mask_text(f, mask);
  } else {
    write_mask_text(std::cout, mask);
  }
  return 0;
}

int cmd_jump(unsigned bits, const std::string& abc_str, const std::string& variant,
             const std::string& mask_path, const std::string& state_path,
             const std::string& out_path) {
  Params prm = shape_params(bits, abc_str);
  if (prm.t == 1 && !variant.empty())
    prm = scalar_params(parse_variant(variant), prm.a, prm.b, prm.c);
  std::ifstream mf(mask_path);
  if (!mf) throw std::runtime_error("cannot open mask file '" + mask_path + "'");
  JumpMask mask = parse_mask_text(mf);
  std::ifstream sf(state_path);
  if (!sf) throw std::runtime_error("cannot open state file '" + state_path + "'");
  EngineState st = parse_state_text(sf, prm.t);
  Engine64 eng(prm, st.words, st.p);
  apply_jump(eng, mask);
  EngineState ns = eng.state();
  if (!out_path.empty()) {
    auto f = open_out(out_path);
    write_state_text(f, ns);
  } else {
    write_state_text(std::cout, ns);
  }
  return 0;
}

int cmd_escape(const GenOpts& g, const std::string& out_path) {
  Params prm = g.params();
  EscapeCurve curve = escape_zeroland(prm);
  std::ostringstream csv;
  csv << "position,ratio\n";
  for (size_t m = 0; m < curve.ratio.size(); m++) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.8f", curve.ratio[m]);
    csv << (m + 1) * 100 << ',' << buf << '\n';
  }
  if (!out_path.empty()) open_out(out_path) << csv.str();
  else std::cout << csv.str();
  std::fprintf(stderr, "mean=%.6f stddev=%.6f\n", curve.mean, curve.stddev);
  return 0;
}

int cmd_probe_rank(const GenOpts& g, bool schedule_all, int bit, bool high32,
                   uint64_t matrices) {
  Params prm = g.params();
  BitView view = high32 ? BitView::High32 : BitView::SingleBit;
  unsigned bit_idx = bit < 0 ? 0 : unsigned(bit);
  std::cout << "seed,p\n";
  auto run_one = [&](const EngineState& st, const std::string& label) {
    Engine64 eng(prm, st.words, st.p);
    BitStream bits(std::move(eng), view, bit_idx);
    RankProbe pr = rank_probe(bits, matrices);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", pr.p);
    std::cout << label << ',' << buf << '\n';
  };
  if (schedule_all) {
    for (unsigned i = 0; i < 100; i++)
      run_one(schedule_seed(prm.state_bits(), i), std::to_string(i));
  } else {
    run_one(g.start_state(prm),
            g.seed_index >= 0 ? std::to_string(g.seed_index) : "explicit");
  }
  return 0;
}

int cmd_probe_lc(const GenOpts& g, bool schedule_all, int bit, unsigned nbits) {
  Params prm = g.params();
  std::cout << "seed,bit,complexity\n";
  auto run_one = [&](const EngineState& st, const std::string& label) {
    unsigned lo = bit < 0 ? 0 : unsigned(bit);
    unsigned hi = bit < 0 ? 63 : unsigned(bit);
    for (unsigned k = lo; k <= hi; k++) {
      BitStream bits(Engine64(prm, st.words, st.p), BitView::SingleBit, k);
      std::cout << label << ',' << k << ',' << linear_complexity(bits, nbits) << '\n';
    }
  };
  if (schedule_all) {
    for (unsigned i = 0; i < 100; i++)
      run_one(schedule_seed(prm.state_bits(), i), std::to_string(i));
  } else {
    run_one(g.start_state(prm),
            g.seed_index >= 0 ? std::to_string(g.seed_index) : "explicit");
  }
  return 0;
}

int cmd_score(const std::string& in_path, const std::string& csv_out) {
  std::vector<ScoreRecord> recs;
  if (in_path.empty() || in_path == "-") {
    recs = parse_score_csv(std::cin, "<stdin>");
  } else {
    std::ifstream f(in_path);
    if (!f) throw std::runtime_error("cannot open '" + in_path + "'");
    recs = parse_score_csv(f, in_path);
  }
  ScoreReport rep = aggregate_scores(recs);
  write_report_text(std::cout, rep);
  if (!csv_out.empty()) {
    auto f = open_out(csv_out);
    write_report_csv(f, rep);
  }
  return 0;
}

int cmd_bench(uint64_t count, const std::string& only) {
  struct Row { const char* name; const char* family; const char* mult; };
  static const Row rows[] = {
      {"x64", "x64", ""},       {"x64star", "x64star", "M32"},
      {"x1024", "x1024", ""},   {"x1024star", "x1024star", "M8"},
      {"x4096", "x4096", ""},   {"x4096star", "x4096star", "M2"},
  };
  std::printf("%-12s %12s %10s %18s\n", "generator", "outputs", "ns/output",
              "checksum");
  for (const Row& r : rows) {
    if (!only.empty() && only != r.name) continue;
    GenOpts g;
    g.family = r.family;
    g.mult = r.mult;
    Engine64 eng = g.engine();
    uint64_t sink = 0;
    auto t0 = std::chrono::steady_clock::now();
    for (uint64_t i = 0; i < count; i++) sink ^= eng.next();
    auto t1 = std::chrono::steady_clock::now();
    double ns = std::chrono::duration<double, std::nano>(t1 - t0).count() /
                static_cast<double>(count);
    std::printf("%-12s %12llu %10.3f 0x%016llx\n", r.name,
                static_cast<unsigned long long>(count), ns,
                static_cast<unsigned long long>(sink));
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"xorshift generator toolkit: emit streams, certify periods, "
               "jump ahead, probe output quality"};
  app.require_subcommand(1);

  // emit
  auto* emit = app.add_subcommand("emit", "write framed output bytes");
  GenOpts emit_g;
  emit_g.attach(emit);
  std::string emit_mode = "raw64", emit_out;
  uint64_t emit_count = 1 << 20;
  emit->add_option("--mode", emit_mode, "raw64|interleaved32|reversed64|unit");
  emit->add_option("--count", emit_count, "outputs to emit");
  emit->add_option("--out", emit_out, "write to a file instead of stdout");

  // enumerate
  auto* enu = app.add_subcommand("enumerate",
                                 "list every full-period shift triple");
  unsigned enu_bits = 64;
  std::string enu_factors, enu_out;
  enu->add_option("--bits", enu_bits, "state width: 64, 1024 or 4096");
  enu->add_option("--factors", enu_factors, "factor table file override");
  enu->add_option("--out", enu_out, "CSV output file");

  // jumpmask
  auto* jm = app.add_subcommand("jumpmask", "precompute a jump-ahead mask");
  unsigned jm_bits = 1024;
  std::string jm_abc, jm_jump = "2^512", jm_out;
  jm->add_option("--bits", jm_bits, "state width: 64, 1024 or 4096");
  jm->add_option("--abc", jm_abc, "shift triple (defaults to the shipped one)");
  jm->add_option("--jump", jm_jump, "distance: 2^k or decimal");
  jm->add_option("--out", jm_out, "mask output file");

  // jump
  auto* jp = app.add_subcommand("jump", "advance a saved state by a mask");
  unsigned jp_bits = 1024;
  std::string jp_abc, jp_variant, jp_mask, jp_state, jp_out;
  jp->add_option("--bits", jp_bits, "state width: 64, 1024 or 4096");
  jp->add_option("--abc", jp_abc, "shift triple (defaults to the shipped one)");
  jp->add_option("--variant", jp_variant, "shift order for 64-bit states");
  jp->add_option("--mask", jp_mask, "mask file from jumpmask")->required();
  jp->add_option("--state", jp_state, "state file to advance")->required();
  jp->add_option("--out", jp_out, "write the advanced state here");

  // escape
  auto* esc = app.add_subcommand("escape",
                                 "start-up bias curve from single-bit seeds");
  GenOpts esc_g;
  esc_g.attach(esc, /*with_seed=*/false);
  std::string esc_out;
  esc->add_option("--out", esc_out, "CSV output file");

  // probe
  auto* probe = app.add_subcommand("probe", "statistical probes");
  probe->require_subcommand(1);
  auto* pr = probe->add_subcommand("rank", "GF(2) rank law on output matrices");
  GenOpts pr_g;
  pr_g.attach(pr);
  bool pr_all = false, pr_high32 = false;
  int pr_bit = -1;
  uint64_t pr_matrices = 1000;
  pr->add_flag("--schedule-all", pr_all, "run all 100 ladder seeds");
  pr->add_option("--bit", pr_bit, "probe this output bit (default 0)");
  pr->add_flag("--high32", pr_high32, "probe the upper output half");
  pr->add_option("--matrices", pr_matrices, "matrices per p-value");
  auto* pl = probe->add_subcommand("lc", "linear complexity of output bits");
  GenOpts pl_g;
  pl_g.attach(pl);
  bool pl_all = false;
  int pl_bit = -1;
  unsigned pl_nbits = 512;
  pl->add_flag("--schedule-all", pl_all, "run all 100 ladder seeds");
  pl->add_option("--bit", pl_bit, "single bit (default: all 64)");
  pl->add_option("--nbits", pl_nbits, "stream bits fed to the probe");

  // score
  auto* sc = app.add_subcommand("score", "summarize battery p-values");
  std::string sc_in, sc_csv;
  sc->add_option("--in", sc_in, "CSV of generator,seed,test,p ('-' = stdin)");
  sc->add_option("--csv", sc_csv, "also write per-cell CSV here");

  // bench
  auto* be = app.add_subcommand("bench", "ns/output for the shipped shapes");
  uint64_t be_count = 100000000;
  std::string be_only;
  be->add_option("--count", be_count, "outputs per generator");
  be->add_option("--only", be_only, "bench a single generator");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*emit) return cmd_emit(emit_g, emit_mode, emit_count, emit_out);
    if (*enu) return cmd_enumerate(enu_bits, enu_factors, enu_out);
    if (*jm) return cmd_jumpmask(jm_bits, jm_abc, jm_jump, jm_out);
    if (*jp) return cmd_jump(jp_bits, jp_abc, jp_variant, jp_mask, jp_state, jp_out);
    if (*esc) return cmd_escape(esc_g, esc_out);
    if (*pr) return cmd_probe_rank(pr_g, pr_all, pr_bit, pr_high32, pr_matrices);
    if (*pl) return cmd_probe_lc(pl_g, pl_all, pl_bit, pl_nbits);
    if (*sc) return cmd_score(sc_in, sc_csv);
    if (*be) return cmd_bench(be_count, be_only);
  } catch (const std::exception& e) {
    std::cerr << "xs: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
