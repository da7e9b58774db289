#include "xsk/factor_table.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace xsk {

FactorTable FactorTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open factor table '" + path + "'");
  return parse(in, path);
}

FactorTable FactorTable::parse(std::istream& in, const std::string& origin) {
  FactorTable t;
  std::string line;
  size_t lineno = 0;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    lineno++;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok.rfind("n=", 0) == 0) {
      if (t.n) fail("duplicate n= header");
      try {
        t.n = static_cast<unsigned>(std::stoul(tok.substr(2)));
      } catch (...) {
        fail("bad header '" + tok + "'");
      }
      if (t.n == 0) fail("n must be positive");
      continue;
    }
    if (!t.n) fail("factor line before n= header");
    Entry e;
    std::string num = tok;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      num = tok.substr(0, caret);
      try {
        e.multiplicity = static_cast<unsigned>(std::stoul(tok.substr(caret + 1)));
      } catch (...) {
        fail("bad multiplicity in '" + tok + "'");
      }
      if (e.multiplicity == 0) fail("zero multiplicity");
    }
    if (mpz_set_str(e.prime.get_mpz_t(), num.c_str(), 10) != 0)
      fail("bad integer '" + num + "'");
    if (e.prime < 2) fail("factor below 2");
    t.entries.push_back(std::move(e));
  }
  if (!t.n) throw std::runtime_error(origin + ": missing n= header");
  if (t.entries.empty()) throw std::runtime_error(origin + ": no factors listed");
  return t;
}

mpz_class FactorTable::modulus() const {
  return (mpz_class(1) << n) - 1;
}

void FactorTable::verify() const {
  mpz_class prod = 1;
  for (const auto& e : entries) {
    if (mpz_probab_prime_p(e.prime.get_mpz_t(), 40) == 0)
      throw std::runtime_error("factor table for n=" + std::to_string(n) +
                               ": listed factor " + e.prime.get_str() +
                               " is composite");
    for (unsigned i = 0; i < e.multiplicity; i++) prod *= e.prime;
  }
  if (prod != modulus())
    throw std::runtime_error("factor table for n=" + std::to_string(n) +
                             ": product of listed factors does not equal 2^n-1");
}

std::string find_factor_file(unsigned n, const std::vector<std::string>& extra_dirs) {
  namespace fs = std::filesystem;
  std::vector<std::string> dirs = extra_dirs;
  dirs.insert(dirs.end(), {"core/data", "data", "../core/data", "share/xskit/data"});
  const std::string name = "factors_" + std::to_string(n) + ".txt";
  for (const auto& d : dirs) {
    fs::path p = fs::path(d) / name;
    std::error_code ec;
    if (fs::exists(p, ec)) return p.string();
  }
  return {};
}

} // namespace xsk
