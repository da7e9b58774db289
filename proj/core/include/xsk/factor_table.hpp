#ifndef XSK_FACTOR_TABLE_HPP
#define XSK_FACTOR_TABLE_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace xsk {

// Complete prime factorization of 2^n - 1, loaded from a data file of the
// form "n=64" followed by one "prime" or "prime^multiplicity" per line
// ('#' starts a comment). verify() re-checks everything: each listed prime
// passes Miller-Rabin, and the product reconstructs 2^n - 1 exactly.
struct FactorTable {
  struct Entry {
    mpz_class prime;
    unsigned multiplicity = 1;
  };

  unsigned n = 0;
  std::vector<Entry> entries;

  static FactorTable load(const std::string& path);
  static FactorTable parse(std::istream& in, const std::string& origin);

  mpz_class modulus() const; // 2^n - 1
  void verify() const;       // throws std::runtime_error with the reason
};

// Search a few conventional locations for factors_<n>.txt; empty if absent.
std::string find_factor_file(unsigned n, const std::vector<std::string>& extra_dirs = {});

} // namespace xsk

#endif
