#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "xsk/factor_table.hpp"
#include "xsk/min_poly.hpp"
#include "xsk/period.hpp"

using namespace xsk;

namespace {

std::string data_path(unsigned n) {
  return std::string(XSK_TEST_DATA_DIR) + "/factors_" + std::to_string(n) + ".txt";
}

FactorTable table16() {
  return FactorTable::load(data_path(16));
}

bool has_triple(const std::vector<TripleRow>& rows, unsigned a, unsigned b, unsigned c) {
  return std::any_of(rows.begin(), rows.end(), [&](const TripleRow& r) {
    return r.a == a && r.b == b && r.c == c;
  });
}

} // namespace

TEST_CASE("shipped factor tables verify") {
  for (unsigned n : {8u, 16u, 24u, 32u, 64u, 1024u, 4096u}) {
    FactorTable t = FactorTable::load(data_path(n));
    CHECK(t.n == n);
    CHECK_NOTHROW(t.verify());
    CHECK(t.modulus() == (mpz_class(1) << n) - 1);
  }
  // the n=24 table is the one with a repeated prime
  FactorTable t24 = FactorTable::load(data_path(24));
  bool squared = std::any_of(t24.entries.begin(), t24.entries.end(),
                             [](const auto& e) { return e.multiplicity == 2; });
  CHECK(squared);
}

TEST_CASE("factor table parsing rejects broken input") {
  std::istringstream no_header("3\n5\n");
  CHECK_THROWS(FactorTable::parse(no_header, "test"));
  std::istringstream junk("n=4\n3\nfive\n");
  CHECK_THROWS(FactorTable::parse(junk, "test"));
  std::istringstream ok("# comment\nn=4\n3\n5\n");
  FactorTable t = FactorTable::parse(ok, "test");
  CHECK(t.n == 4);
  CHECK_NOTHROW(t.verify());

  // verify() catches a wrong product and a composite entry
  std::istringstream short_product("n=4\n3\n");
  CHECK_THROWS(FactorTable::parse(short_product, "t").verify());
  std::istringstream composite("n=4\n15\n");
  CHECK_THROWS(FactorTable::parse(composite, "t").verify());
}

TEST_CASE("find_factor_file searches the extra directory first") {
  CHECK(find_factor_file(64, {XSK_TEST_DATA_DIR}) == data_path(64));
  CHECK(find_factor_file(7, {XSK_TEST_DATA_DIR}).empty());
}

TEST_CASE("irreducibility on small knowns") {
  CHECK(is_irreducible(GF2Poly::parse("x^4 + x + 1")));
  CHECK(is_irreducible(GF2Poly::parse("x^4 + x^3 + x^2 + x + 1")));
  CHECK(is_irreducible(GF2Poly::parse("x^2 + x + 1")));
  CHECK(is_irreducible(GF2Poly::parse("x + 1")));
  CHECK(!is_irreducible(GF2Poly::parse("x^2 + 1")));        // (x+1)^2
  CHECK(!is_irreducible(GF2Poly::parse("x^4 + x^2 + 1")));  // square
  CHECK(!is_irreducible(GF2Poly::parse("x^5 + x^4 + x^3 + x^2 + x + 1")));
  CHECK(!is_irreducible(GF2Poly::parse("x^3 + x^2")));      // divisible by x
  CHECK(!is_irreducible(GF2Poly::one()));
  CHECK(!is_irreducible(GF2Poly::zero()));
}

TEST_CASE("primitivity separates irreducible from maximal-order") {
  std::istringstream f4("n=4\n3\n5\n");
  FactorTable t4 = FactorTable::parse(f4, "t4");
  t4.verify();
  // x^4+x+1 has a root of order 15; x^4+x^3+x^2+x+1 only of order 5
  CHECK(is_primitive(GF2Poly::parse("x^4 + x + 1"), t4));
  CHECK(!is_primitive(GF2Poly::parse("x^4 + x^3 + x^2 + x + 1"), t4));
  CHECK(!is_primitive(GF2Poly::parse("x^2 + x + 1"), t4)); // wrong degree
  CHECK(!is_primitive(GF2Poly::parse("x^4 + x^2 + 1"), t4));

  // the shipped 64-bit triple is full-period
  FactorTable t64 = FactorTable::load(data_path(64));
  MinPolyResult mp = min_poly(scalar_params(Variant::A1, 12, 25, 27));
  REQUIRE(mp.full_degree());
  CHECK(is_primitive(mp.poly, t64));
  // weight matches the published table entry
  CHECK(mp.poly.weight() == 31);
}

TEST_CASE("exhaustive 16-bit single-word search") {
  auto rows = enumerate_scalar(table16(), 16);
  CHECK(rows.size() == 30);
  CHECK(std::is_sorted(rows.begin(), rows.end()));
  CHECK(has_triple(rows, 1, 5, 2));
  CHECK(has_triple(rows, 1, 11, 3));
  CHECK(has_triple(rows, 1, 7, 4));
  for (const TripleRow& r : rows) CHECK(r.a <= r.c);

  // the certificate is the real thing: each listed triple walks the whole
  // nonzero state space, and every variant of it does too
  for (size_t i = 0; i < rows.size(); i += 7) {
    Params prm = scalar_params(Variant::A0, rows[i].a, rows[i].b, rows[i].c, 16);
    CHECK(brute_force_period(prm) == 65535);
  }
  Params other = scalar_params(Variant::A5, rows[0].a, rows[0].b, rows[0].c, 16);
  CHECK(brute_force_period(other) == 65535);

  // and a triple not on the list falls short
  CHECK(!has_triple(rows, 1, 1, 1));
  CHECK(brute_force_period(scalar_params(Variant::A0, 1, 1, 1, 16)) < 65535);

  CHECK_THROWS(enumerate_scalar(table16(), 8)); // table/width mismatch
}

TEST_CASE("exhaustive two-word block search at 8-bit words") {
  auto rows = enumerate_block(2, table16(), 8);
  std::vector<TripleRow> expect = {
      {3, 2, 5, 0}, {3, 2, 7, 0}, {5, 1, 2, 0}, {5, 1, 3, 0}, {7, 1, 2, 0}};
  REQUIRE(rows.size() == expect.size());
  for (size_t i = 0; i < rows.size(); i++) {
    CHECK(rows[i].a == expect[i].a);
    CHECK(rows[i].b == expect[i].b);
    CHECK(rows[i].c == expect[i].c);
    // brute force confirms the algebraic certificate
    Params prm = block_params(2, rows[i].a, rows[i].b, rows[i].c, 8);
    CHECK(brute_force_period(prm) == 65535);
  }
}

TEST_CASE("brute force walker rejects wide states") {
  CHECK_THROWS(brute_force_period(scalar_params(Variant::A0, 13, 7, 17)));
  CHECK_THROWS(brute_force_period(block_params(2, 5, 9, 11, 16))); // 32 bits
}
