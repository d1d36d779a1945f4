#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lcheck {

using BigInt = boost::multiprecision::cpp_int;

std::vector<std::int64_t> primes_up_to(std::int64_t x);

/// Hecke eigenvalues a_p of a holomorphic newform with trivial nebentypus.
struct NewformData {
  std::string name;
  int weight = 0;
  std::int64_t level = 1;
  std::int64_t xmax = 0;
  std::map<std::int64_t, BigInt> ap;

  bool ramified(std::int64_t p) const { return level % p == 0; }
};

/// q * prod (1 - q^n)^24 up to q^n_max, via the Jacobi cube (E^3)^8.
std::vector<BigInt> delta_series(std::int64_t n_max);

NewformData delta_eigenvalues(std::int64_t x);

/// Weight-2 level-11 form from point counts on y^2 + y = x^3 - x^2 - 10x - 20.
NewformData x0_11_eigenvalues(std::int64_t x);
std::int64_t x0_11_ap(std::int64_t p);

/// Deligne bound |a_p| <= 2 p^((k-1)/2), checked exactly. Throws DataError
/// naming the first offending prime.
void deligne_check(const NewformData& d);
bool within_deligne(const BigInt& ap, std::int64_t p, int weight);

/// Roots of z^2 - (a_p / p^((k-1)/2)) z + 1.
std::pair<std::complex<double>, std::complex<double>> satake_from_ap(const NewformData& d,
                                                                      std::int64_t p);

/// `#weight <k> level <N>` header, then `<p>\t<a_p>` lines sorted by p.
NewformData parse_eigenvalue_tsv(std::string_view text, std::string name = "file");
NewformData load_eigenvalue_file(const std::string& path);

/// Character values at primes; value 0 marks a ramified prime.
struct CharacterData {
  enum class Kind : std::uint8_t { Trivial, Kronecker, Table };
  Kind kind = Kind::Trivial;
  std::string name = "trivial";
  std::int64_t discriminant = 1;
  std::map<std::int64_t, std::complex<double>> table;

  bool ramified(std::int64_t p) const;
  std::complex<double> value(std::int64_t p) const;
};

int kronecker_symbol(std::int64_t d, std::int64_t p);
CharacterData trivial_character();
CharacterData kronecker_character(std::int64_t d);
/// Lines `<p>\t<re>\t<im>`.
CharacterData parse_character_table(std::string_view text, std::string name = "table");
CharacterData load_character_file(const std::string& path);

/// `trivial`, `kronecker:<D>` or `file:<path>`.
CharacterData character_from_spec(std::string_view spec);
/// `delta`, `x0_11` or a TSV path.
NewformData newform_from_spec(std::string_view spec, std::int64_t x);

}  // namespace lcheck
