#include "lcheck/ingest.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "lcheck/errors.hpp"

namespace lcheck {

std::vector<std::int64_t> primes_up_to(std::int64_t x) {
  std::vector<std::int64_t> out;
  if (x < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(x) + 1, false);
  for (std::int64_t i = 2; i <= x; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= x; j += i) composite[j] = true;
  }
  return out;
}

namespace {

BigInt to_big(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-r) : r;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * b % m);
    b = static_cast<std::int64_t>(static_cast<__int128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::vector<BigInt> delta_series(std::int64_t n_max) {
  std::vector<BigInt> out(static_cast<std::size_t>(std::max<std::int64_t>(n_max, 0)) + 1, 0);
  if (n_max < 1) return out;
  const std::int64_t len = n_max;  // (E^3)^8 needed through q^(n_max - 1)
  // Jacobi: prod (1 - q^n)^3 = sum_k (-1)^k (2k + 1) q^(k(k+1)/2).
  std::vector<std::pair<std::int64_t, std::int64_t>> e3;
  for (std::int64_t k = 0; k * (k + 1) / 2 < len; ++k) {
    e3.emplace_back(k * (k + 1) / 2, (k % 2 == 0 ? 1 : -1) * (2 * k + 1));
  }
  std::vector<__int128> acc(len, 0), next(len, 0);
  acc[0] = 1;
  for (int round = 0; round < 8; ++round) {
    std::fill(next.begin(), next.end(), 0);
    for (std::int64_t i = 0; i < len; ++i) {
      if (acc[i] == 0) continue;
      for (const auto& [t, c] : e3) {
        if (i + t >= len) break;
        next[i + t] += acc[i] * c;
      }
    }
    acc.swap(next);
  }
  for (std::int64_t n = 1; n <= n_max; ++n) out[n] = to_big(acc[n - 1]);
  return out;
}

NewformData delta_eigenvalues(std::int64_t x) {
  NewformData d;
  d.name = "delta";
  d.weight = 12;
  d.level = 1;
  d.xmax = x;
  auto tau = delta_series(x);
  for (auto p : primes_up_to(x)) d.ap[p] = tau[p];
  return d;
}

std::int64_t x0_11_ap(std::int64_t p) {
  auto f = [](std::int64_t x, std::int64_t m) {
    return ((((x * x % m) * x - x * x - 10 * x - 20) % m) + m) % m;
  };
  if (p == 2) {
    std::int64_t affine = 0;
    for (std::int64_t x = 0; x < 2; ++x) {
      for (std::int64_t y = 0; y < 2; ++y) {
        if ((y * y + y) % 2 == f(x, 2)) ++affine;
      }
    }
    return p - affine;
  }
  // y^2 + y = f(x) has 1 + (1 + 4f | p) solutions in y.
  std::vector<signed char> leg(p, -1);
  leg[0] = 0;
  for (std::int64_t y = 1; y < p; ++y) leg[y * y % p] = 1;
  std::int64_t s = 0;
  for (std::int64_t x = 0; x < p; ++x) s += leg[(1 + 4 * f(x, p)) % p];
  return -s;
}

NewformData x0_11_eigenvalues(std::int64_t x) {
  NewformData d;
  d.name = "x0_11";
  d.weight = 2;
  d.level = 11;
  d.xmax = x;
  for (auto p : primes_up_to(x)) {
    if (p == 11) continue;
    d.ap[p] = x0_11_ap(p);
  }
  return d;
}

bool within_deligne(const BigInt& ap, std::int64_t p, int weight) {
  BigInt bound = 4;
  for (int i = 0; i < weight - 1; ++i) bound *= p;
  return ap * ap <= bound;
}

void deligne_check(const NewformData& d) {
  for (const auto& [p, a] : d.ap) {
    if (d.ramified(p)) continue;
    if (!within_deligne(a, p, d.weight)) {
      throw DataError(fmt::format("{}: a_{} = {} exceeds 2*{}^({}/2)", d.name, p, a.str(), p,
                                  d.weight - 1));
    }
  }
}

std::pair<std::complex<double>, std::complex<double>> satake_from_ap(const NewformData& d,
                                                                      std::int64_t p) {
  if (d.ramified(p)) throw DataError(fmt::format("{}: p = {} is ramified", d.name, p));
  auto it = d.ap.find(p);
  if (it == d.ap.end()) throw DataError(fmt::format("{}: missing a_{}", d.name, p));
  if (!within_deligne(it->second, p, d.weight)) {
    throw DataError(fmt::format("{}: a_{} violates the Deligne bound", d.name, p));
  }
  const long double a = it->second.convert_to<long double>();
  const long double x = a / std::pow(static_cast<long double>(p), (d.weight - 1) / 2.0L);
  const long double disc = std::max(0.0L, 1.0L - x * x / 4.0L);
  const double re = static_cast<double>(x / 2.0L);
  const double im = static_cast<double>(std::sqrt(disc));
  return {{re, im}, {re, -im}};
}

NewformData parse_eigenvalue_tsv(std::string_view text, std::string name) {
  NewformData d;
  d.name = std::move(name);
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool header = false;
  std::int64_t last = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!header) {
      std::istringstream h(line);
      std::string tag, lv;
      if (!(h >> tag >> d.weight >> lv >> d.level) || tag != "#weight" || lv != "level" ||
          d.weight < 1 || d.level < 1) {
        throw ParseError("expected header '#weight <k> level <N>'", lineno);
      }
      header = true;
      continue;
    }
    if (line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError("expected '<p>\\t<a_p>'", lineno);
    std::int64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoll(line.substr(0, tab), &used);
      if (used != tab) throw std::invalid_argument("p");
    } catch (const std::exception&) {
      throw ParseError(fmt::format("bad prime '{}'", line.substr(0, tab)), lineno);
    }
    if (p <= last) throw ParseError("primes must be strictly increasing", lineno);
    last = p;
    std::string val = line.substr(tab + 1);
    while (!val.empty() && (val.back() == ' ' || val.back() == '\t')) val.pop_back();
    try {
      if (val.empty() || val.find_first_not_of("+-0123456789") != std::string::npos) {
        throw std::invalid_argument("a_p");
      }
      d.ap[p] = BigInt(val);
    } catch (const std::exception&) {
      throw ParseError(fmt::format("bad eigenvalue '{}'", val), lineno);
    }
  }
  if (!header) throw ParseError("missing '#weight <k> level <N>' header");
  d.xmax = last;
  deligne_check(d);
  return d;
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DataError(fmt::format("cannot open '{}'", path));
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

NewformData load_eigenvalue_file(const std::string& path) {
  return parse_eigenvalue_tsv(slurp(path), path);
}

int kronecker_symbol(std::int64_t d, std::int64_t p) {
  if (p == 2) {
    if (d % 2 == 0) return 0;
    std::int64_t r = ((d % 8) + 8) % 8;
    return (r == 1 || r == 7) ? 1 : -1;
  }
  std::int64_t a = ((d % p) + p) % p;
  if (a == 0) return 0;
  return mod_pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

bool CharacterData::ramified(std::int64_t p) const {
  switch (kind) {
    case Kind::Trivial: return false;
    case Kind::Kronecker: return discriminant % p == 0;
    case Kind::Table: {
      auto it = table.find(p);
      return it != table.end() && std::abs(it->second) == 0.0;
    }
  }
  return false;
}

std::complex<double> CharacterData::value(std::int64_t p) const {
  switch (kind) {
    case Kind::Trivial: return 1.0;
    case Kind::Kronecker: return static_cast<double>(kronecker_symbol(discriminant, p));
    case Kind::Table: {
      auto it = table.find(p);
      if (it == table.end()) throw DataError(fmt::format("{}: no value at p = {}", name, p));
      return it->second;
    }
  }
  return 1.0;
}

CharacterData trivial_character() { return CharacterData{}; }

CharacterData kronecker_character(std::int64_t d) {
  std::int64_t r = ((d % 4) + 4) % 4;
  if (d == 0 || d == 1 || (r != 0 && r != 1)) {
    throw DataError(fmt::format("{} is not a nontrivial discriminant", d));
  }
  CharacterData c;
  c.kind = CharacterData::Kind::Kronecker;
  c.name = fmt::format("kronecker:{}", d);
  c.discriminant = d;
  return c;
}

CharacterData parse_character_table(std::string_view text, std::string name) {
  CharacterData c;
  c.kind = CharacterData::Kind::Table;
  c.name = std::move(name);
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream ls(line);
    std::int64_t p = 0;
    double re = 0, im = 0;
    if (!(ls >> p >> re >> im)) throw ParseError("expected '<p>\\t<re>\\t<im>'", lineno);
    std::complex<double> z(re, im);
    if (std::abs(z) != 0.0 && std::abs(std::abs(z) - 1.0) > 1e-9) {
      throw DataError(fmt::format("{}: |chi({})| = {} is not 1", c.name, p, std::abs(z)));
    }
    c.table[p] = z;
  }
  return c;
}

CharacterData load_character_file(const std::string& path) {
  return parse_character_table(slurp(path), path);
}

CharacterData character_from_spec(std::string_view spec) {
  if (spec == "trivial") return trivial_character();
  if (spec.rfind("kronecker:", 0) == 0) {
    auto rest = std::string(spec.substr(10));
    try {
      std::size_t used = 0;
      auto d = std::stoll(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("d");
      return kronecker_character(d);
    } catch (const std::logic_error&) {
      throw ParseError(fmt::format("bad discriminant in '{}'", spec));
    }
  }
  if (spec.rfind("file:", 0) == 0) return load_character_file(std::string(spec.substr(5)));
  throw ParseError(fmt::format("unknown character spec '{}'", spec));
}

NewformData newform_from_spec(std::string_view spec, std::int64_t x) {
  if (spec == "delta") return delta_eigenvalues(x);
  if (spec == "x0_11") return x0_11_eigenvalues(x);
  return load_eigenvalue_file(std::string(spec));
}

}  // namespace lcheck
