#include "lcheck/character.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>

namespace lcheck {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void axpy(Exponents& row, std::int64_t q, const Exponents& pivot) {
  if (q == 0) return;
  for (std::size_t j = 0; j < row.size(); ++j) row[j] -= q * pivot[j];
}

}  // namespace

std::vector<Exponents> hermite_normal_form(std::vector<Exponents> rows,
                                           std::size_t width) {
  for (auto& r : rows) {
    if (r.size() != width) throw std::invalid_argument("relation width mismatch");
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
    // Euclid on the column until a single nonzero entry remains at row r.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() ||
            std::llabs(rows[i][col]) < std::llabs(rows[best][col])) {
          best = i;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        axpy(rows[i], rows[i][col] / rows[r][col], rows[r]);
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0) {
      for (auto& x : rows[r]) x = -x;
    }
    for (std::size_t k = 0; k < r; ++k) {
      axpy(rows[k], floor_div(rows[k][col], rows[r][col]), rows[r]);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

CharacterGroup::CharacterGroup(std::vector<std::string> generators,
                               std::vector<Exponents> relations)
    : names_(std::move(generators)), relations_(std::move(relations)) {
  rows_ = hermite_normal_form(relations_, names_.size());
  for (const auto& row : rows_) {
    auto it = std::find_if(row.begin(), row.end(),
                           [](std::int64_t x) { return x != 0; });
    pivots_.push_back(static_cast<std::size_t>(it - row.begin()));
  }
}

std::shared_ptr<const CharacterGroup> CharacterGroup::standard() {
  static const auto group = [] {
    std::vector<std::string> names = {"chi", "omega", "omega'", "mu",  "mu'",
                                      "eta", "eta'",  "xi",     "xiF", "xiF'"};
    auto unit = [&](std::size_t i, std::int64_t n) {
      Exponents e(names.size(), 0);
      e[i] = n;
      return e;
    };
    std::vector<Exponents> rel = {unit(3, 3), unit(4, 3), unit(5, 2), unit(6, 2)};
    return std::make_shared<const CharacterGroup>(std::move(names), std::move(rel));
  }();
  return group;
}

std::shared_ptr<const CharacterGroup> CharacterGroup::with_relations(
    const std::vector<Exponents>& extra) const {
  auto rel = relations_;
  rel.insert(rel.end(), extra.begin(), extra.end());
  return std::make_shared<const CharacterGroup>(names_, std::move(rel));
}

std::optional<std::size_t> CharacterGroup::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Exponents CharacterGroup::reduce(Exponents v) const {
  if (v.size() != names_.size()) throw std::invalid_argument("character rank mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    axpy(v, floor_div(v[pivots_[k]], rows_[k][pivots_[k]]), rows_[k]);
  }
  return v;
}

std::optional<std::int64_t> CharacterGroup::generator_order(std::size_t i) const {
  auto pivot = std::find(pivots_.begin(), pivots_.end(), i);
  if (pivot == pivots_.end()) return std::nullopt;
  Exponents v(names_.size(), 0);
  for (std::int64_t k = 1; k <= 1'000'000; ++k) {
    v[i] = k;
    auto r = reduce(v);
    if (std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; })) {
      return k;
    }
  }
  return std::nullopt;
}

bool CharacterGroup::diagonal() const {
  return std::all_of(relations_.begin(), relations_.end(), [](const Exponents& r) {
    return std::count_if(r.begin(), r.end(), [](std::int64_t x) { return x != 0; }) <= 1;
  });
}

FormalCharacter::FormalCharacter(std::shared_ptr<const CharacterGroup> group)
    : group_(std::move(group)), exps_(group_->rank(), 0) {}

FormalCharacter::FormalCharacter(std::shared_ptr<const CharacterGroup> group, Exponents e)
    : group_(std::move(group)), exps_(group_->reduce(std::move(e))) {}

FormalCharacter FormalCharacter::generator(std::string_view name) {
  auto g = CharacterGroup::standard();
  auto i = g->index(name);
  if (!i) throw std::invalid_argument(fmt::format("unknown character '{}'", name));
  Exponents e(g->rank(), 0);
  e[*i] = 1;
  return FormalCharacter(g, std::move(e));
}

std::int64_t FormalCharacter::exponent(std::string_view name) const {
  auto i = group_->index(name);
  return i ? exps_[*i] : 0;
}

bool FormalCharacter::is_identity() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::int64_t x) { return x == 0; });
}

FormalCharacter FormalCharacter::inverse() const { return pow(-1); }

FormalCharacter FormalCharacter::pow(std::int64_t k) const {
  Exponents e = exps_;
  for (auto& x : e) x *= k;
  return FormalCharacter(group_, std::move(e));
}

FormalCharacter FormalCharacter::operator*(const FormalCharacter& o) const {
  FormalCharacter r = *this;
  r *= o;
  return r;
}

FormalCharacter& FormalCharacter::operator*=(const FormalCharacter& o) {
  if (o.exps_.size() != exps_.size()) throw std::invalid_argument("character rank mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += o.exps_[i];
  exps_ = group_->reduce(std::move(exps_));
  return *this;
}

FormalCharacter FormalCharacter::in(std::shared_ptr<const CharacterGroup> g) const {
  return FormalCharacter(std::move(g), exps_);
}

std::string FormalCharacter::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::int64_t e = exps_[i];
    if (e == 0) continue;
    // Show finite-order exponents symmetrically: mu^2 prints as mu^-1.
    if (auto n = group_->generator_order(i); n && group_->diagonal() && 2 * e > *n) e -= *n;
    if (!out.empty()) out += '*';
    out += group_->name(i);
    if (e != 1) out += fmt::format("^{}", e);
  }
  return out.empty() ? "1" : out;
}

FormalCharacter parse_character(std::string_view text) {
  auto g = CharacterGroup::standard();
  Exponents e(g->rank(), 0);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](std::string_view why) {
    throw std::invalid_argument(fmt::format("bad character '{}': {}", text, why));
  };
  bool first = true;
  for (;;) {
    skip_ws();
    if (!first) {
      if (pos >= text.size()) break;
      if (text[pos] != '*') fail("expected '*'");
      ++pos;
      skip_ws();
    }
    first = false;
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '\'')) {
      ++pos;
    }
    std::string_view tok = text.substr(start, pos - start);
    if (tok.empty()) fail("expected a generator");
    std::int64_t power = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      std::size_t ds = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      auto digits = std::string(text.substr(ds, pos - ds));
      if (digits.empty() || digits == "-" || digits == "+") fail("expected an exponent");
      power = std::stoll(digits);
    }
    if (tok == "1") continue;
    auto i = g->index(tok);
    if (!i) fail(fmt::format("unknown generator '{}'", tok));
    e[*i] += power;
  }
  return FormalCharacter(g, std::move(e));
}

}  // namespace lcheck
