#include "lcheck/expr.hpp"

#include <cctype>
#include <stdexcept>

#include <fmt/format.h>

#include "lcheck/errors.hpp"
#include "lcheck/repalg.hpp"

namespace lcheck {

namespace {

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '\'' || c == '_';
}

class Parser {
 public:
  Parser(std::string_view text, const MacroTable& macros) : s_(text), macros_(macros) {}

  VirtualRep run() {
    auto v = expr();
    ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(std::string_view why) const {
    throw ParseError(fmt::format("col {}: {} in '{}'", pos_ + 1, why, s_));
  }

  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(std::string_view tok) {
    ws();
    return s_.substr(pos_, tok.size()) == tok;
  }

  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail(fmt::format("expected '{}'", tok));
  }

  bool peek_keyword(std::string_view kw) {
    if (!peek(kw)) return false;
    std::size_t end = pos_ + kw.size();
    return end >= s_.size() || !name_char(s_[end]);
  }

  std::string word() {
    ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && name_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::int64_t integer(bool signed_ok) {
    ws();
    std::size_t start = pos_;
    if (signed_ok && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }

  Base base() {
    auto w = word();
    if (w == "pi") return Base::Pi;
    if (w == "pi'") return Base::PiPrime;
    fail(fmt::format("expected pi or pi', got '{}'", w));
  }

  VirtualRep expr() {
    auto v = term();
    while (accept("(+)")) v.add(term());
    return v;
  }

  VirtualRep term() {
    ws();
    std::size_t save = pos_;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      auto n = integer(false);
      if (accept("*")) {
        if (n < 0) fail("negative multiplicity");
        return rsterm().scaled(n);
      }
      pos_ = save;
    }
    return rsterm();
  }

  VirtualRep rsterm() {
    auto v = unary();
    while (accept("(x)")) {
      std::size_t at = pos_;
      auto w = unary();
      v = pair_up(v, w, at);
    }
    return v;
  }

  VirtualRep pair_up(const VirtualRep& a, const VirtualRep& b, std::size_t at) {
    if (a.pole_shift() != 0 || b.pole_shift() != 0) {
      pos_ = at;
      fail("(s-1) cannot enter a Rankin-Selberg product");
    }
    VirtualRep out;
    for (const auto& [ea, na] : a.entries()) {
      for (const auto& [eb, nb] : b.entries()) {
        const auto* x = std::get_if<RepAtom>(&ea);
        const auto* y = std::get_if<RepAtom>(&eb);
        if (!x || !y) {
          pos_ = at;
          fail("triple Rankin-Selberg products are not supported");
        }
        out.add(RsPair{*x, *y}, na * nb);
      }
    }
    return out;
  }

  VirtualRep unary() {
    if (accept("~")) {
      std::size_t at = pos_;
      auto v = unary();
      try {
        return contragredient_raw(v);
      } catch (const NoDualityData& e) {
        pos_ = at;
        fail(e.what());
      }
    }
    return postfix();
  }

  VirtualRep postfix() {
    auto v = primary();
    while (peek_keyword("tw")) {
      pos_ += 2;
      auto c = charprod();
      if (v.pole_shift() != 0) fail("cannot twist (s-1)");
      VirtualRep out;
      for (const auto& [e, n] : v.entries()) {
        if (const auto* a = std::get_if<RepAtom>(&e)) {
          out.add(a->twisted(c), n);
        } else {
          const auto& p = std::get<RsPair>(e);
          out.add(RsPair{p.first, p.second.twisted(c)}, n);
        }
      }
      v = std::move(out);
    }
    return v;
  }

  FormalCharacter charprod() {
    ws();
    std::size_t start = pos_;
    for (;;) {
      ws();
      std::size_t ns = pos_;
      while (pos_ < s_.size() && name_char(s_[pos_])) ++pos_;
      if (pos_ == ns) fail("expected a character");
      if (accept("^")) integer(true);
      std::size_t save = pos_;
      if (!accept("*")) break;
      ws();
      if (pos_ >= s_.size() || !name_char(s_[pos_])) {
        pos_ = save;
        break;
      }
    }
    std::string_view text = s_.substr(start, pos_ - start);
    try {
      return parse_character(text);
    } catch (const std::invalid_argument& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  VirtualRep primary() {
    ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept("(s-1)")) {
      expect("^");
      return VirtualRep::pole_factor(integer(true));
    }
    if (accept("(")) {
      auto v = expr();
      expect(")");
      return v;
    }
    if (accept("@")) {
      std::size_t at = pos_;
      auto name = word();
      auto it = macros_.find(name);
      if (it == macros_.end()) {
        pos_ = at;
        fail(fmt::format("unknown macro '@{}'", name));
      }
      return it->second;
    }
    std::size_t start = pos_;
    auto w = word();
    if (w == "pi" || w == "pi'") {
      return VirtualRep::of(RepAtom::sym(w == "pi" ? Base::Pi : Base::PiPrime, 1));
    }
    if (w == "empty") return VirtualRep{};
    if (w == "Sym") {
      expect("^");
      auto m = integer(false);
      expect("(");
      auto b = base();
      expect(")");
      return VirtualRep::of(RepAtom::sym(b, static_cast<int>(m)));
    }
    if (w == "Ad" || w == "nu" || w == "Ind") {
      expect("(");
      auto b = base();
      expect(")");
      if (w == "Ad") return VirtualRep::of(RepAtom::adjoint(b));
      return VirtualRep::of(RepAtom::opaque(w == "nu" ? OpaqueLabel::Nu : OpaqueLabel::Ind, b));
    }
    pos_ = start;
    if (w.empty()) fail("expected an atom");
    return VirtualRep::of(RepAtom::character(charprod()));
  }

  std::string_view s_;
  const MacroTable& macros_;
  std::size_t pos_ = 0;
};

}  // namespace

VirtualRep parse_expression(std::string_view text, const MacroTable& macros) {
  return Parser(text, macros).run();
}

}  // namespace lcheck
