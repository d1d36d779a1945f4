#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcheck/expr.hpp"
#include "lcheck/hypotheses.hpp"
#include "lcheck/poles.hpp"
#include "lcheck/report.hpp"
#include "lcheck/rep.hpp"

namespace lcheck {

/// One factorization claim lhs = rhs, both sides as expressions.
struct Claim {
  std::string name;
  /// Local claims are identities of unramified coefficients and ignore
  /// the case hypotheses.
  bool local = false;
  std::vector<std::string> extra_hyp;  // statement lines added for this claim
  std::string lhs;
  std::string rhs;
};

/// A case of the Siegel-zero argument.
///
/// Text form, one statement per line (`#` starts a comment):
///
///   case 4.1
///   title Sym^3 of both bases non-cuspidal
///   hyp type pi tetrahedral
///   ell 6
///   k 10
///   maxdeg 2
///   def R = <expr>
///   claim <name> [local]
///   chyp <hypothesis line>         (applies to the preceding claim)
///   lhs <expr>
///   rhs <expr>
///   ledger <expr>
///
/// `@D` (the auxiliary product) and `@L` (Ad(pi) x Ad(pi') (x) chi) are
/// predefined; `def` adds further macros.
struct CaseSpec {
  std::string id;
  std::string title;
  std::vector<std::string> hyp;
  std::optional<int> ell;
  std::optional<int> k;
  std::optional<int> maxdeg;  // bound on GL(n) sizes of the factors of each rhs
  std::vector<std::pair<std::string, std::string>> defs;
  std::vector<Claim> claims;
  std::optional<std::string> ledger;

  Hypotheses hypotheses() const;
  MacroTable macros() const;
};

CaseSpec parse_case(std::string_view text);
std::string serialize_case(const CaseSpec& c);

/// The eleven built-in cases in the order 4.1 ... 5.3.3.
const std::vector<CaseSpec>& builtin_cases();
const CaseSpec& builtin_case(std::string_view id);  // throws Error on unknown id
std::vector<std::string> case_ids();

/// Identity mismatch of one claim: lhs - rhs after normalization.
struct Erratum {
  std::string claim;
  RepDelta delta;
  bool rebalances = false;  // rhs + delta verified equal to lhs
};

struct CaseReport {
  std::string id;
  std::vector<Verdict> verdicts;
  std::optional<PoleInterval> pole;
  std::vector<Erratum> errata;
  bool pass() const;
};

CaseReport verify_case(const CaseSpec& c);

/// Signed multiset as `+2 X, -4 Y`.
std::string format_delta(const RepDelta& d);

/// rhs of `claim` with `delta` added, as a normalized expression string.
std::string corrected_rhs(const CaseSpec& c, const Claim& claim, const RepDelta& delta);

struct BridgeReport {
  bool plethysm = false;  // Sym^2(Sym^3) = Sym^6 + Sym^2 (x) omega^2
  bool identity = false;  // zero residual
  std::string residual;
  std::int64_t lhs_degree = 0;
  std::int64_t rhs_degree = 0;
  std::vector<Verdict> verdicts;
  bool pass() const { return plethysm && identity && lhs_degree == rhs_degree; }
};

/// a(Ad(pi) x Sym^4(pi) chi w^-2) - a(Sym^4(pi) chi w^-2) equals the
/// coefficient of Sym^2(Sym^3(pi)) (x) chi w^-3.
BridgeReport verify_plethysm_bridge();

struct AllReport {
  std::vector<CaseReport> cases;
  BridgeReport bridge;
  std::vector<Verdict> taxonomy;
  bool pass() const;
};

AllReport run_all(unsigned threads = 1);

/// Case id covering the given base types and relation, or nullopt when
/// the assignment is inconsistent (twist-equivalent bases of different
/// types). Types must be one of Dihedral, Tetrahedral, Octahedral, General.
std::optional<std::string> classify(Gl2Type pi, Gl2Type pi_prime, TwistRelation rel);

/// Whether the declared hypotheses of `c` cover the assignment, up to
/// swapping pi and pi'.
bool case_matches(const CaseSpec& c, Gl2Type pi, Gl2Type pi_prime, TwistRelation rel);

/// Every consistent assignment matches exactly one built-in case and the
/// match agrees with classify().
std::vector<Verdict> check_taxonomy();

}  // namespace lcheck
