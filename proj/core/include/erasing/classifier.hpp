#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "erasing/budget.hpp"
#include "erasing/substitution.hpp"

namespace erasing {

enum class VerdictKind { kYes, kYesBounded, kNo, kNoEmpirical, kUnknown };

std::string_view verdict_name(VerdictKind kind);
VerdictKind verdict_from_name(std::string_view name);

struct Verdict {
  VerdictKind kind = VerdictKind::kUnknown;
  // Certificate or witness summary.
  std::string summary;
  std::vector<std::string> evidence;
  // Word-length budget for YesBounded, certified bound for a DAG Yes, else -1.
  std::int64_t bound = -1;

  bool positive() const { return kind == VerdictKind::kYes || kind == VerdictKind::kYesBounded; }
  bool proven_no() const { return kind == VerdictKind::kNo; }
  // "No (witness: 1)"
  std::string render() const;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

class ClassificationReport {
 public:
  // Throws std::logic_error when the verdicts contradict the hierarchy.
  ClassificationReport(Verdict oc, Verdict strongly, Verdict completely, Verdict boundedly);

  const Verdict& oc() const { return oc_; }
  const Verdict& strongly() const { return strongly_; }
  const Verdict& completely() const { return completely_; }
  const Verdict& boundedly() const { return boundedly_; }

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;

 private:
  Verdict oc_;
  Verdict strongly_;
  Verdict completely_;
  Verdict boundedly_;
};

struct VanishingResult {
  enum class Status { kVanished, kDiverged, kBudgetExceeded };
  Status status = Status::kBudgetExceeded;
  int order = 0;
  // Recurring word for kDiverged.
  FiniteWord repeated;

  bool ok() const { return status == Status::kVanished; }
};

// Least n with σⁿ(w) = ε in alternating mode.
VanishingResult vanishing_order(const Substitution& s, const FiniteWord& w, const Budget& budget = {});
// Throws BudgetExceeded or ClassificationUnsatisfied when the order is not found.
int vanishing_order_or_throw(const Substitution& s, const FiniteWord& w, const Budget& budget = {});

// Erasing extensions e_0..e_{n-1}: W_0 = w, W_{j+1} = σ(W_j e_j), W_n = ε.
struct ErasingChain {
  std::vector<FiniteWord> extensions;
  int length() const { return static_cast<int>(extensions.size()); }
};
std::optional<ErasingChain> find_erasing_chain(const Substitution& s, const FiniteWord& w, const Budget& budget);

Verdict check_optimality(const Substitution& s);
Verdict check_strongly_erasing(const Substitution& s, const Budget& budget = {}, int jobs = 1);
Verdict check_completely_erasing(const Substitution& s, const Budget& budget = {}, int jobs = 1);
// Pass the completely-erasing verdict when already computed.
Verdict check_boundedly_erasing(const Substitution& s, const Budget& budget = {}, const Verdict* completely = nullptr);

ClassificationReport classify(const Substitution& s, const Budget& budget = {}, int jobs = 1);

// Requirements of the dynamical constructions; throw ClassificationUnsatisfied
// or NotOptimal with the failing verdict.
void require_optimal(const Substitution& s);
void require_alternating(const Substitution& s);

}  // namespace erasing
