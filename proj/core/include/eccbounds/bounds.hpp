#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eccbounds/graph.hpp"
#include "eccbounds/invariants.hpp"
#include "eccbounds/rational.hpp"

namespace eccb {

/// One inequality on the modified eccentric connectivity index. _L bounds
/// it from below, _U from above. `stated` ids keep the original forms,
/// which are not asserted; `corrected`/`derived` ids are the asserted fixes.
enum class BoundId : std::uint8_t {
  T1i_L,
  T1i_U,
  T1ii_stated_L,
  T1ii_stated_U,
  T1ii_corrected_L,
  T1ii_corrected_U,
  T1iii_L,
  T1iii_U,
  T2_U,
  C1_U,
  T3_U,
  T4_U,
  T5i_L,
  T5ii_L,
  T6_L,
  T7_stated_L,
  T7_derived_L,
  T8_L,
  T9_L,
  T10_L,
  T11_L,
  C2_L,
  T12_NG,
  T13_L,
};

inline constexpr std::size_t kBoundCount = 24;

std::span<const BoundId> all_bound_ids() noexcept;
std::string_view to_string(BoundId id) noexcept;
std::optional<BoundId> parse_bound_id(std::string_view name) noexcept;

/// Exact id, or a group prefix: "T1ii" selects all four T1ii ids,
/// "T13" selects T13_L. Empty result if nothing matches.
std::vector<BoundId> bound_ids_matching(std::string_view token);

enum class EqualityPredicate : std::uint8_t {
  regular,
  self_centered,
  complete,
  star,
  path,
  p2,
  p3,
  complete_minus_matching,
  all_ecc_two,
  regular_and_self_centered,
};

std::string_view to_string(EqualityPredicate p) noexcept;

/// Decided from the graph and its invariants alone. For a graph that is not
/// connected the result is whatever the degree/eccentricity test gives;
/// bound checks only ever pass connected graphs.
bool equality_predicate(const Graph& g, const InvariantSet& inv, EqualityPredicate p);

enum class Relation : std::uint8_t { at_least, at_most };

/// How lhs and rhs relate to the inequality as written: plain values,
/// both sides squared (square-root bounds), or both sides raised to the
/// maximum degree (the fractional-exponent bound).
enum class Form : std::uint8_t { plain, squared, powered };

struct BoundInfo {
  BoundId id;
  Relation relation;
  Form form;
  /// Provable as stated here; any violation is a failure.
  bool asserted;
  int min_order;
  /// Any-of mask over EqualityPredicate bits; 0 when no condition is stated.
  std::uint16_t stated_condition;
  /// Second candidate equality condition, 0 if none.
  std::uint16_t alt_condition;
  std::string_view formula;
};

const BoundInfo& bound_info(BoundId id) noexcept;

/// Human-readable any-of condition, e.g. "COMPLETE|COMPLETE_MINUS_MATCHING|PATH".
std::string condition_to_string(std::uint16_t mask);

class BoundPreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BoundCheck {
  BoundId id = BoundId::T1i_L;
  bool applicable = true;
  Form form = Form::plain;
  BigRational lhs;
  BigRational rhs;
  bool holds = true;
  bool is_equality = false;
  /// Set only when a condition is stated for this bound.
  std::optional<bool> predicted_equality;
  std::optional<bool> agreement;
  std::optional<bool> alt_predicted_equality;
  std::optional<bool> alt_agreement;
  std::string note;
};

/// Flags only; what sweeps accumulate.
struct BoundOutcome {
  bool applicable = true;
  bool holds = true;
  bool is_equality = false;
  bool radicand_negative = false;
  std::optional<bool> predicted_equality;
  std::optional<bool> alt_predicted_equality;
};

/// Throws BoundPreconditionError when g has fewer vertices than the bound
/// needs (division by n-1, n >= 3 for T13_L, n >= 4 for T12_NG).
/// T12_NG is delegated to check_nordhaus_gaddum.
BoundCheck check(const InvariantSet& inv, const Graph& g, BoundId id);

BoundOutcome evaluate(const InvariantSet& inv, const Graph& g, BoundId id);

/// One entry per id except T12_NG, in enum order. Ids whose order
/// precondition fails come back with applicable=false and a note.
std::vector<BoundCheck> check_all(const Graph& g);
std::vector<BoundCheck> check_all(const Graph& g, const InvariantSet& inv);

/// xi_c(G) + xi_c(complement) >= 2 (M1(G) + M1(complement)). Inapplicable
/// (not an error) when n < 4 or the complement is disconnected. Throws
/// GraphError if g itself is disconnected.
BoundCheck check_nordhaus_gaddum(const Graph& g);
BoundCheck check_nordhaus_gaddum(const Graph& g, const InvariantSet& inv);
BoundOutcome evaluate_nordhaus_gaddum(const Graph& g, const InvariantSet& inv);

/// "1296 (squared)", "13/3", ...
std::string format_side(const BigRational& value, Form form);

}  // namespace eccb
