#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eccbounds/graph.hpp"

namespace eccb {

enum class FamilyKind {
  complete,
  cycle,
  path,
  hypercube,
  prism,
  antiprism,
  pyramid,
  bipyramid,
  star,
  complete_multipartite,
  complete_minus_matching,
};

/// CLI name of a kind, e.g. "prism", "multipartite", "kminusmatching".
std::string_view family_name(FamilyKind kind) noexcept;
std::optional<FamilyKind> parse_family_kind(std::string_view name) noexcept;

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A named parametric family. Parameter meaning by kind:
///   complete/cycle/path/pyramid/bipyramid/star: {n}
///   hypercube/prism/antiprism: {m}
///   complete_multipartite: part sizes
///   complete_minus_matching: {n, j}
struct FamilySpec {
  FamilyKind kind = FamilyKind::complete;
  std::vector<int> params;

  /// "kind:p1,p2,..." e.g. "prism:6", "multipartite:2,3,3".
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;

  /// Throws FamilyError naming the violated constraint.
  void validate() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Vertex layouts:
///   cycle/path       0-1-...-(n-1) (closed for cycle)
///   hypercube        bit strings, adjacent when they differ in one bit
///   prism            outer cycle 0..m-1, inner cycle m..2m-1, spoke i~m+i
///   antiprism        as prism plus i~m+(i+1 mod m)
///   pyramid          cycle 0..n-1 and apex n
///   bipyramid        cycle 0..n-1 and nonadjacent apexes n, n+1
///   star             center 0, leaves 1..n-1
///   multipartite     parts as consecutive id blocks
///   kminusmatching   K_n without (0,1), (2,3), ..., (2j-2,2j-1)
Graph build(const FamilySpec& spec);

enum class ClosedFormStatus { confirmed, known_discrepancy, no_formula };

std::string_view to_string(ClosedFormStatus status) noexcept;

struct ClosedFormResult {
  std::optional<std::int64_t> predicted;
  ClosedFormStatus status = ClosedFormStatus::no_formula;
  std::string note;
};

/// The stated closed form for the family, when there is one. Pyramids
/// (every n) and the triangular bipyramid are on the built-in discrepancy
/// list: the stated value is still reported but flagged.
ClosedFormResult closed_form_xi_c(const FamilySpec& spec);

bool on_discrepancy_list(const FamilySpec& spec);

/// Closed form next to the value computed from the built graph.
struct FamilyEvaluation {
  FamilySpec spec;
  Graph graph;
  std::int64_t computed = 0;
  ClosedFormResult closed_form;

  bool matches() const { return closed_form.predicted && *closed_form.predicted == computed; }
};

FamilyEvaluation evaluate_family(const FamilySpec& spec);

}  // namespace eccb
