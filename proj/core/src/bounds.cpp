#include "eccbounds/bounds.hpp"

#include <array>
#include <stdexcept>

namespace eccb {

namespace {

constexpr std::uint16_t bit(EqualityPredicate p) {
  return static_cast<std::uint16_t>(1u << static_cast<unsigned>(p));
}

using enum BoundId;
using P = EqualityPredicate;

constexpr std::uint16_t kNone = 0;
constexpr std::uint16_t kRegSelfCentered = bit(P::regular_and_self_centered);

// clang-format off
constexpr std::array<BoundInfo, kBoundCount> kBounds{{
  {T1i_L,            Relation::at_least, Form::plain,   true,  1, bit(P::self_centered), kNone, "r*M1 <= xi_c"},
  {T1i_U,            Relation::at_most,  Form::plain,   true,  1, bit(P::self_centered), kNone, "xi_c <= d*M1"},
  {T1ii_stated_L,    Relation::at_least, Form::plain,   false, 1, kRegSelfCentered,      kNone, "r*delta^2 <= xi_c (as stated)"},
  {T1ii_stated_U,    Relation::at_most,  Form::plain,   false, 1, kRegSelfCentered,      kNone, "xi_c <= d*Delta^2 (as stated)"},
  {T1ii_corrected_L, Relation::at_least, Form::plain,   true,  1, kRegSelfCentered,      kNone, "n*r*delta^2 <= xi_c"},
  {T1ii_corrected_U, Relation::at_most,  Form::plain,   true,  1, kRegSelfCentered,      kNone, "xi_c <= n*d*Delta^2"},
  {T1iii_L,          Relation::at_least, Form::plain,   true,  1, bit(P::regular),       kNone, "delta^2*theta <= xi_c"},
  {T1iii_U,          Relation::at_most,  Form::plain,   true,  1, bit(P::regular),       kNone, "xi_c <= Delta^2*theta"},
  {T2_U,             Relation::at_most,  Form::plain,   true,  1, bit(P::regular),       kNone, "xi_c <= (2m - delta(n-1))*theta + (delta-1)*xi^c"},
  {C1_U,             Relation::at_most,  Form::plain,   true,  1, bit(P::complete),      kNone, "xi_c <= (2m - delta(n-1))(n^2-2m) + (2mn-M1)(delta-1)"},
  {T3_U,             Relation::at_most,  Form::squared, true,  1, kRegSelfCentered,      kNone, "xi_c^2 <= ((Delta^2+delta^2)*M1 - n*Delta^2*delta^2)*E1"},
  {T4_U,             Relation::at_most,  Form::plain,   true,  1,
                     static_cast<std::uint16_t>(bit(P::complete) | bit(P::complete_minus_matching) | bit(P::path)),
                                                                                         kNone, "xi_c <= n*M1 - 2*M2"},
  {T5i_L,            Relation::at_least, Form::plain,   true,  1, bit(P::complete),      kNone, "M1 <= xi_c"},
  {T5ii_L,           Relation::at_least, Form::plain,   true,  1, bit(P::p3),            kNone, "xi^c <= xi_c"},
  {T6_L,             Relation::at_least, Form::plain,   true,  2, kRegSelfCentered,      kNone, "(Delta^2*delta^2*E1 + (r*d/n)*M1^2)/(d*Delta^2 + r*delta^2) <= xi_c"},
  {T7_stated_L,      Relation::at_least, Form::squared, false, 1, kNone,                 kNone, "M1*E1/n - (n^2/4)(d*Delta^2 + r*delta^2) <= xi_c^2 (as stated)"},
  {T7_derived_L,     Relation::at_least, Form::squared, true,  1, kNone,                 kNone, "E1*M1^2/n - (n^2/4)(d*Delta^2 - r*delta^2)^2 <= xi_c^2"},
  {T8_L,             Relation::at_least, Form::plain,   true,  2, bit(P::complete),      kNone, "2*M2/(n-1) <= xi_c"},
  {T9_L,             Relation::at_least, Form::plain,   true,  2, bit(P::p2),            kNone, "2*M1 - 2*M2/(n-1) <= xi_c"},
  {T10_L,            Relation::at_least, Form::powered, true,  2, bit(P::p2),            bit(P::regular), "delta^delta * (xi^c)^Delta <= xi_c^Delta"},
  {T11_L,            Relation::at_least, Form::plain,   true,  2, bit(P::complete),      kNone, "2*delta^2*W/(n-1) <= xi_c"},
  {C2_L,             Relation::at_least, Form::plain,   true,  2, bit(P::complete),      kNone, "2*delta^2*H/(n-1) <= xi_c"},
  {T12_NG,           Relation::at_least, Form::plain,   true,  4, bit(P::all_ecc_two),   kNone, "2*(M1(G) + M1(~G)) <= xi_c(G) + xi_c(~G)"},
  {T13_L,            Relation::at_least, Form::plain,   true,  3, bit(P::star),          kNone, "(2n-1)(n-1) <= xi_c"},
}};
// clang-format on

constexpr std::array<std::string_view, kBoundCount> kNames{
    "T1i_L",        "T1i_U",  "T1ii_stated_L", "T1ii_stated_U", "T1ii_corrected_L",
    "T1ii_corrected_U", "T1iii_L", "T1iii_U", "T2_U",  "C1_U",
    "T3_U",         "T4_U",   "T5i_L",         "T5ii_L",        "T6_L",
    "T7_stated_L",  "T7_derived_L", "T8_L",    "T9_L",          "T10_L",
    "T11_L",        "C2_L",   "T12_NG",        "T13_L",
};

constexpr std::array<BoundId, kBoundCount> kIds = [] {
  std::array<BoundId, kBoundCount> ids{};
  for (std::size_t i = 0; i < kBoundCount; ++i) {
    ids[i] = static_cast<BoundId>(i);
  }
  return ids;
}();

constexpr bool table_is_ordered() {
  for (std::size_t i = 0; i < kBoundCount; ++i) {
    if (kBounds[i].id != static_cast<BoundId>(i)) {
      return false;
    }
  }
  return true;
}
static_assert(table_is_ordered());

constexpr std::array<std::string_view, 10> kPredicateNames{
    "REGULAR", "SELF_CENTERED", "COMPLETE", "STAR", "PATH", "P2", "P3",
    "COMPLETE_MINUS_MATCHING", "ALL_ECC_TWO", "REGULAR_AND_SELF_CENTERED",
};

bool any_of(const Graph& g, const InvariantSet& inv, std::uint16_t mask) {
  for (std::size_t p = 0; p < kPredicateNames.size(); ++p) {
    if ((mask >> p) & 1u && equality_predicate(g, inv, static_cast<EqualityPredicate>(p))) {
      return true;
    }
  }
  return false;
}

template <class Num>
Num from_rational(const Rational& r) {
  if constexpr (std::is_same_v<Num, Rational>) {
    return r;
  } else {
    return r.to_big();
  }
}

template <class Num>
struct Sides {
  Num lhs;
  Num rhs;
};

/// Both sides of the inequality in the bound's comparison form.
template <class Num>
Sides<Num> sides(BoundId id, const InvariantSet& s) {
  const Num n(s.n);
  const Num m(s.m);
  const Num max_deg(s.max_degree);
  const Num min_deg(s.min_degree);
  const Num r(s.radius);
  const Num d(s.diameter);
  const Num theta(s.total_eccentricity);
  const Num m1(s.first_zagreb);
  const Num m2(s.second_zagreb);
  const Num e1(s.first_zagreb_eccentricity);
  const Num w(s.wiener);
  const Num xi(s.xi_c);
  const Num xi_ecc(s.eccentric_connectivity);
  const Num max_sq = max_deg * max_deg;
  const Num min_sq = min_deg * min_deg;
  const Num one(1);
  const Num two(2);

  switch (id) {
    case T1i_L: return {xi, r * m1};
    case T1i_U: return {xi, d * m1};
    case T1ii_stated_L: return {xi, r * min_sq};
    case T1ii_stated_U: return {xi, d * max_sq};
    case T1ii_corrected_L: return {xi, n * r * min_sq};
    case T1ii_corrected_U: return {xi, n * d * max_sq};
    case T1iii_L: return {xi, min_sq * theta};
    case T1iii_U: return {xi, max_sq * theta};
    case T2_U: return {xi, (two * m - min_deg * (n - one)) * theta + (min_deg - one) * xi_ecc};
    case C1_U:
      return {xi, (two * m - min_deg * (n - one)) * (n * n - two * m) +
                      (two * m * n - m1) * (min_deg - one)};
    case T3_U: return {xi * xi, ((max_sq + min_sq) * m1 - n * max_sq * min_sq) * e1};
    case T4_U: return {xi, n * m1 - two * m2};
    case T5i_L: return {xi, m1};
    case T5ii_L: return {xi, xi_ecc};
    case T6_L:
      return {xi, (max_sq * min_sq * e1 + r * d * m1 * m1 / n) / (d * max_sq + r * min_sq)};
    case T7_stated_L:
      return {xi * xi, m1 * e1 / n - n * n / Num(4) * (d * max_sq + r * min_sq)};
    case T7_derived_L: {
      const Num spread = d * max_sq - r * min_sq;
      return {xi * xi, e1 * m1 * m1 / n - n * n / Num(4) * spread * spread};
    }
    case T8_L: return {xi, two * m2 / (n - one)};
    case T9_L: return {xi, two * m1 - two * m2 / (n - one)};
    case T10_L: {
      const auto power = static_cast<unsigned>(s.max_degree);
      return {ipow(xi, power), ipow(min_deg, static_cast<unsigned>(s.min_degree)) * ipow(xi_ecc, power)};
    }
    case T11_L: return {xi, two * min_sq * w / (n - one)};
    case C2_L: return {xi, two * min_sq * from_rational<Num>(s.harary) / (n - one)};
    case T13_L: return {xi, (two * n - one) * (n - one)};
    case T12_NG: break;
  }
  throw std::logic_error("no single-graph comparison for T12_NG");
}

template <class Num>
int compare3(const Num& a, const Num& b) {
  return a < b ? -1 : (b < a ? 1 : 0);
}

struct Decision {
  bool holds;
  bool is_equality;
  bool radicand_negative;
};

template <class Num>
Decision decide(const BoundInfo& info, const Sides<Num>& s) {
  if (info.form == Form::squared && s.rhs < Num(0)) {
    return {true, false, true};
  }
  const int cmp = compare3(s.lhs, s.rhs);
  const bool holds = info.relation == Relation::at_least ? cmp >= 0 : cmp <= 0;
  return {holds, cmp == 0, false};
}

/// Tries 128-bit rationals first, big rationals if anything overflows.
template <class OnSides>
auto with_exact_sides(BoundId id, const InvariantSet& inv, OnSides&& on_sides) {
  try {
    return on_sides(sides<Rational>(id, inv));
  } catch (const std::overflow_error&) {
    return on_sides(sides<BigRational>(id, inv));
  }
}

void require_order(const BoundInfo& info, int n) {
  if (n < info.min_order) {
    throw BoundPreconditionError(std::string(to_string(info.id)) + " requires n >= " +
                                 std::to_string(info.min_order) + ", got n = " + std::to_string(n));
  }
}

void append_note(std::string& note, const std::string& text) {
  if (!note.empty()) {
    note += "; ";
  }
  note += text;
}

void fill_agreement(BoundCheck& c, const BoundOutcome& o, const BoundInfo& info) {
  c.predicted_equality = o.predicted_equality;
  c.alt_predicted_equality = o.alt_predicted_equality;
  if (o.predicted_equality) {
    c.agreement = (*o.predicted_equality == o.is_equality);
    if (!*c.agreement) {
      append_note(c.note, o.is_equality
                              ? "equality without the stated condition " + condition_to_string(info.stated_condition)
                              : "stated condition " + condition_to_string(info.stated_condition) +
                                    " holds but the bound is strict");
    }
  }
  if (o.alt_predicted_equality) {
    c.alt_agreement = (*o.alt_predicted_equality == o.is_equality);
    if (!*c.alt_agreement) {
      append_note(c.note, o.is_equality
                              ? "equality without the alternate condition " + condition_to_string(info.alt_condition)
                              : "alternate condition " + condition_to_string(info.alt_condition) +
                                    " holds but the bound is strict");
    }
  }
}

}  // namespace

std::span<const BoundId> all_bound_ids() noexcept { return kIds; }

std::string_view to_string(BoundId id) noexcept { return kNames[static_cast<std::size_t>(id)]; }

std::optional<BoundId> parse_bound_id(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kBoundCount; ++i) {
    if (kNames[i] == name) {
      return static_cast<BoundId>(i);
    }
  }
  return std::nullopt;
}

std::vector<BoundId> bound_ids_matching(std::string_view token) {
  if (const auto exact = parse_bound_id(token)) {
    return {*exact};
  }
  std::vector<BoundId> out;
  for (std::size_t i = 0; i < kBoundCount; ++i) {
    if (kNames[i].starts_with(token) && kNames[i].size() > token.size() &&
        kNames[i][token.size()] == '_') {
      out.push_back(static_cast<BoundId>(i));
    }
  }
  return out;
}

std::string_view to_string(EqualityPredicate p) noexcept {
  return kPredicateNames[static_cast<std::size_t>(p)];
}

std::string condition_to_string(std::uint16_t mask) {
  std::string out;
  for (std::size_t p = 0; p < kPredicateNames.size(); ++p) {
    if ((mask >> p) & 1u) {
      if (!out.empty()) {
        out += '|';
      }
      out += kPredicateNames[p];
    }
  }
  return out.empty() ? "NONE" : out;
}

const BoundInfo& bound_info(BoundId id) noexcept { return kBounds[static_cast<std::size_t>(id)]; }

bool equality_predicate(const Graph& g, const InvariantSet& inv, EqualityPredicate p) {
  const int n = inv.n;
  const std::int64_t complete_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
  switch (p) {
    case P::regular:
      return inv.max_degree == inv.min_degree;
    case P::self_centered:
      return inv.radius == inv.diameter;
    case P::complete:
      return inv.m == complete_edges;
    case P::star:
      return n >= 2 && inv.m == n - 1 && inv.max_degree == n - 1;
    case P::path:
      if (n <= 2) {
        return inv.m == n - 1;
      }
      return inv.m == n - 1 && inv.max_degree <= 2 && is_connected(g);
    case P::p2:
      return n == 2 && inv.m == 1;
    case P::p3:
      return n == 3 && inv.m == 2;
    case P::complete_minus_matching:
      // Complement has max degree 1 and at least one edge.
      return inv.m < complete_edges && inv.min_degree >= n - 2;
    case P::all_ecc_two:
      return inv.radius == 2 && inv.diameter == 2;
    case P::regular_and_self_centered:
      return inv.max_degree == inv.min_degree && inv.radius == inv.diameter;
  }
  return false;
}

BoundOutcome evaluate(const InvariantSet& inv, const Graph& g, BoundId id) {
  if (id == T12_NG) {
    return evaluate_nordhaus_gaddum(g, inv);
  }
  const BoundInfo& info = bound_info(id);
  BoundOutcome o;
  if (inv.n < info.min_order) {
    o.applicable = false;
    return o;
  }
  const Decision dec = with_exact_sides(id, inv, [&](const auto& s) { return decide(info, s); });
  o.holds = dec.holds;
  o.is_equality = dec.is_equality;
  o.radicand_negative = dec.radicand_negative;
  if (info.stated_condition != kNone) {
    o.predicted_equality = any_of(g, inv, info.stated_condition);
  }
  if (info.alt_condition != kNone) {
    o.alt_predicted_equality = any_of(g, inv, info.alt_condition);
  }
  return o;
}

BoundCheck check(const InvariantSet& inv, const Graph& g, BoundId id) {
  if (id == T12_NG) {
    return check_nordhaus_gaddum(g, inv);
  }
  const BoundInfo& info = bound_info(id);
  require_order(info, inv.n);

  BoundCheck c;
  c.id = id;
  c.form = info.form;
  with_exact_sides(id, inv, [&](const auto& s) {
    using Num = std::decay_t<decltype(s.lhs)>;
    if constexpr (std::is_same_v<Num, Rational>) {
      c.lhs = s.lhs.to_big();
      c.rhs = s.rhs.to_big();
    } else {
      c.lhs = s.lhs;
      c.rhs = s.rhs;
    }
    return 0;
  });
  const BoundOutcome o = evaluate(inv, g, id);
  c.holds = o.holds;
  c.is_equality = o.is_equality;
  if (o.radicand_negative) {
    append_note(c.note, "radicand negative; bound holds trivially");
  }
  if (!c.holds) {
    append_note(c.note, info.asserted ? "VIOLATION of a provable bound" : "stated form violated");
  }
  fill_agreement(c, o, info);
  return c;
}

std::vector<BoundCheck> check_all(const Graph& g) { return check_all(g, compute_all(g)); }

std::vector<BoundCheck> check_all(const Graph& g, const InvariantSet& inv) {
  std::vector<BoundCheck> out;
  out.reserve(kBoundCount - 1);
  for (const BoundId id : kIds) {
    if (id == T12_NG) {
      continue;
    }
    const BoundInfo& info = bound_info(id);
    if (inv.n < info.min_order) {
      BoundCheck skipped;
      skipped.id = id;
      skipped.form = info.form;
      skipped.applicable = false;
      skipped.note = "skipped: requires n >= " + std::to_string(info.min_order);
      out.push_back(std::move(skipped));
      continue;
    }
    out.push_back(check(inv, g, id));
  }
  return out;
}

namespace {

struct NordhausGaddum {
  BoundOutcome outcome;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::string note;
};

NordhausGaddum nordhaus_gaddum(const Graph& g, const InvariantSet& inv) {
  NordhausGaddum ng;
  if (inv.n < 4) {
    ng.outcome.applicable = false;
    ng.note = "inapplicable: requires n >= 4";
    return ng;
  }
  const Graph comp = complement(g);
  if (!is_connected(comp)) {
    ng.outcome.applicable = false;
    ng.note = "inapplicable: complement is disconnected";
    return ng;
  }
  const InvariantSet cinv = compute_all(comp);
  ng.lhs = inv.xi_c + cinv.xi_c;
  ng.rhs = 2 * (inv.first_zagreb + cinv.first_zagreb);
  ng.outcome.holds = ng.lhs >= ng.rhs;
  ng.outcome.is_equality = ng.lhs == ng.rhs;
  ng.outcome.predicted_equality = equality_predicate(g, inv, P::all_ecc_two) &&
                                  equality_predicate(comp, cinv, P::all_ecc_two);
  return ng;
}

}  // namespace

BoundOutcome evaluate_nordhaus_gaddum(const Graph& g, const InvariantSet& inv) {
  return nordhaus_gaddum(g, inv).outcome;
}

BoundCheck check_nordhaus_gaddum(const Graph& g) {
  if (!is_connected(g)) {
    throw GraphError(GraphErrc::disconnected, "Nordhaus-Gaddum check needs a connected graph");
  }
  return check_nordhaus_gaddum(g, compute_all(g));
}

BoundCheck check_nordhaus_gaddum(const Graph& g, const InvariantSet& inv) {
  const NordhausGaddum ng = nordhaus_gaddum(g, inv);
  BoundCheck c;
  c.id = T12_NG;
  c.applicable = ng.outcome.applicable;
  c.note = ng.note;
  if (!c.applicable) {
    return c;
  }
  c.lhs = ng.lhs;
  c.rhs = ng.rhs;
  c.holds = ng.outcome.holds;
  c.is_equality = ng.outcome.is_equality;
  if (!c.holds) {
    append_note(c.note, "VIOLATION of a provable bound");
  }
  fill_agreement(c, ng.outcome, bound_info(T12_NG));
  return c;
}

std::string format_side(const BigRational& value, Form form) {
  std::string out = boost::multiprecision::numerator(value).str();
  if (boost::multiprecision::denominator(value) != 1) {
    out += "/" + boost::multiprecision::denominator(value).str();
  }
  switch (form) {
    case Form::plain: break;
    case Form::squared: out += " (squared)"; break;
    case Form::powered: out += " (raised to max degree)"; break;
  }
  return out;
}

}  // namespace eccb
