#include "eccbounds/report_io.hpp"

#include <cstdio>
#include <sstream>

#include "eccbounds/graph6.hpp"

namespace eccb {

namespace {

using json = nlohmann::ordered_json;

std::string decimal(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", r.to_double());
  return buf;
}

json int128_json(Int128 v) {
  if (v >= INT64_MIN && v <= INT64_MAX) {
    return static_cast<std::int64_t>(v);
  }
  return to_string(v);
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json witness_json(const WitnessList& w) {
  return json{{"count", w.count}, {"witnesses", w.witnesses}};
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) {
    return field;
  }
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  return out + "\"";
}

std::string csv_bool(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; }

std::string_view form_name(Form f) {
  switch (f) {
    case Form::plain: return "plain";
    case Form::squared: return "squared";
    case Form::powered: return "powered";
  }
  return "plain";
}

}  // namespace

json to_json(const InvariantSet& inv) {
  const Rational h = inv.harary.reduced();
  json j;
  j["n"] = inv.n;
  j["m"] = inv.m;
  j["max_degree"] = inv.max_degree;
  j["min_degree"] = inv.min_degree;
  j["radius"] = inv.radius;
  j["diameter"] = inv.diameter;
  j["total_eccentricity"] = inv.total_eccentricity;
  j["first_zagreb"] = inv.first_zagreb;
  j["second_zagreb"] = inv.second_zagreb;
  j["first_zagreb_eccentricity"] = inv.first_zagreb_eccentricity;
  j["second_zagreb_eccentricity"] = inv.second_zagreb_eccentricity;
  j["wiener"] = inv.wiener;
  j["harary"] = {{"num", int128_json(h.numerator())},
                 {"den", int128_json(h.denominator())},
                 {"decimal", decimal(h)}};
  j["xi_c"] = inv.xi_c;
  j["eccentric_connectivity"] = inv.eccentric_connectivity;
  j["profile"] = {{"degree", inv.profile.degree},
                  {"neighbor_degree_sum", inv.profile.neighbor_degree_sum},
                  {"eccentricity", inv.profile.eccentricity},
                  {"distance_sum", inv.profile.distance_sum}};
  return j;
}

json to_json(const BoundCheck& c) {
  json j;
  j["id"] = std::string(to_string(c.id));
  j["applicable"] = c.applicable;
  j["form"] = std::string(form_name(c.form));
  if (c.applicable) {
    j["lhs"] = format_side(c.lhs, c.form);
    j["rhs"] = format_side(c.rhs, c.form);
  } else {
    j["lhs"] = nullptr;
    j["rhs"] = nullptr;
  }
  j["holds"] = c.holds;
  j["equality"] = c.is_equality;
  j["predicted_equality"] = optional_bool(c.predicted_equality);
  j["agreement"] = optional_bool(c.agreement);
  if (bound_info(c.id).alt_condition != 0) {
    j["alt_predicted_equality"] = optional_bool(c.alt_predicted_equality);
    j["alt_agreement"] = optional_bool(c.alt_agreement);
  }
  j["note"] = c.note;
  return j;
}

json to_json(const FamilyEvaluation& e) {
  json j;
  j["family"] = e.spec.to_string();
  j["n"] = e.graph.order();
  j["m"] = e.graph.size();
  j["graph6"] = to_graph6(e.graph);
  j["computed"] = e.computed;
  j["predicted"] = e.closed_form.predicted ? json(*e.closed_form.predicted) : json(nullptr);
  j["status"] = std::string(to_string(e.closed_form.status));
  j["matches"] = e.matches();
  j["note"] = e.closed_form.note;
  return j;
}

json to_json(const VerificationReport& r, bool include_run_info) {
  json config;
  if (r.config.graph6_stream) {
    config["source"] = "graph6";
    config["path"] = r.config.graph6_stream->string();
  } else {
    config["source"] = "builtin";
    config["n_min"] = r.config.n_min;
    config["n_max"] = r.config.n_max;
  }
  json ids = json::array();
  for (const BoundId id : r.config.bounds) {
    ids.push_back(std::string(to_string(id)));
  }
  config["bounds"] = std::move(ids);
  config["witness_cap"] = r.config.witness_cap;
  config["oracle_stride"] = r.config.oracle_stride;

  json bounds = json::array();
  for (const BoundTally& t : r.bounds) {
    const BoundInfo& info = bound_info(t.id);
    json b;
    b["id"] = std::string(to_string(t.id));
    b["asserted"] = info.asserted;
    b["formula"] = std::string(info.formula);
    b["stated_condition"] = info.stated_condition ? json(condition_to_string(info.stated_condition)) : json(nullptr);
    b["graphs_checked"] = t.graphs_checked;
    b["holds"] = t.holds;
    b["inapplicable"] = t.inapplicable;
    b["violations"] = witness_json(t.violations);
    b["equality"] = witness_json(t.equalities);
    b["predicted_equality_count"] = t.predicted_equality;
    b["agreement_failures"] = witness_json(t.agreement_failures);
    if (info.alt_condition != 0) {
      b["alt_condition"] = condition_to_string(info.alt_condition);
      b["alt_agreement_failures"] = witness_json(t.alt_agreement_failures);
    }
    b["radicand_negative"] = t.radicand_negative;
    b["expected_regression"] = !info.asserted && t.violations.count > 0;
    bounds.push_back(std::move(b));
  }

  json j;
  j["config"] = std::move(config);
  j["total_graphs"] = r.total_graphs;
  j["graphs_by_order"] = r.graphs_by_order;
  j["skipped_disconnected"] = r.skipped_disconnected;
  j["bounds"] = std::move(bounds);
  j["identity_failures"] = witness_json(r.identity_failures);
  j["oracle"] = {{"checked", r.oracle_checked}, {"mismatches", witness_json(r.oracle_mismatches)}};
  j["failures"] = r.failures();
  if (include_run_info) {
    j["run"] = {{"workers", r.config.workers}, {"elapsed_seconds", r.elapsed_seconds}};
  }
  return j;
}

std::string to_csv(const InvariantSet& inv) {
  const Rational h = inv.harary.reduced();
  std::ostringstream out;
  out << "n,m,max_degree,min_degree,radius,diameter,total_eccentricity,first_zagreb,"
         "second_zagreb,first_zagreb_eccentricity,second_zagreb_eccentricity,wiener,harary,"
         "xi_c,eccentric_connectivity\n";
  out << inv.n << ',' << inv.m << ',' << inv.max_degree << ',' << inv.min_degree << ','
      << inv.radius << ',' << inv.diameter << ',' << inv.total_eccentricity << ','
      << inv.first_zagreb << ',' << inv.second_zagreb << ',' << inv.first_zagreb_eccentricity
      << ',' << inv.second_zagreb_eccentricity << ',' << inv.wiener << ',' << h.to_string() << ','
      << inv.xi_c << ',' << inv.eccentric_connectivity << '\n';
  return out.str();
}

std::string to_csv(const std::vector<BoundCheck>& checks) {
  std::ostringstream out;
  out << "id,applicable,lhs,rhs,holds,equality,predicted_equality,agreement,note\n";
  for (const BoundCheck& c : checks) {
    out << to_string(c.id) << ',' << (c.applicable ? "true" : "false") << ','
        << (c.applicable ? csv_escape(format_side(c.lhs, c.form)) : "") << ','
        << (c.applicable ? csv_escape(format_side(c.rhs, c.form)) : "") << ','
        << (c.holds ? "true" : "false") << ',' << (c.is_equality ? "true" : "false") << ','
        << csv_bool(c.predicted_equality) << ',' << csv_bool(c.agreement) << ','
        << csv_escape(c.note) << '\n';
  }
  return out.str();
}

std::string to_csv(const FamilyEvaluation& e) {
  std::ostringstream out;
  out << "family,n,m,computed,predicted,status,matches,note\n";
  out << csv_escape(e.spec.to_string()) << ',' << e.graph.order() << ',' << e.graph.size() << ','
      << e.computed << ','
      << (e.closed_form.predicted ? std::to_string(*e.closed_form.predicted) : "") << ','
      << to_string(e.closed_form.status) << ',' << (e.matches() ? "true" : "false") << ','
      << csv_escape(e.closed_form.note) << '\n';
  return out.str();
}

std::string to_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "id,asserted,graphs_checked,holds,violations,inapplicable,equality,"
         "predicted_equality,agreement_failures,alt_agreement_failures,first_violation,"
         "first_equality\n";
  for (const BoundTally& t : r.bounds) {
    const BoundInfo& info = bound_info(t.id);
    out << to_string(t.id) << ',' << (info.asserted ? "true" : "false") << ',' << t.graphs_checked
        << ',' << t.holds << ',' << t.violations.count << ',' << t.inapplicable << ','
        << t.equalities.count << ',' << t.predicted_equality << ',' << t.agreement_failures.count
        << ',' << (info.alt_condition ? std::to_string(t.alt_agreement_failures.count) : "")
        << ',' << csv_escape(t.violations.witnesses.empty() ? "" : t.violations.witnesses.front())
        << ',' << csv_escape(t.equalities.witnesses.empty() ? "" : t.equalities.witnesses.front())
        << '\n';
  }
  return out.str();
}

}  // namespace eccb
