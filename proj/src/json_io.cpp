#include "threshold_spectra/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "threshold_spectra/errors.hpp"

namespace threshold_spectra {

namespace {

double number_or_inf(const Json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

std::string to_string(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::pass:
      return "pass";
    case LemmaStatus::fail:
      return "fail";
    case LemmaStatus::not_applicable:
      break;
  }
  return "not_applicable";
}

LemmaStatus parse_lemma_status(const std::string& s) {
  if (s == "pass") return LemmaStatus::pass;
  if (s == "fail") return LemmaStatus::fail;
  if (s == "not_applicable") return LemmaStatus::not_applicable;
  throw InputError("unknown lemma status '" + s + "'");
}

}  // namespace

double round_output(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kOutputDigits, x);
  const double rounded = std::strtod(buf, nullptr);
  return rounded == 0.0 ? 0.0 : rounded;  // no "-0.0"
}

Json output_number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round_output(x);
}

Provenance parse_provenance(const std::string& tag) {
  if (tag == "condensed") return Provenance::condensed();
  if (tag == "dense") return Provenance::dense();
  if (tag.rfind("direct:", 0) == 0) {
    const std::string digits = tag.substr(7);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      return Provenance::direct(std::stoi(digits));
    }
  }
  throw InputError("unknown provenance tag '" + tag + "'");
}

TheoremId parse_theorem_id(const std::string& id) {
  for (TheoremId t : {TheoremId::T8, TheoremId::T9, TheoremId::L5, TheoremId::L7, TheoremId::T11}) {
    if (to_string(t) == id) return t;
  }
  throw InputError("unknown theorem id '" + id + "'");
}

void to_json(Json& j, const Spectrum& s) {
  Json values = Json::array();
  Json provenance = Json::array();
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    values.push_back(output_number(s.values(i)));
    provenance.push_back(s.provenance[static_cast<std::size_t>(i)].to_string());
  }
  j = Json{{"n", s.size()}, {"values", std::move(values)}, {"provenance", std::move(provenance)}};
}

void from_json(const Json& j, Spectrum& s) {
  const auto& values = j.at("values");
  const auto& provenance = j.at("provenance");
  if (values.size() != provenance.size() || values.size() != j.at("n").get<std::size_t>()) {
    throw InputError("spectrum sizes disagree");
  }
  s.values.resize(static_cast<Eigen::Index>(values.size()));
  s.provenance.clear();
  for (std::size_t i = 0; i < values.size(); ++i) {
    s.values(static_cast<Eigen::Index>(i)) = values[i].get<double>();
    s.provenance.push_back(parse_provenance(provenance[i].get<std::string>()));
  }
}

void to_json(Json& j, const ChainLink& link) {
  j = Json{{"lhs", link.lhs},
           {"lhs_value", output_number(link.lhs_value)},
           {"rhs", link.rhs},
           {"rhs_value", output_number(link.rhs_value)},
           {"slack", output_number(link.slack)}};
}

void from_json(const Json& j, ChainLink& link) {
  link.lhs = j.at("lhs").get<std::string>();
  link.lhs_value = j.at("lhs_value").get<double>();
  link.rhs = j.at("rhs").get<std::string>();
  link.rhs_value = j.at("rhs_value").get<double>();
  link.slack = j.at("slack").get<double>();
}

void to_json(Json& j, const InterlacingReport& r) {
  j = Json{{"theorem", to_string(r.theorem)},
           {"applicable", r.applicable},
           {"pass", r.pass},
           {"min_slack", output_number(r.min_slack)},
           {"chain", r.chain}};
}

void from_json(const Json& j, InterlacingReport& r) {
  r.theorem = parse_theorem_id(j.at("theorem").get<std::string>());
  r.applicable = j.value("applicable", true);
  r.pass = j.at("pass").get<bool>();
  r.min_slack = number_or_inf(j.at("min_slack"));
  r.chain = j.at("chain").get<std::vector<ChainLink>>();
}

void to_json(Json& j, const BrouwerReport& r) {
  Json terms = Json::array();
  for (const BrouwerTerm& t : r.terms) {
    terms.push_back(Json{{"k", t.k},
                         {"S_k", output_number(t.partial_sum)},
                         {"bound", t.bound},
                         {"slack", output_number(t.slack)},
                         {"certified_slack", t.certified_slack ? Json(*t.certified_slack) : Json(nullptr)}});
  }
  Json lemma14{{"status", to_string(r.lemma14.status)}};
  if (r.lemma14.status != LemmaStatus::not_applicable) {
    lemma14["index"] = r.lemma14.index;
    lemma14["degree"] = r.lemma14.degree;
    lemma14["expected"] = r.lemma14.expected;
  }
  j = Json{{"theorem", "T16"},
           {"pass", r.pass},
           {"edges", r.edge_count},
           {"min_slack", output_number(r.min_slack)},
           {"k_min_slack", r.argmin_k},
           {"terms", std::move(terms)},
           {"lemma14", std::move(lemma14)},
           {"lemma15", Json{{"pass", r.lemma15.pass()}, {"slacks", r.lemma15.slacks}}}};
}

void from_json(const Json& j, BrouwerReport& r) {
  r.pass = j.at("pass").get<bool>();
  r.edge_count = j.at("edges").get<long long>();
  r.min_slack = number_or_inf(j.at("min_slack"));
  r.argmin_k = j.at("k_min_slack").get<int>();
  r.terms.clear();
  for (const Json& t : j.at("terms")) {
    BrouwerTerm term;
    term.k = t.at("k").get<int>();
    term.partial_sum = t.at("S_k").get<double>();
    term.bound = t.at("bound").get<long long>();
    term.slack = t.at("slack").get<double>();
    if (!t.at("certified_slack").is_null()) term.certified_slack = t.at("certified_slack").get<long long>();
    r.terms.push_back(term);
  }
  const Json& l14 = j.at("lemma14");
  r.lemma14 = Lemma14Result{};
  r.lemma14.status = parse_lemma_status(l14.at("status").get<std::string>());
  if (r.lemma14.status != LemmaStatus::not_applicable) {
    r.lemma14.index = l14.at("index").get<int>();
    r.lemma14.degree = l14.at("degree").get<int>();
    r.lemma14.expected = l14.at("expected").get<int>();
  }
  r.lemma15.slacks = j.at("lemma15").at("slacks").get<std::vector<long long>>();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace threshold_spectra
