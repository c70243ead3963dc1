#include "minortrace/report_json.hpp"

#include <sstream>

#include "minortrace/render.hpp"

namespace minortrace {

namespace {

using nlohmann::json;

json to_json(const SchubertIndex& xi) { return json(xi.cols()); }

json to_json(const BiMinor& b) {
  return json{{"rows", b.rows()}, {"cols", b.cols()}};
}

json to_json(const TauEntry& tau) {
  if (tau.is_unit()) return json("unit");
  return to_json(tau.minor());
}

json blocks_json(const BlockData& bd) {
  json blocks = json::array();
  for (const IntInterval& b : bd.blocks) blocks.push_back(b.values());
  json gaps = json::array();
  for (const IntInterval& g : bd.gaps) gaps.push_back(g.values());
  return json{{"t", bd.t},
              {"boundaries", bd.boundaries},
              {"blocks", blocks},
              {"gaps", gaps}};
}

json profile_json(const KappaProfile& kp) {
  json j{{"values", kp.values}, {"spread", kp.spread}};
  j["max"] = kp.max ? json(*kp.max) : json(nullptr);
  j["min"] = kp.min ? json(*kp.min) : json(nullptr);
  return j;
}

json boundary_json(const BoundaryFamily& bf) {
  json arr = json::array();
  for (const BoundaryLevel& lv : bf.levels)
    arr.push_back(json{{"h", lv.h},
                       {"S", lv.S},
                       {"T", lv.T},
                       {"U_plus", lv.U_plus},
                       {"U_minus", lv.U_minus}});
  return arr;
}

template <typename Prime>
json trace_json(const TraceDescription<Prime>& trace) {
  json factors = json::array();
  for (std::size_t f = 0; f < trace.factors.size(); ++f) {
    json primes = json::array();
    for (const auto& marker : trace.factors[f])
      primes.push_back(
          json{{"index", marker.index}, {"element", to_json(marker.prime)}});
    factors.push_back(
        json{{"h", static_cast<int>(f) + 1}, {"primes", primes}});
  }
  return json{{"factors", factors}};
}

json ctr_json(const CtrVerdict& c) {
  json j{{"verdict", c.verdict}, {"reason", c.reason}};
  j["trace_when_ctr"] =
      c.trace_when_ctr ? json(*c.trace_when_ctr) : json(nullptr);
  return j;
}

template <typename Prime>
json locus_json(const GorensteinLocus& locus,
                const std::vector<Prime>& primes_by_index) {
  json primes = json::array();
  for (int i : locus.prime_indices)
    primes.push_back(
        json{{"index", i},
             {"element",
              to_json(primes_by_index[static_cast<std::size_t>(i) - 1])}});
  json j{{"primes", primes}};
  j["base_token"] = locus.base_token ? json(*locus.base_token) : json(nullptr);
  return j;
}

json disputed_json(const std::vector<DisputedFixture>& disputed) {
  json arr = json::array();
  for (const DisputedFixture& d : disputed)
    arr.push_back(json{{"quantity", d.quantity},
                       {"computed", d.computed},
                       {"reference", d.reference},
                       {"note", d.note}});
  return arr;
}

std::string interval_text(const IntInterval& iv) {
  std::ostringstream os;
  os << '{';
  const auto vals = iv.values();
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) os << ' ';
    os << vals[i];
  }
  os << '}';
  return os.str();
}

void blocks_text(std::ostringstream& os, const BlockData& bd) {
  os << "t: " << bd.t << '\n';
  os << "blocks:";
  for (std::size_t i = 0; i < bd.blocks.size(); ++i)
    os << " beta_" << i << '=' << interval_text(bd.blocks[i]);
  os << '\n';
  os << "gaps:";
  for (std::size_t i = 0; i < bd.gaps.size(); ++i)
    os << " chi_" << i << '=' << interval_text(bd.gaps[i]);
  os << '\n';
}

void profile_text(std::ostringstream& os, const char* name,
                  const KappaProfile& kp) {
  os << name << ": values=(";
  for (std::size_t i = 0; i < kp.values.size(); ++i) {
    if (i) os << ' ';
    os << kp.values[i];
  }
  os << ')';
  if (kp.max) os << " max=" << *kp.max << " min=" << *kp.min;
  os << " spread=" << kp.spread << '\n';
}

void boundary_text(std::ostringstream& os, const BoundaryFamily& bf) {
  os << "boundary_sets:";
  if (bf.levels.empty()) os << " (none)";
  for (const BoundaryLevel& lv : bf.levels)
    os << " h=" << lv.h << " S=" << render_index_set(lv.S)
       << " T=" << render_index_set(lv.T)
       << " U+=" << render_index_set(lv.U_plus)
       << " U-=" << render_index_set(lv.U_minus)
       << " U=" << render_index_set(lv.U) << " |";
  os << '\n';
}

void ctr_text(std::ostringstream& os, const CtrVerdict& c) {
  os << "ctr: " << (c.verdict ? "true" : "false") << " (" << c.reason << ")";
  if (c.trace_when_ctr) os << " trace=" << *c.trace_when_ctr;
  os << '\n';
}

}  // namespace

json to_json(const SchubertReport& rep, json input_echo) {
  json class_arr = json::array();
  for (const auto& [coeff, zeta] : rep.canonical_class)
    class_arr.push_back(json{{"coefficient", coeff}, {"prime", to_json(zeta)}});
  json zeta = json::array(), sigma = json::array();
  for (const SchubertIndex& z : rep.zeta) zeta.push_back(to_json(z));
  for (const SchubertIndex& s : rep.sigma) sigma.push_back(to_json(s));

  json j{{"kind", "schubert_report"},
         {"input", std::move(input_echo)},
         {"blocks", blocks_json(rep.blocks)},
         {"kappa", profile_json(rep.kappa)},
         {"zeta", zeta},
         {"sigma", sigma},
         {"boundary_sets", boundary_json(rep.boundary)},
         {"canonical_class", class_arr},
         {"trace", trace_json(rep.trace)},
         {"ctr", ctr_json(rep.ctr)},
         {"gorenstein_locus", locus_json(rep.locus, rep.sigma)},
         {"closed_form", nullptr},
         {"disputed_fixtures", disputed_json(rep.disputed)}};
  j["witness"] =
      rep.witness
          ? json{{"element", to_json(rep.witness->element)},
                 {"degree", rep.witness->degree},
                 {"product_min_degree", rep.witness->product_min_degree}}
          : json(nullptr);
  return j;
}

json to_json(const DeterminantalReport& rep, json input_echo) {
  json class_arr = json::array();
  for (const auto& [coeff, eta] : rep.canonical_class)
    class_arr.push_back(json{{"coefficient", coeff}, {"prime", to_json(eta)}});
  json eta = json::array(), tau = json::array();
  json eta_tilde = json::array(), tau_tilde = json::array();
  for (const TauEntry& e : rep.profile.eta) eta.push_back(to_json(e));
  for (const TauEntry& t : rep.profile.tau) tau.push_back(to_json(t));
  for (const SchubertIndex& z : rep.profile.zeta_tilde)
    eta_tilde.push_back(to_json(z));
  for (const SchubertIndex& s : rep.profile.sigma_tilde)
    tau_tilde.push_back(to_json(s));

  json j{{"kind", "determinantal_report"},
         {"input", std::move(input_echo)},
         {"blocks", blocks_json(rep.profile.blocks)},
         {"lambda", profile_json(rep.profile.lambda)},
         {"delta_tilde", to_json(rep.profile.delta_tilde.index())},
         {"eta", eta},
         {"tau", tau},
         {"eta_tilde", eta_tilde},
         {"tau_tilde", tau_tilde},
         {"thresholds", rep.thresholds.values},
         {"boundary_sets", boundary_json(rep.boundary)},
         {"canonical_class", class_arr},
         {"trace", trace_json(rep.trace)},
         {"ctr", ctr_json(rep.ctr)},
         {"gorenstein_locus", locus_json(rep.locus, rep.profile.tau)},
         {"disputed_fixtures", disputed_json(rep.disputed)}};
  j["witness"] =
      rep.witness
          ? json{{"element", to_json(rep.witness->element)},
                 {"degree", rep.witness->degree},
                 {"product_min_degree", rep.witness->product_min_degree},
                 {"product_min_degree_exact",
                  rep.witness->product_min_degree_exact}}
          : json(nullptr);
  j["closed_form"] =
      rep.closed_form ? json(*rep.closed_form) : json(nullptr);
  return j;
}

json to_json(const OracleReport& rep) {
  const char* verdict = rep.verdict == Verdict::pass      ? "pass"
                        : rep.verdict == Verdict::fail    ? "fail"
                                                          : "skipped";
  return json{{"check", rep.check},
              {"params", rep.params},
              {"verdict", verdict},
              {"detail", rep.detail},
              {"cases", rep.cases}};
}

std::string to_text(const SchubertReport& rep, const std::string& input_echo) {
  std::ostringstream os;
  os << "kind: schubert_report\n";
  os << "input: " << input_echo << '\n';
  os << "gamma: " << to_string(rep.gamma) << '\n';
  blocks_text(os, rep.blocks);
  profile_text(os, "kappa", rep.kappa);
  os << "zeta:";
  for (std::size_t i = 0; i < rep.zeta.size(); ++i)
    os << " zeta_" << i << '=' << to_string(rep.zeta[i]);
  os << '\n';
  os << "sigma:";
  for (std::size_t i = 0; i < rep.sigma.size(); ++i)
    os << " sigma_" << (i + 1) << '=' << to_string(rep.sigma[i]);
  os << '\n';
  boundary_text(os, rep.boundary);
  os << "canonical_class:";
  for (std::size_t i = 0; i < rep.canonical_class.size(); ++i) {
    if (i) os << " +";
    os << ' ' << rep.canonical_class[i].first << "·cl("
       << render_prime(rep.canonical_class[i].second) << ')';
  }
  os << '\n';
  os << "trace: " << render_trace(rep.trace) << '\n';
  ctr_text(os, rep.ctr);
  os << "gorenstein_locus:";
  for (int i : rep.locus.prime_indices)
    os << ' ' << render_prime(rep.sigma[static_cast<std::size_t>(i) - 1]);
  if (rep.locus.base_token) os << " base_token=" << *rep.locus.base_token;
  os << '\n';
  if (rep.witness)
    os << "witness: " << to_string(rep.witness->element)
       << " degree=" << rep.witness->degree
       << " product_min_degree=" << rep.witness->product_min_degree << '\n';
  for (const DisputedFixture& d : rep.disputed)
    os << "disputed: " << d.quantity << " computed=" << d.computed
       << " reference=" << d.reference << '\n';
  return os.str();
}

std::string to_text(const DeterminantalReport& rep,
                    const std::string& input_echo) {
  std::ostringstream os;
  os << "kind: determinantal_report\n";
  os << "input: " << input_echo << '\n';
  os << "delta: " << to_string(rep.delta) << '\n';
  os << "delta_tilde: " << to_string(rep.profile.delta_tilde.index()) << '\n';
  blocks_text(os, rep.profile.blocks);
  profile_text(os, "lambda", rep.profile.lambda);
  os << "eta:";
  for (std::size_t i = 0; i < rep.profile.eta.size(); ++i)
    os << " eta_" << i << '=' << render_tau(rep.profile.eta[i]);
  os << '\n';
  os << "tau:";
  for (std::size_t i = 0; i < rep.profile.tau.size(); ++i)
    os << " tau_" << (i + 1) << '=' << render_tau(rep.profile.tau[i]);
  os << '\n';
  os << "tau_tilde:";
  for (std::size_t i = 0; i < rep.profile.sigma_tilde.size(); ++i)
    os << " tau_tilde_" << (i + 1) << '='
       << to_string(rep.profile.sigma_tilde[i]);
  os << '\n';
  boundary_text(os, rep.boundary);
  os << "thresholds:";
  for (std::size_t i = 0; i < rep.thresholds.values.size(); ++i)
    os << " N_" << (i + 1) << '=' << rep.thresholds.values[i];
  os << '\n';
  os << "canonical_class:";
  for (std::size_t i = 0; i < rep.canonical_class.size(); ++i) {
    if (i) os << " +";
    os << ' ' << rep.canonical_class[i].first << "·cl("
       << render_prime(rep.canonical_class[i].second) << ')';
  }
  os << '\n';
  os << "trace: " << render_trace(rep.trace) << '\n';
  ctr_text(os, rep.ctr);
  os << "gorenstein_locus:";
  for (int i : rep.locus.prime_indices)
    os << ' '
       << render_prime(rep.profile.tau[static_cast<std::size_t>(i) - 1]);
  if (rep.locus.base_token) os << " base_token=" << *rep.locus.base_token;
  os << '\n';
  if (rep.witness)
    os << "witness: " << to_string(rep.witness->element)
       << " degree=" << rep.witness->degree
       << " product_min_degree=" << rep.witness->product_min_degree
       << (rep.witness->product_min_degree_exact ? "" : " (lower bound)")
       << '\n';
  if (rep.closed_form) os << "closed_form: " << *rep.closed_form << '\n';
  for (const DisputedFixture& d : rep.disputed)
    os << "disputed: " << d.quantity << " computed=" << d.computed
       << " reference=" << d.reference << '\n';
  return os.str();
}

std::string to_text(const OracleReport& rep) {
  std::ostringstream os;
  const char* verdict = rep.verdict == Verdict::pass      ? "pass"
                        : rep.verdict == Verdict::fail    ? "FAIL"
                                                          : "skipped";
  os << verdict << "  " << rep.check << "  " << rep.params
     << "  cases=" << rep.cases;
  if (!rep.detail.empty()) os << "  :: " << rep.detail;
  return os.str();
}

}  // namespace minortrace
