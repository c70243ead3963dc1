#include "minortrace/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "minortrace/determinantal.hpp"
#include "minortrace/oracle.hpp"
#include "minortrace/report_json.hpp"
#include "minortrace/schubert.hpp"

namespace minortrace::cli {

namespace {

using nlohmann::json;

// Comma-separated 1-based integers; whitespace and signs are rejected so the
// textual renderings round-trip unambiguously.
std::vector<int> parse_tuple(const std::string& s, const char* what) {
  std::vector<int> out;
  std::size_t i = 0;
  while (true) {
    std::size_t j = i;
    long long v = 0;
    while (j < s.size() && s[j] >= '0' && s[j] <= '9') {
      v = v * 10 + (s[j] - '0');
      if (v > 1000000) throw input_error(std::string(what) + ": entry too large");
      ++j;
    }
    if (j == i)
      throw input_error(std::string(what) +
                        ": expected comma-separated integers without spaces");
    out.push_back(static_cast<int>(v));
    if (j == s.size()) break;
    if (s[j] != ',')
      throw input_error(std::string(what) +
                        ": expected comma-separated integers without spaces");
    i = j + 1;
  }
  return out;
}

std::size_t cap_from_env(std::size_t fallback) {
  const char* s = std::getenv("SCHUBERT_TRACE_CAP");
  if (!s || !*s) return fallback;
  std::size_t v = 0;
  for (const char* p = s; *p; ++p) {
    if (*p < '0' || *p > '9')
      throw input_error("SCHUBERT_TRACE_CAP must be a positive integer");
    v = v * 10 + static_cast<std::size_t>(*p - '0');
  }
  if (v == 0) throw input_error("SCHUBERT_TRACE_CAP must be a positive integer");
  return v;
}

struct BaseFlags {
  std::string kind;  // gorenstein | reduced-cm
  bool not_ctr = false;
  std::string token = "a";

  BaseRingAssumptions build() const {
    BaseRingAssumptions base;
    base.gorenstein_normal_domain = kind == "gorenstein";
    base.reduced_cm_with_canonical = kind == "reduced-cm";
    base.base_is_ctr = !not_ctr;
    base.nongorenstein_ideal_token = token;
    base.validate();
    return base;
  }
};

void add_base_options(CLI::App* sub, BaseFlags& base) {
  sub->add_option("--base", base.kind,
                  "base ring assumptions: gorenstein (normal domain) or "
                  "reduced-cm (with canonical module)")
      ->required()
      ->check(CLI::IsMember({"gorenstein", "reduced-cm"}));
  sub->add_flag("--base-not-ctr", base.not_ctr,
                "declare the reduced-cm base not CTR");
  sub->add_option("--base-token", base.token,
                  "label for the defining ideal of the base ring's "
                  "non-Gorenstein locus");
}

json base_echo(const BaseRingAssumptions& base) {
  return json{{"gorenstein_normal_domain", base.gorenstein_normal_domain},
              {"reduced_cm_with_canonical", base.reduced_cm_with_canonical},
              {"base_is_ctr", base.base_is_ctr},
              {"nongorenstein_ideal_token", base.nongorenstein_ideal_token}};
}

std::string base_text(const BaseRingAssumptions& base) {
  std::string s = base.gorenstein_normal_domain ? "gorenstein" : "reduced-cm";
  if (!base.base_is_ctr) s += " (not CTR)";
  return s;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "canonical trace, CTR classification and Gorenstein locus of Schubert "
      "cycles and determinantal rings"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  int m = 0, n = 0;
  std::string gamma_str, rows_str, cols_str, format = "text";
  BaseFlags sch_base, det_base;
  std::size_t cap = 0;

  CLI::App* sch = app.add_subcommand(
      "analyze-schubert", "report for the Schubert cycle G(X; gamma)");
  sch->add_option("--m", m, "row count")->required();
  sch->add_option("--n", n, "column count")->required();
  sch->add_option("--gamma", gamma_str, "column tuple, e.g. 1,4,7")
      ->required();
  add_base_options(sch, sch_base);
  sch->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* det = app.add_subcommand(
      "analyze-determinantal", "report for the determinantal ring R(X; delta)");
  det->add_option("--m", m, "row count")->required();
  det->add_option("--n", n, "column count")->required();
  det->add_option("--rows", rows_str, "row tuple of delta, e.g. 1,3")
      ->required();
  det->add_option("--cols", cols_str, "column tuple of delta, e.g. 1,4")
      ->required();
  add_base_options(det, det_base);
  det->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  CLI::Option* det_cap =
      det->add_option("--cap", cap, "generator enumeration cap");

  int max_m = 3, max_n = 7, trials = 20, bound = 100;
  std::uint64_t seed = 42;
  bool strict = false;
  CLI::App* verify = app.add_subcommand(
      "verify", "brute-force verification sweep of the combinatorial "
                "identities behind the reports");
  verify->add_option("--max-m", max_m, "largest row count")->required();
  verify->add_option("--max-n", max_n, "largest column count")->required();
  verify->add_option("--trials", trials, "pattern matrices per pair");
  verify->add_option("--seed", seed, "seed for pattern matrices");
  verify->add_option("--bound", bound, "pattern matrix entries lie in [1, bound]");
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  CLI::Option* verify_cap =
      verify->add_option("--cap", cap, "poset enumeration cap per check");
  verify->add_flag("--strict", strict, "exit 3 when any check is skipped");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (sch->parsed()) {
      if (m > n)
        throw input_error("the Schubert side requires m <= n");
      const SchubertIndex gamma(parse_tuple(gamma_str, "--gamma"),
                                Ambient(m, n));
      const BaseRingAssumptions base = sch_base.build();
      const SchubertReport rep = schubert_report(gamma, base);
      if (format == "json") {
        json input{{"m", m},
                   {"n", n},
                   {"gamma", gamma.cols()},
                   {"base", base_echo(base)},
                   {"format", format},
                   {"tool_version", kToolVersion}};
        out << to_json(rep, std::move(input)).dump(2) << '\n';
      } else {
        out << to_text(rep, "m=" + std::to_string(m) +
                                " n=" + std::to_string(n) +
                                " gamma=" + to_string(gamma) +
                                " base=" + base_text(base) +
                                " tool_version=" + kToolVersion);
      }
      return 0;
    }

    if (det->parsed()) {
      const std::size_t gen_cap =
          det_cap->count() ? cap : cap_from_env(50000);
      const BiMinor delta(parse_tuple(rows_str, "--rows"),
                          parse_tuple(cols_str, "--cols"), Ambient(m, n));
      const BaseRingAssumptions base = det_base.build();
      const DeterminantalReport rep = det_report(delta, base, gen_cap);
      if (format == "json") {
        json input{{"m", m},
                   {"n", n},
                   {"rows", delta.rows()},
                   {"cols", delta.cols()},
                   {"base", base_echo(base)},
                   {"format", format},
                   {"cap", gen_cap},
                   {"tool_version", kToolVersion}};
        out << to_json(rep, std::move(input)).dump(2) << '\n';
      } else {
        out << to_text(rep, "m=" + std::to_string(m) +
                                " n=" + std::to_string(n) +
                                " delta=" + to_string(delta) +
                                " base=" + base_text(base) +
                                " tool_version=" + kToolVersion);
      }
      return 0;
    }

    // verify
    if (max_m < 1 || max_n < 1)
      throw input_error("sweep bounds must be >= 1");
    if (trials < 1) throw input_error("trials must be >= 1");
    if (bound < 1) throw input_error("bound must be >= 1");
    SweepConfig cfg;
    cfg.max_m = max_m;
    cfg.max_n = max_n;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.bound = bound;
    cfg.caps.max_elements = verify_cap->count() ? cap : cap_from_env(200000);
    const std::vector<OracleReport> reports = run_verification_sweep(cfg);

    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const OracleReport& r : reports) {
      if (r.verdict == Verdict::pass) ++passed;
      else if (r.verdict == Verdict::fail) ++failed;
      else ++skipped;
    }

    if (format == "json") {
      json checks = json::array();
      for (const OracleReport& r : reports) checks.push_back(to_json(r));
      json j{{"kind", "verify_report"},
             {"input",
              json{{"max_m", max_m},
                   {"max_n", max_n},
                   {"trials", trials},
                   {"seed", seed},
                   {"bound", bound},
                   {"cap", cfg.caps.max_elements},
                   {"strict", strict},
                   {"format", format},
                   {"tool_version", kToolVersion}}},
             {"checks", checks},
             {"summary", json{{"pass", passed},
                              {"fail", failed},
                              {"skipped", skipped}}}};
      out << j.dump(2) << '\n';
    } else {
      out << "kind: verify_report\n";
      out << "input: max_m=" << max_m << " max_n=" << max_n
          << " trials=" << trials << " seed=" << seed << " bound=" << bound
          << " cap=" << cfg.caps.max_elements
          << " strict=" << (strict ? "true" : "false")
          << " tool_version=" << kToolVersion << '\n';
      for (const OracleReport& r : reports) out << to_text(r) << '\n';
      out << "summary: " << reports.size() << " checks, " << passed
          << " pass, " << failed << " fail, " << skipped << " skipped\n";
    }

    if (failed > 0) return 2;
    if (skipped > 0 && strict) return 3;
    return 0;
  } catch (const input_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const defect_error& e) {
    err << "internal defect: " << e.what() << '\n';
    return 1;
  } catch (const resource_error& e) {
    err << "error: " << e.what() << '\n';
    return strict ? 3 : 1;
  }
}

}  // namespace minortrace::cli
