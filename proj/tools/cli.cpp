#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "spinrev/spinrev.h"

namespace spinrev_cli {

namespace {

constexpr int kMaxPlainSites = 12;
constexpr int kMaxPulsedSites = 10;
constexpr int kMaxTraceSites = 6;

std::string num(double x, const char* spec) {
  if (!std::isfinite(x)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, spec, x == 0.0 ? 0.0 : x);
  return buf;
}

std::string json_num(double x) {
  const std::string s = num(x, "%.17g");
  return s.empty() ? "null" : s;
}

std::string csv_num(double x) { return num(x, "%.12g"); }

std::string json_opt(const std::optional<int>& v) { return v ? std::to_string(*v) : "null"; }
std::string csv_opt(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

// Throws with an exit code derived from the library status.
void check(sr_status status) {
  if (status == SR_OK) return;
  const int code = status == SR_INVALID_ARGUMENT || status == SR_RESOURCE ? kUsage : kFailed;
  throw CliError(code, std::string(sr_status_name(status)) + ": " + sr_last_error());
}

struct ProfileDeleter {
  void operator()(sr_profile* p) const { sr_profile_destroy(p); }
};
using ProfilePtr = std::unique_ptr<sr_profile, ProfileDeleter>;

ProfilePtr make_profile(int protocol, int n, int m, bool uncorrected) {
  sr_profile* p = nullptr;
  check(sr_profile_create(protocol, n, m, uncorrected ? 1 : 0, &p));
  return ProfilePtr(p);
}

ProfilePtr make_profile(const RunConfig& cfg) {
  return make_profile(cfg.protocol, cfg.n, cfg.m.value_or(0), cfg.uncorrected_h);
}

template <typename T, typename Fill>
std::vector<T> fetch(Fill fill) {
  size_t needed = 0;
  fill(nullptr, 0, &needed);
  std::vector<T> buf(needed);
  check(fill(buf.data(), buf.size(), &needed));
  return buf;
}

std::string fetch_string(const std::function<sr_status(char*, size_t, size_t*)>& fill) {
  std::vector<char> buf = fetch<char>(fill);
  return std::string(buf.data());
}

std::string json_array(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + json_num(v[i]);
  return s + "]";
}

int dense_cap(int protocol) { return protocol == 2 ? kMaxPulsedSites : kMaxPlainSites; }

void validate(const RunConfig& cfg) {
  auto usage = [](const std::string& msg) { throw CliError(kUsage, msg); };
  if (cfg.n < 1) usage("--n must be a positive integer");
  if (cfg.m && *cfg.m < 0) usage("--m must be >= 0");
  if (!(cfg.tol > 0)) usage("--tol must be positive");
  if (cfg.steps < 1) usage("--steps must be a positive integer");
  if (cfg.uncorrected_h && cfg.protocol != 3) usage("--uncorrected-h only applies to protocol 3");
  if (cfg.engine != "majorana" && (cfg.command == "verify" || cfg.command == "sweep") &&
      cfg.n > dense_cap(cfg.protocol)) {
    usage("engine " + cfg.engine + " is limited to n <= " +
          std::to_string(dense_cap(cfg.protocol)) + " for protocol " +
          std::to_string(cfg.protocol));
  }
  if (cfg.command == "spectrum" && cfg.protocol == 2) {
    usage("spectrum needs a static protocol (1 or 3)");
  }
  if (cfg.command == "trace" && cfg.n > kMaxTraceSites) {
    usage("trace is limited to n <= " + std::to_string(kMaxTraceSites));
  }
}

EngineResult verify_one(const sr_profile* profile, const std::string& engine, double tol) {
  sr_verify_result r{};
  check(engine == "majorana" ? sr_verify_majorana(profile, tol, &r)
                             : sr_verify_statevec(profile, tol, &r));
  return {engine, r.passed != 0, r.metric};
}

std::vector<EngineResult> verify_engines(const sr_profile* profile, const std::string& engine,
                                         double tol) {
  std::vector<EngineResult> out;
  if (engine == "majorana" || engine == "both") out.push_back(verify_one(profile, "majorana", tol));
  if (engine == "statevec" || engine == "both") out.push_back(verify_one(profile, "statevec", tol));
  return out;
}

int write_profile(const RunConfig& cfg, std::ostream& out) {
  const ProfilePtr p = make_profile(cfg);
  if (cfg.format == "json") {
    out << fetch_string([&](char* b, size_t c, size_t* n) { return sr_profile_json(p.get(), b, c, n); })
        << '\n';
    return kPassed;
  }
  const auto j = fetch<double>([&](double* b, size_t c, size_t* n) {
    return sr_profile_couplings(p.get(), b, c, n);
  });
  const auto h = fetch<double>([&](double* b, size_t c, size_t* n) {
    return sr_profile_fields(p.get(), b, c, n);
  });
  out << "k,J,h\n";
  for (std::size_t k = 0; k < j.size(); ++k) {
    out << k << ',' << csv_num(j[k]) << ',' << (k == 0 ? "" : csv_num(h[k - 1])) << '\n';
  }
  return kPassed;
}

int write_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const VerifyReport r = run_verify(cfg);
  err << "verify: " << r.engine << " finished in " << r.wall_time << " s\n";
  if (cfg.format == "json") {
    out << "{\"command\":\"verify\",\"n\":" << cfg.n << ",\"protocol\":" << cfg.protocol
        << ",\"m\":" << json_opt(cfg.protocol == 3 ? std::optional<int>(cfg.m.value_or(0)) : std::nullopt)
        << ",\"engine\":\"" << r.engine << "\",\"tol\":" << json_num(cfg.tol)
        << ",\"passed\":" << (r.passed ? "true" : "false") << ",\"metric\":" << json_num(r.metric)
        << ",\"engines\":[";
    for (std::size_t i = 0; i < r.engines.size(); ++i) {
      const EngineResult& e = r.engines[i];
      out << (i ? "," : "") << "{\"engine\":\"" << e.engine
          << "\",\"passed\":" << (e.passed ? "true" : "false")
          << ",\"metric\":" << json_num(e.metric) << '}';
    }
    out << "]}\n";
  } else {
    out << "engine,passed,metric\n";
    for (const EngineResult& e : r.engines) {
      out << e.engine << ',' << (e.passed ? 1 : 0) << ',' << csv_num(e.metric) << '\n';
    }
  }
  return r.passed ? kPassed : kFailed;
}

int write_spectrum(const RunConfig& cfg, std::ostream& out) {
  const ProfilePtr p = make_profile(cfg);
  sr_spectrum* raw = nullptr;
  check(sr_spectrum_create(p.get(), cfg.tol, &raw));
  std::unique_ptr<sr_spectrum, void (*)(sr_spectrum*)> s(raw, sr_spectrum_destroy);
  if (cfg.format == "json") {
    out << fetch_string([&](char* b, size_t c, size_t* n) { return sr_spectrum_json(s.get(), b, c, n); })
        << '\n';
  } else {
    const auto e = fetch<double>([&](double* b, size_t c, size_t* n) {
      return sr_spectrum_eigenvalues(s.get(), b, c, n);
    });
    const auto f = fetch<double>([&](double* b, size_t c, size_t* n) {
      return sr_spectrum_closed_form(s.get(), b, c, n);
    });
    out << "k,eigenvalue,closed_form\n";
    for (std::size_t k = 0; k < e.size(); ++k) {
      out << k + 1 << ',' << csv_num(e[k]) << ',' << csv_num(f[k]) << '\n';
    }
  }
  return sr_spectrum_decoded(s.get()) ? kPassed : kFailed;
}

int write_bound(const RunConfig& cfg, std::ostream& out) {
  double y = 0, alpha = 0, lower = 0, ratio = 0, bound = 0;
  check(sr_capacity(&y, &alpha));
  check(sr_lower_bound_time(cfg.n, &lower));
  check(sr_optimality_ratio(cfg.n, &ratio, &bound));
  sr_profile_info info{};
  check(sr_profile_get_info(make_profile(1, cfg.n, 0, false).get(), &info));
  if (cfg.format == "json") {
    out << "{\"n\":" << cfg.n << ",\"alpha\":" << json_num(alpha) << ",\"y_star\":" << json_num(y)
        << ",\"t_N\":" << json_num(info.duration) << ",\"lower_bound\":" << json_num(lower)
        << ",\"ratio\":" << json_num(ratio) << ",\"ratio_bound\":" << json_num(bound) << "}\n";
  } else {
    out << "n,alpha,y_star,t_N,lower_bound,ratio,ratio_bound\n"
        << cfg.n << ',' << csv_num(alpha) << ',' << csv_num(y) << ',' << csv_num(info.duration)
        << ',' << csv_num(lower) << ',' << csv_num(ratio) << ',' << csv_num(bound) << '\n';
  }
  return kPassed;
}

int write_sweep(const RunConfig& cfg, std::ostream& out) {
  const std::vector<SweepRow> rows = run_sweep(cfg);
  if (cfg.format == "json") {
    out << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const SweepRow& r = rows[i];
      out << (i ? ",\n " : "") << "{\"n\":" << r.n << ",\"protocol\":" << r.protocol
          << ",\"m\":" << json_opt(r.m) << ",\"t_N\":" << json_num(r.t_n)
          << ",\"lower_bound\":" << json_num(r.lower_bound) << ",\"ratio\":" << json_num(r.ratio)
          << ",\"max_coupling\":" << json_num(r.max_coupling)
          << ",\"uniformity\":" << json_num(r.uniformity)
          << ",\"verify_metric\":" << json_num(r.verify_metric) << '}';
    }
    out << "]\n";
  } else {
    out << "n,protocol,m,t_N,lower_bound,ratio,max_coupling,uniformity,verify_metric\n";
    for (const SweepRow& r : rows) {
      out << r.n << ',' << r.protocol << ',' << csv_opt(r.m) << ',' << csv_num(r.t_n) << ','
          << csv_num(r.lower_bound) << ',' << csv_num(r.ratio) << ',' << csv_num(r.max_coupling)
          << ',' << csv_num(r.uniformity) << ',' << csv_num(r.verify_metric) << '\n';
    }
  }
  const bool all = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.passed; });
  return all ? kPassed : kFailed;
}

int write_trace(const RunConfig& cfg, std::ostream& out) {
  sr_trace* raw = nullptr;
  check(sr_trace_create(cfg.n, cfg.steps, &raw));
  std::unique_ptr<sr_trace, void (*)(sr_trace*)> trace(raw, sr_trace_destroy);
  const size_t len = sr_trace_length(trace.get());
  std::vector<double> t(len), s(len), b(len);
  bool within = true;
  for (size_t i = 0; i < len; ++i) {
    check(sr_trace_point(trace.get(), i, &t[i], &s[i], &b[i]));
    within = within && s[i] <= b[i] + 1e-6;
  }
  if (cfg.format == "csv") {
    out << fetch_string([&](char* buf, size_t c, size_t* n) { return sr_trace_csv(trace.get(), buf, c, n); });
  } else {
    out << "{\"n\":" << cfg.n << ",\"steps\":" << cfg.steps << ",\"t\":" << json_array(t)
        << ",\"entropy_bits\":" << json_array(s) << ",\"alpha_t_bound\":" << json_array(b) << "}\n";
  }
  return within ? kPassed : kFailed;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& argv) {
  RunConfig cfg;
  std::string format;
  CLI::App app{"Spin-chain state reversal: protocol profiles, verification and bounds",
               "spinrev-cli"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "chain length (n_max for sweep)")->required();
    sub->add_option("--m", cfg.m, "family parameter (m_max for sweep)");
    sub->add_option("--protocol", cfg.protocol, "1 static, 2 pulsed, 3 family")
        ->check(CLI::IsMember({1, 2, 3}));
    sub->add_option("--engine", cfg.engine, "majorana, statevec or both")
        ->check(CLI::IsMember({"majorana", "statevec", "both"}));
    sub->add_option("--tol", cfg.tol, "pass threshold");
    sub->add_option("--steps", cfg.steps, "time samples for trace");
    sub->add_option("--out", cfg.out_path, "write data here instead of stdout");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--uncorrected-h", cfg.uncorrected_h, "protocol 3 with the doubled on-site field");
  };
  for (const char* name : {"profile", "verify", "spectrum", "bound", "sweep", "trace"}) {
    add_common(app.add_subcommand(name));
  }

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw CliError(kPassed, app.help());
  } catch (const CLI::ParseError& e) {
    throw CliError(kUsage, std::string(e.what()) + "\n\n" + app.help());
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = !format.empty() ? format : cfg.command == "trace" ? "csv" : "json";
  validate(cfg);
  return cfg;
}

VerifyReport run_verify(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const ProfilePtr p = make_profile(cfg);
  VerifyReport r;
  r.engine = cfg.engine;
  r.engines = verify_engines(p.get(), cfg.engine, cfg.tol);
  r.passed = true;
  for (const EngineResult& e : r.engines) {
    r.passed = r.passed && e.passed;
    r.metric = std::max(r.metric, e.metric);
  }
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<SweepRow> run_sweep(const RunConfig& cfg) {
  const int m_max = cfg.protocol == 3 ? cfg.m.value_or(0) : 0;
  std::vector<SweepRow> rows;
  for (int n = 1; n <= cfg.n; ++n) {
    for (int m = 0; m <= m_max; ++m) {
      SweepRow row;
      row.n = n;
      row.protocol = cfg.protocol;
      if (cfg.protocol == 3) row.m = m;
      try {
        const ProfilePtr p = make_profile(cfg.protocol, n, m, cfg.uncorrected_h);
        sr_profile_info info{};
        check(sr_profile_get_info(p.get(), &info));
        check(sr_lower_bound_time(n, &row.lower_bound));
        row.t_n = info.normalized_time;
        row.ratio = row.t_n / row.lower_bound;
        row.max_coupling = info.max_coupling;
        row.uniformity = info.uniformity;
        row.passed = true;
        for (const EngineResult& e : verify_engines(p.get(), cfg.engine, cfg.tol)) {
          row.verify_metric = std::max(row.verify_metric, e.metric);
          row.passed = row.passed && e.passed;
        }
      } catch (const CliError&) {
        row.verify_metric = std::nan("");
        row.passed = false;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == "profile") return write_profile(cfg, out);
  if (cfg.command == "verify") return write_verify(cfg, out, err);
  if (cfg.command == "spectrum") return write_spectrum(cfg, out);
  if (cfg.command == "bound") return write_bound(cfg, out);
  if (cfg.command == "sweep") return write_sweep(cfg, out);
  if (cfg.command == "trace") return write_trace(cfg, out);
  throw CliError(kUsage, "unknown command " + cfg.command);
}

int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig cfg = parse_args(argv);
    if (!cfg.out_path) return run(cfg, out, err);
    std::ostringstream buf;
    const int code = run(cfg, buf, err);
    std::ofstream file(*cfg.out_path, std::ios::binary);
    if (!(file << buf.str())) throw CliError(kUsage, "cannot write " + *cfg.out_path);
    return code;
  } catch (const CliError& e) {
    (e.code() == kPassed ? out : err) << e.what() << (e.code() == kPassed ? "" : "\n");
    return e.code();
  }
}

}  // namespace spinrev_cli
