#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "binpred/digits.hpp"
#include "binpred/error.hpp"
#include "binpred/predictor.hpp"
#include "binpred/spectrum.hpp"
#include "binpred/zumkeller.hpp"

namespace binpred::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

const std::map<std::string, Format> kFormats{
    {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
const std::map<std::string, SpectrumMethod> kMethods{
    {"brute", SpectrumMethod::Brute}, {"dp", SpectrumMethod::Dp}, {"auto", SpectrumMethod::Auto}};

constexpr u64 kMaxGuard = u64{1} << 32;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Format format = Format::Text;
  std::string out_path;
  std::optional<u64> guard_flag;
  SpectrumMethod method = SpectrumMethod::Auto;
  unsigned jobs = 1;
  bool verbose = false;

  u64 guard() const {
    if (guard_flag) {
      if (*guard_flag > kMaxGuard) throw UsageError("--guard must not exceed 2^32");
      return *guard_flag;
    }
    const char* env = std::getenv(kGuardEnv);
    if (env == nullptr || *env == '\0') return kDefaultBruteGuard;
    u64 value = 0;
    std::istringstream in(env);
    if (!(in >> value) || !in.eof() || value > kMaxGuard) {
      throw UsageError(std::string(kGuardEnv) + " must be an integer in [0, 2^32]");
    }
    return value;
  }
};

template <typename Range>
std::string join(const Range& values, std::string_view sep) {
  std::string out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += sep;
    out += std::to_string(v);
    first = false;
  }
  return out;
}

// Bases up to 10 print digits back to back; larger bases separate them with
// dots. Zero prints as "0".
std::string digits_text(const DigitExpansion& e) {
  if (e.is_zero()) return "0";
  return e.base <= 10 ? join(e.digits, "") : join(e.digits, ".");
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

// --- renderers -------------------------------------------------------------

std::string render_expansion(const DigitExpansion& e, Format f) {
  std::ostringstream s;
  switch (f) {
    case Format::Text:
      s << digits_text(e) << '\n';
      break;
    case Format::Json:
      s << json{{"base", e.base.value()}, {"digits", e.digits}, {"value", e.value}}.dump() << '\n';
      break;
    case Format::Csv:
      s << "base,value,digits\n" << e.base.value() << ',' << e.value << ',' << join(e.digits, " ") << '\n';
      break;
  }
  return s.str();
}

std::string render_spectrum(const ValuationSpectrum& sp, SpectrumMethod used, Format f) {
  std::ostringstream s;
  switch (f) {
    case Format::Text:
      s << "n: " << sp.n() << "\nprime: " << sp.prime().value() << "\nmethod: " << to_string(used)
        << "\ncounts: " << join(sp.counts(), ",") << '\n';
      break;
    case Format::Json:
      s << json{{"n", sp.n()},
                {"prime", sp.prime().value()},
                {"method", to_string(used)},
                {"counts", sp.counts()}}
                .dump()
        << '\n';
      break;
    case Format::Csv:
      s << "n,prime,method,k,count\n";
      for (std::size_t k = 0; k < sp.counts().size(); ++k) {
        s << sp.n() << ',' << sp.prime().value() << ',' << to_string(used) << ',' << k << ','
          << sp.counts()[k] << '\n';
      }
      break;
  }
  return s.str();
}

std::string render_report(const PredictorReport& r, Format f) {
  std::ostringstream s;
  switch (f) {
    case Format::Text:
      s << "n: " << r.n << "\nprime: " << r.p.value()
        << "\nsuccessor_digits: " << digits_text(r.successor_digits)
        << "\nexpected: " << join(r.expected.counts(), ",")
        << "\nactual: " << join(r.actual.counts(), ",") << "\nverdict: " << bool_text(r.verdict)
        << '\n';
      break;
    case Format::Json:
      s << json{{"n", r.n},
                {"prime", r.p.value()},
                {"successor_digits", r.successor_digits.digits},
                {"expected", r.expected.counts()},
                {"actual", r.actual.counts()},
                {"verdict", r.verdict}}
                .dump()
        << '\n';
      break;
    case Format::Csv:
      s << "n,prime,successor_digits,expected,actual,verdict\n"
        << r.n << ',' << r.p.value() << ',' << join(r.successor_digits.digits, " ") << ','
        << join(r.expected.counts(), " ") << ',' << join(r.actual.counts(), " ") << ','
        << bool_text(r.verdict) << '\n';
      break;
  }
  return s.str();
}

std::string render_list(const std::vector<u64>& values, json header, Format f) {
  std::ostringstream s;
  switch (f) {
    case Format::Text:
      s << join(values, " ") << '\n';
      break;
    case Format::Json:
      header["values"] = values;
      s << header.dump() << '\n';
      break;
    case Format::Csv:
      s << "n\n";
      for (const u64 v : values) s << v << '\n';
      break;
  }
  return s.str();
}

std::string render_verification(const VerificationRecord& rec, bool verbose, Format f) {
  std::ostringstream s;
  switch (f) {
    case Format::Text:
      s << "prime: " << rec.p.value() << "\nfrom: " << rec.lo << "\nto: " << rec.hi
        << "\nchecked: " << rec.checked_count << "\ncounterexamples: " << rec.counterexamples.size()
        << '\n';
      for (const Counterexample& c : rec.counterexamples) {
        s << "counterexample: " << c.n << ' ' << to_string(c.direction) << '\n';
      }
      if (verbose) {
        for (const VerificationRow& row : rec.rows) {
          s << "row: " << row.n << " zumkeller=" << bool_text(row.is_zumkeller)
            << " predictor=" << bool_text(row.is_predictor) << " agree=" << bool_text(row.agree())
            << '\n';
        }
      }
      break;
    case Format::Json: {
      json doc{{"prime", rec.p.value()},
               {"from", rec.lo},
               {"to", rec.hi},
               {"checked", rec.checked_count},
               {"counterexamples", json::array()}};
      for (const Counterexample& c : rec.counterexamples) {
        doc["counterexamples"].push_back({{"n", c.n}, {"direction", to_string(c.direction)}});
      }
      if (verbose) {
        doc["rows"] = json::array();
        for (const VerificationRow& row : rec.rows) {
          doc["rows"].push_back({{"n", row.n},
                                 {"is_zumkeller", row.is_zumkeller},
                                 {"is_predictor", row.is_predictor},
                                 {"agree", row.agree()}});
        }
      }
      s << doc.dump() << '\n';
      break;
    }
    case Format::Csv:
      if (verbose) {
        s << "n,is_zumkeller,is_predictor,agree\n";
        for (const VerificationRow& row : rec.rows) {
          s << row.n << ',' << bool_text(row.is_zumkeller) << ',' << bool_text(row.is_predictor)
            << ',' << bool_text(row.agree()) << '\n';
        }
      } else {
        s << "prime,from,to,checked,counterexamples\n"
          << rec.p.value() << ',' << rec.lo << ',' << rec.hi << ',' << rec.checked_count << ','
          << rec.counterexamples.size() << '\n';
      }
      break;
  }
  return s.str();
}

// --- plumbing --------------------------------------------------------------

void emit(const std::string& doc, const RunConfig& cfg, std::ostream& out) {
  out << doc;
  if (!cfg.out_path.empty()) {
    std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot open " + cfg.out_path + " for writing");
    file << doc;
    if (!file) throw UsageError("failed writing " + cfg.out_path);
  }
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  cmd->add_option("--out", cfg.out_path, "Also write the output to this file");
}

void add_guard(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--guard", cfg.guard_flag,
                  "Brute-force limit on n (default 2^24, env PADIC_BRUTE_GUARD)");
}

void add_method(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option_function<std::string>(
         "--method", [&cfg](const std::string& name) { cfg.method = kMethods.at(name); },
         "Spectrum method: brute, dp or auto")
      ->check(CLI::IsMember(kMethods));
}

SpectrumMethod resolve(SpectrumMethod m, u64 n, u64 guard) {
  if (m != SpectrumMethod::Auto) return m;
  return n <= guard ? SpectrumMethod::Brute : SpectrumMethod::Dp;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-adic valuation spectra of binomial rows and base-p binomial predictors"};
  app.name("binpred");
  app.require_subcommand(1);

  RunConfig cfg;
  u64 n = 0;
  u64 base = 0;
  u64 prime = 0;
  u64 limit = 0;
  u64 from = 0;
  u64 to = 0;
  u64 p_value = 0;
  u64 q_value = 0;

  int exit_code = kExitOk;
  std::function<void()> action;

  auto* expand_cmd = app.add_subcommand("expand", "Base-p digits of n, most significant first");
  expand_cmd->add_option("n", n)->required();
  expand_cmd->add_option("--base", base)->required();
  add_common(expand_cmd, cfg);
  expand_cmd->callback([&] {
    action = [&] { emit(render_expansion(expand(n, Prime{base}), cfg.format), cfg, out); };
  });

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Valuation spectrum of row n");
  spectrum_cmd->add_option("n", n)->required();
  spectrum_cmd->add_option("--prime", prime)->required();
  add_method(spectrum_cmd, cfg);
  add_guard(spectrum_cmd, cfg);
  add_common(spectrum_cmd, cfg);
  spectrum_cmd->callback([&] {
    action = [&] {
      const Prime p{prime};
      const u64 guard = cfg.guard();
      const SpectrumMethod used = resolve(cfg.method, n, guard);
      emit(render_spectrum(compute_spectrum(n, p, used, guard), used, cfg.format), cfg, out);
    };
  });

  auto* check_cmd = app.add_subcommand("check", "Is n a binomial predictor in base p");
  check_cmd->add_option("n", n)->required();
  check_cmd->add_option("--prime", prime)->required();
  add_method(check_cmd, cfg);
  add_guard(check_cmd, cfg);
  add_common(check_cmd, cfg);
  check_cmd->callback([&] {
    action = [&] {
      const PredictorReport r = check_predictor(n, Prime{prime}, cfg.method, cfg.guard());
      emit(render_report(r, cfg.format), cfg, out);
      exit_code = r.verdict ? kExitOk : kExitNegative;
    };
  });

  auto* zumkeller_cmd = app.add_subcommand("zumkeller", "Zumkeller numbers in base p up to a limit");
  zumkeller_cmd->add_option("--prime", prime)->required();
  zumkeller_cmd->add_option("--limit", limit)->required();
  add_common(zumkeller_cmd, cfg);
  zumkeller_cmd->callback([&] {
    action = [&] {
      const Prime p{prime};
      emit(render_list(enumerate_zumkeller(p, limit), json{{"prime", prime}, {"limit", limit}},
                       cfg.format),
           cfg, out);
    };
  });

  auto* verify_cmd =
      app.add_subcommand("verify", "Check predictor <=> Zumkeller for every n in a range");
  verify_cmd->add_option("--prime", prime)->required();
  verify_cmd->add_option("--from", from)->required();
  verify_cmd->add_option("--to", to)->required();
  verify_cmd->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--verbose", cfg.verbose, "One row per n");
  add_common(verify_cmd, cfg);
  verify_cmd->callback([&] {
    action = [&] {
      const Prime p{prime};
      if (from > to) throw UsageError("--from must not exceed --to");
      const VerificationRecord rec = verify_theorem(p, from, to, {cfg.jobs, cfg.verbose});
      emit(render_verification(rec, cfg.verbose, cfg.format), cfg, out);
      if (cfg.format == Format::Text) {
        const auto ms = std::chrono::duration<double, std::milli>(rec.elapsed).count();
        err << "elapsed: " << std::fixed << std::setprecision(1) << ms << " ms\n";
      }
      exit_code = rec.counterexamples.empty() ? kExitOk : kExitNegative;
    };
  });

  auto* search_cmd =
      app.add_subcommand("digit-sum-search", "All n <= limit whose digit sums in bases p and q agree");
  search_cmd->add_option("--p", p_value)->required();
  search_cmd->add_option("--q", q_value)->required();
  search_cmd->add_option("--limit", limit)->required();
  add_guard(search_cmd, cfg);
  add_common(search_cmd, cfg);
  search_cmd->callback([&] {
    action = [&] {
      const std::vector<u64> hits =
          digit_sum_search(Prime{p_value}, Prime{q_value}, limit, cfg.guard());
      emit(render_list(hits, json{{"p", p_value}, {"q", q_value}, {"limit", limit}}, cfg.format),
           cfg, out);
    };
  });

  std::vector<const char*> argv{"binpred"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (action) action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return exit_code;
}

}  // namespace binpred::cli
