#include "cyclo2/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cyclo2/base_field.hpp"
#include "cyclo2/classifier.hpp"
#include "cyclo2/invariants.hpp"
#include "cyclo2/json_io.hpp"
#include "cyclo2/oracle.hpp"
#include "cyclo2/towers.hpp"

namespace cyclo2::cli {

namespace {

struct Config {
  unsigned e_max = 12;
  std::string output_dir;
};

Config load_config(const std::string& path) {
  Config cfg;
  if (path.empty()) return cfg;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto strip = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    line = strip(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key=value, got '" + line + "'");
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    if (key == "e_max")
      cfg.e_max = static_cast<unsigned>(std::stoul(value));
    else if (key == "output_dir")
      cfg.output_dir = value;
    else
      throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  if (cfg.e_max < 3 || cfg.e_max > 20)
    throw std::invalid_argument("config: e_max must be in [3, 20]");
  return cfg;
}

std::string resolve_path(const Config& cfg, const std::string& path) {
  if (cfg.output_dir.empty() || path.empty() || path.front() == '/') return path;
  return cfg.output_dir + "/" + path;
}

struct Range {
  long long lo = 0;
  long long hi = 0;
};

Range parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("bad range '" + s + "', expected a..b");
  Range r;
  try {
    r.lo = std::stoll(s.substr(0, dots));
    r.hi = std::stoll(s.substr(dots + 2));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + s + "', expected a..b");
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + s + "'");
  return r;
}

std::vector<BaseField> family_fields(const std::string& family, const std::string& range_str,
                                     unsigned k_max) {
  const Range r = parse_range(range_str);
  std::vector<BaseField> out;
  if (family == "primes") {
    if (r.lo < 0) throw std::invalid_argument("primes range must be nonnegative");
    for (long long p = std::max(r.lo, 3ll); p <= r.hi; ++p)
      if (p % 2 == 1 && is_prime(static_cast<std::uint64_t>(p)))
        for (unsigned k = 1; k <= k_max; ++k)
          out.push_back(BaseField::finite(static_cast<std::uint64_t>(p), k));
  } else if (family == "qzeta") {
    for (long long m = std::max(r.lo, 1ll); m <= r.hi; ++m)
      if (m % 4 != 2) out.push_back(BaseField::cyclotomic(static_cast<std::uint64_t>(m)));
  } else if (family == "qsqrt") {
    for (long long d = r.lo; d <= r.hi; ++d)
      if (d != 0 && d != 1 && is_squarefree(d)) out.push_back(BaseField::quadratic(d));
  } else {
    throw std::invalid_argument("unknown family '" + family + "' (primes | qzeta | qsqrt)");
  }
  if (out.empty()) throw std::invalid_argument("family range selects no fields");
  return out;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }
std::string truefalse(bool b) { return b ? "true" : "false"; }

std::string render_invariants(const BaseField& f, const Invariants& inv) {
  std::ostringstream os;
  os << "field        " << f.spec_string() << "\n";
  os << "nu_plus      " << inv.nu_plus << "\n";
  os << "nu           " << inv.nu << "\n";
  os << "property_c2  " << yesno(inv.has_c2);
  if (inv.c2_witness) os << " (witness e' = " << *inv.c2_witness << ")";
  os << "\n";
  os << "zeta4_in_f   " << yesno(inv.zeta4_in_f) << "\n";
  os << "t_table      ";
  for (std::size_t i = 0; i < inv.t_table.size(); ++i) {
    if (i) os << "  ";
    os << "k=" << inv.t_table[i].k << ":" << tf_string(inv.t_table[i]);
  }
  os << "\n";
  return os.str();
}

std::string render_classification(const Classification& c) {
  std::ostringstream os;
  os << "field        " << c.field.spec_string() << "\n";
  os << "e            " << c.e << "\n";
  os << "nu_plus      " << c.invariants.nu_plus << "\n";
  os << "nu           " << c.invariants.nu << "\n";
  os << "property_c2  " << yesno(c.invariants.has_c2);
  if (c.invariants.c2_witness) os << " (witness e' = " << *c.invariants.c2_witness << ")";
  os << "\n";
  os << "zeta4_in_f   " << yesno(c.invariants.zeta4_in_f) << "\n";
  if (c.small_degree) {
    os << "scope        warning: e <= nu, outside the structure theory;"
          " only the membership-derived degree is reported\n";
    os << "degree       " << c.degree << "\n";
    os << "cyclic       yes (degree <= 2)\n";
    return os.str();
  }
  os << "cyclic       " << yesno(c.cyclic) << " (" << reason_string(c.reason) << ")\n";
  os << "degree       " << c.degree << "\n";
  os << "galois       <";
  for (std::size_t i = 0; i < c.generator_names.size(); ++i) {
    if (i) os << ", ";
    os << c.generator_names[i].str();
  }
  os << "> in U_" << (std::uint64_t{1} << c.e);
  if (c.galois.order() <= 32) {
    os << " = {";
    for (std::size_t i = 0; i < c.galois.elements.size(); ++i) {
      if (i) os << ", ";
      os << c.galois.elements[i];
    }
    os << "}";
  } else {
    os << " (order " << c.galois.order() << ")";
  }
  os << "\n";
  os << "codegree2    ";
  for (std::size_t i = 0; i < c.codegree2.size(); ++i) {
    if (i) os << "  ";
    os << c.codegree2[i].first.str() << " (stabilizer [" << c.codegree2[i].second.residue << "])";
  }
  os << "\n";
  os << "min_poly     " << c.min_poly.str() << "\n";
  os << "towers       " << c.tower_count << "\n";
  return os.str();
}

std::string render_verification(const oracle::VerificationReport& rep, bool quiet) {
  std::ostringstream os;
  for (const auto& cl : rep.clauses) {
    if (cl.skipped) {
      if (!quiet) os << "  skip " << cl.clause << ": " << cl.expected << "\n";
      continue;
    }
    if (cl.pass && quiet) continue;
    os << (cl.pass ? "  ok   " : "  FAIL ") << cl.clause << ": expected " << cl.expected
       << ", actual " << cl.actual << "\n";
  }
  return os.str();
}

struct SweepRow {
  std::string field;
  unsigned e;
  Invariants inv;
  bool cyclic;
  std::uint64_t degree;
  std::uint64_t tower_count;
  bool verified;
};

std::vector<unsigned> sweep_e_values(const Invariants& inv, std::optional<unsigned> e_fixed,
                                     unsigned e_max) {
  std::vector<unsigned> out;
  if (e_fixed) {
    if (*e_fixed > inv.nu) out.push_back(*e_fixed);
    return out;
  }
  for (unsigned e = inv.nu + 1; e <= e_max; ++e) out.push_back(e);
  return out;
}

std::vector<SweepRow> run_sweep(const std::vector<BaseField>& fields,
                                std::optional<unsigned> e_fixed, unsigned e_max) {
  std::vector<SweepRow> rows;
  for (const auto& f : fields) {
    const Invariants inv = compute_invariants(f);
    for (unsigned e : sweep_e_values(inv, e_fixed, e_max)) {
      const Classification c = classify(f, e);
      SweepRow row{f.spec_string(), e,      inv,
                   c.cyclic,        c.degree, c.tower_count,
                   oracle::verify(f, e).all_pass()};
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "field,e,nu_plus,nu,c2,cyclic,degree,tower_count,verified\n";
  for (const auto& r : rows)
    os << r.field << "," << r.e << "," << r.inv.nu_plus << "," << r.inv.nu << ","
       << truefalse(r.inv.has_c2) << "," << truefalse(r.cyclic) << "," << r.degree << ","
       << r.tower_count << "," << truefalse(r.verified) << "\n";
  return os.str();
}

json sweep_json(const std::vector<SweepRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"field", r.field},
                   {"e", r.e},
                   {"nu_plus", r.inv.nu_plus},
                   {"nu", r.inv.nu},
                   {"c2", r.inv.has_c2},
                   {"cyclic", r.cyclic},
                   {"degree", r.degree},
                   {"tower_count", r.tower_count},
                   {"verified", r.verified}});
  return out;
}

// Rewrites bare negative ranges ("-50..50") as --range=... so CLI11 does not
// read them as option names. Tokens already following --range are left for
// CLI11 to consume as values.
std::vector<std::string> rewrite_negative_ranges(std::vector<std::string> args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    auto& a = args[i];
    if (a.size() < 4 || a[0] != '-' || !std::isdigit(static_cast<unsigned char>(a[1]))) continue;
    if (a.find("..") == std::string::npos) continue;
    if (i > 0 && args[i - 1] == "--range") continue;
    a = "--range=" + a;
  }
  return args;
}

}  // namespace

CliResult run(const std::vector<std::string>& raw_args) {
  CliResult result;
  std::ostringstream out, err;

  CLI::App app{"2-power cyclotomic extensions: cyclicity, Galois groups, towers"};
  app.require_subcommand(1);
  std::string config_path;
  bool quiet = false;
  app.add_option("--config", config_path, "key=value config file (e_max, output_dir)");
  app.add_flag("--quiet", quiet, "suppress per-instance output");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "classify F(zeta_{2^e})/F");
  std::string cls_field;
  unsigned cls_e = 0;
  bool cls_json = false;
  classify_cmd->add_option("field", cls_field, "field spec (fq:p[^k] | qzeta:m | qsqrt:d)")
      ->required();
  classify_cmd->add_option("e", cls_e, "2-power exponent e")->required();
  classify_cmd->add_flag("--json", cls_json, "JSON output");

  // invariants
  auto* inv_cmd = app.add_subcommand("invariants", "base-field invariants nu+, nu, C2");
  std::string inv_field;
  bool inv_json = false;
  inv_cmd->add_option("field", inv_field, "field spec")->required();
  inv_cmd->add_flag("--json", inv_json, "JSON output");

  // towers
  auto* tow_cmd = app.add_subcommand("towers", "enumerate 2-tower decompositions");
  std::string tow_field, tow_dot;
  unsigned tow_e = 0;
  bool tow_json = false;
  tow_cmd->add_option("field", tow_field, "field spec")->required();
  tow_cmd->add_option("e", tow_e, "2-power exponent e")->required();
  tow_cmd->add_option("--dot", tow_dot, "write DOT lattice to this path");
  tow_cmd->add_flag("--json", tow_json, "JSON output");

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "check all predictions against the oracle");
  std::string ver_field;
  unsigned ver_e = 0;
  bool ver_json = false;
  unsigned ver_emax = 0;
  unsigned ver_k = 1;
  std::vector<std::string> ver_sweep;
  std::string ver_range;
  ver_cmd->add_option("field", ver_field, "field spec");
  ver_cmd->add_option("e", ver_e, "2-power exponent e");
  ver_cmd->add_option("--sweep", ver_sweep, "family and range, e.g. --sweep primes 3..97")
      ->expected(2);
  ver_cmd->add_option("--range", ver_range, "range a..b (overrides the --sweep range)");
  ver_cmd->add_option("--k", ver_k, "max extension degree for the primes family");
  ver_cmd->add_option("--e-max", ver_emax, "verify all e with nu < e <= e-max");
  ver_cmd->add_flag("--json", ver_json, "JSON output");

  // sweep
  auto* sw_cmd = app.add_subcommand("sweep", "classify a family and emit CSV/JSON rows");
  std::string sw_family, sw_range, sw_csv;
  unsigned sw_k = 1;
  unsigned sw_e = 0;
  unsigned sw_emax = 0;
  bool sw_json = false;
  sw_cmd->add_option("family", sw_family, "primes | qzeta | qsqrt")->required();
  sw_cmd->add_option("range,--range", sw_range, "range a..b");
  sw_cmd->add_option("--k", sw_k, "max extension degree for the primes family");
  sw_cmd->add_option("--e", sw_e, "single e");
  sw_cmd->add_option("--e-max", sw_emax, "e from nu+1 up to this cap");
  sw_cmd->add_option("--csv", sw_csv, "write CSV to this path");
  sw_cmd->add_flag("--json", sw_json, "print JSON rows instead of CSV");

  try {
    std::vector<std::string> args = rewrite_negative_ranges(raw_args);
    std::reverse(args.begin(), args.end());  // CLI11's vector overload wants reversed argv
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.exit_code = code == 0 ? 0 : 1;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  try {
    const Config cfg = load_config(config_path);

    if (*classify_cmd) {
      const Classification c = classify(parse_field(cls_field), cls_e);
      out << (cls_json ? dump_json(to_json(c)) : render_classification(c));
    } else if (*inv_cmd) {
      const BaseField f = parse_field(inv_field);
      const Invariants inv = compute_invariants(f);
      if (inv_json) {
        json j = to_json(inv);
        j["field"] = f.spec_string();
        out << dump_json(j);
      } else {
        out << render_invariants(f, inv);
      }
    } else if (*tow_cmd) {
      const BaseField f = parse_field(tow_field);
      const Invariants inv = compute_invariants(f);
      if (tow_e <= inv.nu) {
        out << "warning: e <= nu (" << inv.nu << "), degree <= 2; no towers to enumerate\n";
      } else {
        const auto towers = enumerate_towers(f, tow_e);
        if (tow_json) {
          json j{{"field", f.spec_string()},
                 {"e", tow_e},
                 {"count", towers.size()},
                 {"towers", to_json(towers)}};
          out << dump_json(j);
        } else {
          for (const auto& t : towers) out << t.str() << "\n";
        }
        if (!tow_dot.empty()) {
          const auto h = oracle::galois_subgroup(f, tow_e);
          const std::string dot =
              emit_dot(f, tow_e, towers, oracle::label_stabilizer_table(h, tow_e));
          const std::string path = resolve_path(cfg, tow_dot);
          std::ofstream os(path);
          if (!os) throw std::invalid_argument("cannot write DOT file '" + path + "'");
          os << dot;
          if (!tow_json) out << "wrote DOT lattice to " << path << "\n";
        }
      }
    } else if (*ver_cmd) {
      bool all_ok = true;
      json jreports = json::array();
      std::size_t count = 0;
      auto run_one = [&](const BaseField& f, unsigned e) {
        const auto rep = oracle::verify(f, e);
        ++count;
        all_ok = all_ok && rep.all_pass();
        if (ver_json) {
          jreports.push_back(to_json(rep));
        } else {
          if (!quiet || !rep.all_pass())
            out << (rep.all_pass() ? "PASS " : "FAIL ") << f.spec_string() << " e=" << e << "\n";
          out << render_verification(rep, quiet);
        }
      };
      if (!ver_sweep.empty() || !ver_range.empty()) {
        std::string family = ver_sweep.empty() ? ver_field : ver_sweep[0];
        std::string range = !ver_range.empty()
                                ? ver_range
                                : (ver_sweep.size() > 1 ? ver_sweep[1] : std::string{});
        if (family.empty() || range.empty())
          throw std::invalid_argument("verify sweep needs a family and a range");
        const unsigned e_max = ver_emax ? ver_emax : cfg.e_max;
        if (e_max > 20) throw std::invalid_argument("e-max exceeds the supported cap 20");
        for (const auto& f : family_fields(family, range, ver_k)) {
          const Invariants inv = compute_invariants(f);
          for (unsigned e = inv.nu + 1; e <= e_max; ++e) run_one(f, e);
        }
      } else {
        if (ver_field.empty()) throw std::invalid_argument("verify needs a field or --sweep");
        const BaseField f = parse_field(ver_field);
        if (ver_emax) {
          const Invariants inv = compute_invariants(f);
          if (ver_emax > 20) throw std::invalid_argument("e-max exceeds the supported cap 20");
          for (unsigned e = inv.nu + 1; e <= ver_emax; ++e) run_one(f, e);
        } else {
          if (ver_e == 0) throw std::invalid_argument("verify needs e or --e-max");
          run_one(f, ver_e);
        }
      }
      if (ver_json)
        out << dump_json(json{{"instances", count}, {"all_pass", all_ok}, {"reports", jreports}});
      else
        out << (all_ok ? "PASS" : "FAIL") << " (" << count << " instance"
            << (count == 1 ? "" : "s") << ")\n";
      if (!all_ok) result.exit_code = 2;
    } else if (*sw_cmd) {
      const std::string& range = sw_range;
      if (range.empty()) throw std::invalid_argument("sweep needs a range a..b");
      if (sw_e && sw_emax) throw std::invalid_argument("give only one of --e and --e-max");
      const unsigned e_max = sw_emax ? sw_emax : cfg.e_max;
      if (e_max > 20 || (sw_e && sw_e > 20))
        throw std::invalid_argument("e exceeds the supported cap 20");
      std::optional<unsigned> e_fixed;
      if (sw_e) e_fixed = sw_e;
      const auto rows = run_sweep(family_fields(sw_family, range, sw_k), e_fixed, e_max);
      if (sw_json) {
        out << dump_json(sweep_json(rows));
      } else if (!sw_csv.empty()) {
        const std::string path = resolve_path(cfg, sw_csv);
        std::ofstream os(path);
        if (!os) throw std::invalid_argument("cannot write CSV file '" + path + "'");
        os << sweep_csv(rows);
        out << "wrote " << rows.size() << " rows to " << path << "\n";
      } else {
        out << sweep_csv(rows);
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = 1;
  }

  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace cyclo2::cli
