#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cubics/constants.hpp"
#include "cubics/heights.hpp"
#include "cubics/io.hpp"
#include "cubics/tables.hpp"

using namespace cubics;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

void print_usage(std::ostream& os) {
  os << "usage: cubics [--format json|tsv|table] <command> [options]\n"
        "\n"
        "commands:\n"
        "  lines                          the 27 lines of the cubic surface\n"
        "  pencils                        the 27 conic pencil classes\n"
        "  nefcone                        extreme rays of the nef cone\n"
        "  subcone --pencil <name>        extreme rays of a pencil subcone (L1..L6, L12..L56, B1..B6)\n"
        "  subcone --hyperplane           extreme rays of the hyperplane subcone\n"
        "  seshadri <7 ints> [--oracle]   Seshadri constant of a nef class, with certificates\n"
        "  alpha <7 ints> --tangent cusp|node-local|node-rational\n"
        "                                 approximation constant of a nef class\n"
        "  curve-alpha --degree <d> --branch m,r [--branch m,r ...]\n"
        "                                 approximation constant on a singular rational curve\n"
        "  verify tables|reasons|all      check the embedded tables against the computed cones\n"
        "  estimate-alpha --kind line|cusp|nodal|quadric --length <n>\n"
        "                 [--target <p/q>] [--sign +1|-1] [--exponents a,b]\n"
        "                 [--degree <m>] [--csv <path>]\n"
        "                                 empirical approximation exponent of a test sequence\n";
}

std::string fixed6(const Real& x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << x;
  return os.str();
}

void print_class_list(const std::vector<DivisorClass>& classes, const std::string& key, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    json out;
    out[key] = json::array();
    for (const DivisorClass& d : classes) out[key].push_back(divisor_json(d));
    std::cout << out.dump(2) << '\n';
    return;
  }
  int idx = 1;
  for (const DivisorClass& d : classes) {
    if (fmt == OutputFormat::Tsv) {
      std::cout << idx;
      for (std::size_t k = 0; k < 7; ++k) std::cout << '\t' << d.coeff[k];
      std::cout << '\n';
    } else {
      std::cout << std::setw(3) << idx;
      for (std::size_t k = 0; k < 7; ++k) std::cout << std::setw(4) << d.coeff[k];
      std::cout << '\n';
    }
    ++idx;
  }
}

void print_constant(const ConstantResult& result, const std::optional<ExtendedRational>& oracle,
                    OutputFormat fmt) {
  std::vector<std::string> labels;
  for (const Certificate& c : result.certificates) labels.push_back(certificate_label(c));
  if (fmt == OutputFormat::Json) {
    json out;
    out["value"] = to_string(result.value);
    out["certificates"] = labels;
    if (oracle) out["oracle"] = to_string(*oracle);
    std::cout << out.dump(2) << '\n';
    return;
  }
  const char sep = fmt == OutputFormat::Tsv ? '\t' : ' ';
  std::cout << "value" << sep << to_string(result.value) << '\n';
  std::cout << "certificates" << sep;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (k) std::cout << ',';
    std::cout << labels[k];
  }
  std::cout << '\n';
  if (oracle) std::cout << "oracle" << sep << to_string(*oracle) << '\n';
}

int run_verify(const std::string& what, OutputFormat fmt) {
  const bool do_tables = what == "tables" || what == "all";
  const bool do_reasons = what == "reasons" || what == "all";
  if (!do_tables && !do_reasons) {
    std::cerr << "verify: expected tables, reasons or all\n";
    return kExitUsage;
  }
  bool pass = true;
  json out;
  for (int id = 1; do_tables && id <= 3; ++id) {
    VerificationReport r = verify_table(id);
    pass = pass && r.pass;
    if (fmt == OutputFormat::Json) {
      json entry;
      entry["table"] = id;
      entry["pass"] = r.pass;
      entry["missing"] = json::array();
      for (const DivisorClass& d : r.missing) entry["missing"].push_back(divisor_json(d));
      entry["extra"] = json::array();
      for (const DivisorClass& d : r.extra) entry["extra"].push_back(divisor_json(d));
      out["tables"].push_back(entry);
    } else {
      std::cout << "table " << id << ": " << (r.pass ? "PASS" : "FAIL") << " ("
                << (r.verdicts.size() - r.missing.size()) << "/" << r.verdicts.size()
                << " generators reproduced, " << r.extra.size() << " extra)\n";
      for (const DivisorClass& d : r.missing) std::cout << "  missing " << divisor_tokens(d) << '\n';
      for (const DivisorClass& d : r.extra) std::cout << "  extra " << divisor_tokens(d) << '\n';
    }
  }
  if (do_reasons) {
    VerificationReport r = verify_reasons();
    pass = pass && r.pass;
    std::size_t failed = 0;
    for (const RowVerdict& v : r.verdicts) {
      if (!v.pass) ++failed;
    }
    if (fmt == OutputFormat::Json) {
      json entry;
      entry["pass"] = r.pass;
      entry["rows"] = r.verdicts.size();
      entry["failed"] = json::array();
      for (const RowVerdict& v : r.verdicts) {
        if (!v.pass) {
          entry["failed"].push_back({{"table", v.table_id}, {"row", v.index}, {"detail", v.detail}});
        }
      }
      out["reasons"] = entry;
    } else {
      std::cout << "reasons: " << (r.pass ? "PASS" : "FAIL") << " (" << (r.verdicts.size() - failed) << "/"
                << r.verdicts.size() << " rows verified)\n";
      for (const RowVerdict& v : r.verdicts) {
        if (!v.pass) std::cout << "  table " << v.table_id << " row " << v.index << ": " << v.detail << '\n';
      }
    }
  }
  if (fmt == OutputFormat::Json) {
    out["pass"] = pass;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "overall: " << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? kExitOk : kExitVerifyFailed;
}

std::optional<TangentType> parse_tangent(const std::string& s) {
  if (s == "cusp") return TangentType::Cuspidal;
  if (s == "node-local") return TangentType::NodalSlopesInKvNotK;
  if (s == "node-rational") return TangentType::NodalSlopesInKOrNotInKv;
  return std::nullopt;
}

std::optional<Rat> parse_rational(const std::string& s) {
  try {
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) return std::nullopt;
    return Rat(num) / Rat(den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int run_estimate(std::vector<std::string> args, OutputFormat fmt) {
  std::string kind;
  std::size_t length = 0;
  Rat target = 0;
  int sign = +1;
  unsigned ea = 1, eb = 1;
  unsigned degree = 1;
  std::string csv_path;
  for (std::size_t k = 0; k < args.size(); ++k) {
    const std::string& a = args[k];
    auto next = [&]() -> std::optional<std::string> {
      if (k + 1 >= args.size()) return std::nullopt;
      return args[++k];
    };
    if (a == "--kind") {
      auto v = next();
      if (!v) return kExitUsage;
      kind = *v;
    } else if (a == "--length") {
      auto v = next();
      if (!v) return kExitUsage;
      length = static_cast<std::size_t>(std::stoul(*v));
    } else if (a == "--target") {
      auto v = next();
      auto r = v ? parse_rational(*v) : std::nullopt;
      if (!r) return kExitUsage;
      target = *r;
    } else if (a == "--sign") {
      auto v = next();
      if (!v || (*v != "+1" && *v != "-1")) return kExitUsage;
      sign = *v == "+1" ? +1 : -1;
    } else if (a == "--exponents") {
      auto v = next();
      if (!v) return kExitUsage;
      const std::size_t comma = v->find(',');
      if (comma == std::string::npos) return kExitUsage;
      ea = static_cast<unsigned>(std::stoul(v->substr(0, comma)));
      eb = static_cast<unsigned>(std::stoul(v->substr(comma + 1)));
    } else if (a == "--degree") {
      auto v = next();
      if (!v) return kExitUsage;
      degree = static_cast<unsigned>(std::stoul(*v));
    } else if (a == "--csv") {
      auto v = next();
      if (!v) return kExitUsage;
      csv_path = *v;
    } else {
      std::cerr << "estimate-alpha: unknown option " << a << '\n';
      return kExitUsage;
    }
  }
  SequenceSpec spec;
  if (kind == "line") {
    spec = SequenceSpec::line_shift(target, length);
  } else if (kind == "cusp") {
    spec = SequenceSpec::cuspidal_cubic(length);
  } else if (kind == "nodal") {
    spec = SequenceSpec::nodal_cubic_branch(sign, length);
  } else if (kind == "quadric") {
    spec = SequenceSpec::split_quadric(ea, eb, length);
  } else {
    std::cerr << "estimate-alpha: --kind must be line, cusp, nodal or quadric\n";
    return kExitUsage;
  }

  const TestSequence seq = generate(spec);
  AlphaEstimate est = estimate_alpha(seq, degree);
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) {
      std::cerr << "estimate-alpha: cannot open " << csv_path << '\n';
      return kExitUsage;
    }
    write_sequence_csv(csv, seq, est);
  }

  if (fmt == OutputFormat::Json) {
    json out;
    out["kind"] = kind;
    out["length"] = length;
    out["degree"] = degree;
    out["estimate"] = fixed6(est.estimate);
    out["tail_begin"] = est.tail_begin;
    out["tail_min"] = fixed6(est.tail_min);
    out["tail_max"] = fixed6(est.tail_max);
    out["distances_decreasing"] = est.distances_decreasing;
    std::cout << out.dump(2) << '\n';
  } else {
    const char sep = fmt == OutputFormat::Tsv ? '\t' : ' ';
    std::cout << "kind" << sep << kind << '\n'
              << "length" << sep << length << '\n'
              << "degree" << sep << degree << '\n'
              << "estimate" << sep << fixed6(est.estimate) << '\n'
              << "tail-begin" << sep << est.tail_begin << '\n'
              << "tail-min" << sep << fixed6(est.tail_min) << '\n'
              << "tail-max" << sep << fixed6(est.tail_max) << '\n'
              << "distances-decreasing" << sep << (est.distances_decreasing ? "yes" : "no") << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);

  OutputFormat fmt = OutputFormat::Table;
  for (std::size_t k = 0; k < args.size();) {
    if (args[k] == "--format") {
      if (k + 1 >= args.size()) {
        std::cerr << "--format needs a value\n";
        return kExitUsage;
      }
      auto f = parse_format(args[k + 1]);
      if (!f) {
        std::cerr << "--format must be json, tsv or table\n";
        return kExitUsage;
      }
      fmt = *f;
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(k), args.begin() + static_cast<std::ptrdiff_t>(k + 2));
    } else {
      ++k;
    }
  }

  if (args.empty()) {
    print_usage(std::cerr);
    return kExitUsage;
  }
  const std::string cmd = args.front();
  args.erase(args.begin());

  try {
    if (cmd == "lines") {
      print_class_list(lines27(), "lines", fmt);
      return kExitOk;
    }
    if (cmd == "pencils") {
      print_class_list(pencils27(), "pencils", fmt);
      return kExitOk;
    }
    if (cmd == "nefcone") {
      print_class_list(nef_cone().rays, "rays", fmt);
      return kExitOk;
    }
    if (cmd == "subcone") {
      if (args.size() == 1 && args[0] == "--hyperplane") {
        print_class_list(subcone(SubconeSelector::hyperplane()).rays, "rays", fmt);
        return kExitOk;
      }
      if (args.size() == 2 && args[0] == "--pencil") {
        auto c = parse_pencil_name(args[1]);
        if (!c) {
          std::cerr << "subcone: unknown pencil name " << args[1] << '\n';
          return kExitUsage;
        }
        print_class_list(subcone(SubconeSelector::pencil(*c)).rays, "rays", fmt);
        return kExitOk;
      }
      std::cerr << "subcone: expected --pencil <name> or --hyperplane\n";
      return kExitUsage;
    }
    if (cmd == "seshadri") {
      bool oracle = false;
      if (!args.empty() && args.back() == "--oracle") {
        oracle = true;
        args.pop_back();
      }
      auto d = parse_divisor(args);
      if (!d) {
        std::cerr << "seshadri: expected seven integers\n";
        return kExitUsage;
      }
      ConstantResult r = seshadri(*d);
      std::optional<ExtendedRational> o;
      if (oracle) o = seshadri_oracle(*d);
      print_constant(r, o, fmt);
      return kExitOk;
    }
    if (cmd == "alpha") {
      std::optional<TangentType> tangent;
      for (std::size_t k = 0; k + 1 < args.size(); ++k) {
        if (args[k] == "--tangent") {
          tangent = parse_tangent(args[k + 1]);
          if (!tangent) {
            std::cerr << "alpha: --tangent must be cusp, node-local or node-rational\n";
            return kExitUsage;
          }
          args.erase(args.begin() + static_cast<std::ptrdiff_t>(k),
                     args.begin() + static_cast<std::ptrdiff_t>(k + 2));
          break;
        }
      }
      auto d = parse_divisor(args);
      if (!tangent || !d) {
        std::cerr << "alpha: expected seven integers and --tangent cusp|node-local|node-rational\n";
        return kExitUsage;
      }
      print_constant(alpha(*d, *tangent), std::nullopt, fmt);
      return kExitOk;
    }
    if (cmd == "curve-alpha") {
      unsigned degree = 0;
      std::vector<BranchDatum> branches;
      for (std::size_t k = 0; k < args.size(); ++k) {
        if (args[k] == "--degree" && k + 1 < args.size()) {
          degree = static_cast<unsigned>(std::stoul(args[++k]));
        } else if (args[k] == "--branch" && k + 1 < args.size()) {
          const std::string& v = args[++k];
          const std::size_t comma = v.find(',');
          if (comma == std::string::npos) {
            std::cerr << "curve-alpha: --branch expects m,r\n";
            return kExitUsage;
          }
          BranchDatum b;
          b.multiplicity = static_cast<unsigned>(std::stoul(v.substr(0, comma)));
          b.residue_code = static_cast<unsigned>(std::stoul(v.substr(comma + 1)));
          branches.push_back(b);
        } else {
          std::cerr << "curve-alpha: unknown option " << args[k] << '\n';
          return kExitUsage;
        }
      }
      if (degree == 0 || branches.empty()) {
        std::cerr << "curve-alpha: --degree and at least one --branch are required\n";
        return kExitUsage;
      }
      ExtendedRational a = alpha_rational_curve(degree, branches);
      if (fmt == OutputFormat::Json) {
        json out;
        out["value"] = to_string(a);
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << "value" << (fmt == OutputFormat::Tsv ? '\t' : ' ') << to_string(a) << '\n';
      }
      return kExitOk;
    }
    if (cmd == "verify") {
      if (args.size() != 1) {
        std::cerr << "verify: expected tables, reasons or all\n";
        return kExitUsage;
      }
      return run_verify(args[0], fmt);
    }
    if (cmd == "estimate-alpha") {
      return run_estimate(std::move(args), fmt);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << cmd << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << cmd << ": error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::cerr << "unknown command: " << cmd << '\n';
  print_usage(std::cerr);
  return kExitUsage;
}
