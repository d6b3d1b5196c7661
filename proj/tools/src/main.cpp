// wagner: CLI front end for Nielsen-theoretic invariants of free group
// endomorphisms.  Subcommands: remnant, nielsen, dynamics, periodic, density.
//
// Exit status: 0 success; 2 certified-precondition failure (no remnant, not
// in S_l, membership check false); 3 length-cap/budget exceeded; 1 parse or
// usage errors.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wagner/density.hpp"
#include "wagner/dynamics.hpp"
#include "wagner/nielsen.hpp"
#include "wagner/parse.hpp"
#include "wagner/periodic.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitRefused = 2;
constexpr int kExitExhausted = 3;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt_double(double v, int precision = 6) {
  std::ostringstream out;
  out << std::setprecision(precision) << v;
  return out.str();
}

// --map accepts an inline endomorphism or a path to a file holding one.
std::string load_map_text(const std::string& map_arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(map_arg, ec)) {
    std::ifstream in(map_arg);
    if (!in) throw wagner::Error("cannot read map file: " + map_arg);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  return map_arg;
}

wagner::Endomorphism load_map(const std::string& map_arg, bool auto_reduce) {
  wagner::ParseResult parsed =
      wagner::parse_endomorphism_any(load_map_text(map_arg), auto_reduce);
  if (parsed.reduced_any) {
    std::cerr << "warning: unreduced image(s) were freely reduced\n";
  }
  return parsed.endomorphism;
}

// Predicate strings: "remnant", "Rk=<k>", "Sl=<l>".
wagner::EndomorphismPredicate parse_predicate(const std::string& spec) {
  if (spec == "remnant") {
    return {"remnant", [](const wagner::Endomorphism& phi) {
              return wagner::has_remnant(phi);
            }};
  }
  auto parse_level = [&](const std::string& prefix) -> std::optional<std::size_t> {
    if (spec.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string digits = spec.substr(prefix.size());
    if (digits.empty()) throw wagner::Error("missing level in predicate: " + spec);
    std::size_t consumed = 0;
    unsigned long level = 0;
    try {
      level = std::stoul(digits, &consumed);
    } catch (const std::exception&) {
      throw wagner::Error("bad level in predicate: " + spec);
    }
    if (consumed != digits.size() || level < 1) {
      throw wagner::Error("bad level in predicate: " + spec);
    }
    return level;
  };
  if (auto k = parse_level("Rk=")) {
    return {spec, [k = *k](const wagner::Endomorphism& phi) {
              return wagner::in_rk(phi, k);
            }};
  }
  if (auto l = parse_level("Sl=")) {
    return {spec, [l = *l](const wagner::Endomorphism& phi) {
              return wagner::in_sl(phi, l);
            }};
  }
  throw wagner::Error("unknown predicate '" + spec +
                      "' (expected remnant, Rk=<k>, or Sl=<l>)");
}

std::string generator_name(int i, int rank) {
  if (rank <= 26) return std::string(1, static_cast<char>('a' + i - 1));
  return std::to_string(i);
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// remnant
// ---------------------------------------------------------------------------

struct RemnantConfig {
  std::string map;
  bool auto_reduce = false;
  std::string check;
  std::string format = "table";
};

int cmd_remnant(const RemnantConfig& cfg) {
  const auto start = Clock::now();
  const wagner::Endomorphism phi = load_map(cfg.map, cfg.auto_reduce);
  const wagner::RemnantDecomposition dec = wagner::remnant_decomposition(phi);
  const std::size_t sl_level = wagner::max_sl_level(phi);

  std::optional<bool> member;
  if (!cfg.check.empty()) {
    member = parse_predicate(cfg.check).test(phi);
  }

  if (cfg.format == "json") {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["command"] = "remnant";
    doc["map"] = wagner::format_endomorphism(phi);
    doc["rank"] = phi.rank();
    doc["generators"] = ordered_json::array();
    for (int i = 1; i <= phi.rank(); ++i) {
      ordered_json row;
      row["generator"] = i;
      row["name"] = generator_name(i, phi.rank());
      row["image"] = wagner::format_word(phi.image(i), phi.rank());
      const auto& span = dec.span(i);
      row["has_remnant"] = span.has_value();
      if (span) {
        row["start"] = span->start;
        row["end"] = span->end;
        row["length"] = span->length();
        row["word"] =
            wagner::format_word(wagner::remnant_word(phi, dec, i), phi.rank());
      }
      doc["generators"].push_back(row);
    }
    doc["has_remnant"] = dec.complete();
    doc["max_sl_level"] = sl_level;
    if (member) {
      doc["check"] = ordered_json{{"predicate", cfg.check}, {"member", *member}};
    }
    doc["elapsed_ms"] = ms_since(start);
    emit(doc);
  } else if (cfg.format == "csv") {
    std::cout << "generator,image,start,end,length,word\n";
    for (int i = 1; i <= phi.rank(); ++i) {
      const auto& span = dec.span(i);
      std::cout << generator_name(i, phi.rank()) << ','
                << wagner::format_word(phi.image(i), phi.rank()) << ',';
      if (span) {
        std::cout << span->start << ',' << span->end << ',' << span->length()
                  << ','
                  << wagner::format_word(wagner::remnant_word(phi, dec, i),
                                         phi.rank());
      } else {
        std::cout << ",,0,";
      }
      std::cout << "\n";
    }
    if (member) {
      std::cout << "# check," << cfg.check << ',' << (*member ? "true" : "false")
                << "\n";
    }
  } else {
    std::cout << "map: " << wagner::format_endomorphism(phi) << "\n";
    for (int i = 1; i <= phi.rank(); ++i) {
      const auto& span = dec.span(i);
      std::cout << "  Rem(" << generator_name(i, phi.rank()) << ") = ";
      if (span) {
        std::cout << wagner::format_word(wagner::remnant_word(phi, dec, i),
                                         phi.rank())
                  << "  (span " << span->start << ".." << span->end << ", length "
                  << span->length() << ")\n";
      } else {
        std::cout << "none\n";
      }
    }
    std::cout << "has remnant: " << (dec.complete() ? "yes" : "no") << "\n";
    std::cout << "max S_l level: " << sl_level << "\n";
    if (member) {
      std::cout << "check " << cfg.check << ": "
                << (*member ? "member" : "not a member") << "\n";
    }
    std::cout << "elapsed_ms: " << fmt_double(ms_since(start)) << "\n";
  }
  return member && !*member ? kExitRefused : kExitOk;
}

// ---------------------------------------------------------------------------
// nielsen
// ---------------------------------------------------------------------------

struct NielsenConfig {
  std::string map;
  bool auto_reduce = false;
  int power = 1;
  std::size_t length_cap = wagner::kDefaultLengthCap;
  std::string format = "table";
};

void print_nielsen_rows(const wagner::NielsenSequence& seq,
                        const NielsenConfig& cfg, const wagner::Endomorphism& phi) {
  if (cfg.format == "json") {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["command"] = "nielsen";
    doc["map"] = wagner::format_endomorphism(phi);
    doc["rank"] = phi.rank();
    doc["power"] = cfg.power;
    doc["length_cap"] = cfg.length_cap;
    doc["rows"] = ordered_json::array();
    for (const auto& row : seq.rows) {
      doc["rows"].push_back(ordered_json{{"n", row.n},
                                         {"nielsen", row.nielsen_number},
                                         {"w_count", row.w_count},
                                         {"isolated", row.isolated_tail_count},
                                         {"lefschetz", row.lefschetz},
                                         {"elapsed_ms", row.elapsed_ms}});
    }
    doc["capped_at"] =
        seq.capped_at ? ordered_json(*seq.capped_at) : ordered_json(nullptr);
    doc["certified"] = true;
    emit(doc);
  } else if (cfg.format == "csv") {
    std::cout << "n,nielsen,w_count,isolated,lefschetz,elapsed_ms\n";
    for (const auto& row : seq.rows) {
      std::cout << row.n << ',' << row.nielsen_number << ',' << row.w_count << ','
                << row.isolated_tail_count << ',' << row.lefschetz << ','
                << fmt_double(row.elapsed_ms) << "\n";
    }
    if (seq.capped_at) std::cout << "# capped_at," << *seq.capped_at << "\n";
  } else {
    std::cout << std::setw(4) << "n" << std::setw(12) << "N" << std::setw(10)
              << "#W" << std::setw(10) << "isolated" << std::setw(10) << "L"
              << std::setw(14) << "elapsed_ms" << "\n";
    for (const auto& row : seq.rows) {
      std::cout << std::setw(4) << row.n << std::setw(12) << row.nielsen_number
                << std::setw(10) << row.w_count << std::setw(10)
                << row.isolated_tail_count << std::setw(10) << row.lefschetz
                << std::setw(14) << fmt_double(row.elapsed_ms, 4) << "\n";
    }
    if (seq.capped_at) {
      std::cout << "stopped: power " << *seq.capped_at << " exceeded length cap "
                << cfg.length_cap << "\n";
    }
  }
}

int cmd_nielsen(const NielsenConfig& cfg) {
  const wagner::Endomorphism phi = load_map(cfg.map, cfg.auto_reduce);
  try {
    wagner::NielsenSequence seq =
        wagner::nielsen_sequence(phi, cfg.power, cfg.length_cap);
    print_nielsen_rows(seq, cfg, phi);
    return seq.capped_at ? kExitExhausted : kExitOk;
  } catch (const wagner::NoRemnantError& e) {
    // The class count is still printable, just not certified as N(phi).
    std::cerr << "error: NoRemnantError: " << e.what() << "\n";
    std::cerr << "uncertified class count (power 1): " << e.uncertified_count()
              << "\n";
    return kExitRefused;
  }
}

// ---------------------------------------------------------------------------
// dynamics
// ---------------------------------------------------------------------------

struct DynamicsConfig {
  std::string map;
  bool auto_reduce = false;
  int n_max = 5;
  std::size_t length_cap = wagner::kDefaultLengthCap;
  std::string format = "table";
};

int cmd_dynamics(const DynamicsConfig& cfg) {
  const auto start = Clock::now();
  const wagner::Endomorphism phi = load_map(cfg.map, cfg.auto_reduce);

  const std::size_t sl_level = wagner::max_sl_level(phi);
  wagner::NielsenSequence seq;
  seq = wagner::nielsen_sequence(phi, cfg.n_max, cfg.length_cap);
  const wagner::AsymptoticBounds bounds =
      wagner::asymptotic_bounds(phi, sl_level >= 1 ? sl_level : 1);
  const double rho = wagner::spectral_radius(wagner::fox_magnitude_matrix(phi));
  const wagner::EntropyEstimates entropy =
      wagner::entropy_estimates(phi, cfg.n_max, cfg.length_cap);

  if (cfg.format == "json") {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["command"] = "dynamics";
    doc["map"] = wagner::format_endomorphism(phi);
    doc["rank"] = phi.rank();
    doc["n_max"] = cfg.n_max;
    doc["rows"] = ordered_json::array();
    for (const auto& row : seq.rows) {
      doc["rows"].push_back(ordered_json{{"n", row.n},
                                         {"nielsen", row.nielsen_number},
                                         {"root", row.root},
                                         {"elapsed_ms", row.elapsed_ms}});
    }
    doc["capped_at"] =
        seq.capped_at ? ordered_json(*seq.capped_at) : ordered_json(nullptr);
    ordered_json b;
    b["sl_level"] = sl_level;
    b["lower"] = bounds.lower ? ordered_json(*bounds.lower) : ordered_json(nullptr);
    b["upper"] = bounds.upper;
    b["spectral_radius"] = rho;
    b["entropy"] = ordered_json{
        {"ln", entropy.ln},
        {"h_sequence", entropy.h_sequence},
        {"h_estimate", entropy.h_estimate},
        {"certified_lower", entropy.certified_lower
                                ? ordered_json(*entropy.certified_lower)
                                : ordered_json(nullptr)}};
    doc["bounds"] = b;
    doc["elapsed_ms"] = ms_since(start);
    emit(doc);
  } else if (cfg.format == "csv") {
    std::cout << "n,nielsen,root,elapsed_ms\n";
    for (const auto& row : seq.rows) {
      std::cout << row.n << ',' << row.nielsen_number << ','
                << fmt_double(row.root, 10) << ',' << fmt_double(row.elapsed_ms)
                << "\n";
    }
    std::cout << "\nkey,value\n";
    std::cout << "sl_level," << sl_level << "\n";
    std::cout << "lower," << (bounds.lower ? fmt_double(*bounds.lower) : "") << "\n";
    std::cout << "upper," << fmt_double(bounds.upper, 12) << "\n";
    std::cout << "spectral_radius," << fmt_double(rho, 12) << "\n";
    std::cout << "h_estimate," << fmt_double(entropy.h_estimate, 10) << "\n";
    std::cout << "h_certified_lower,"
              << (entropy.certified_lower ? fmt_double(*entropy.certified_lower, 10)
                                          : "")
              << "\n";
  } else {
    std::cout << std::setw(4) << "n" << std::setw(12) << "N" << std::setw(12)
              << "N^{1/n}" << "\n";
    for (const auto& row : seq.rows) {
      std::cout << std::setw(4) << row.n << std::setw(12) << row.nielsen_number
                << std::setw(12) << fmt_double(row.root, 4) << "\n";
    }
    if (seq.capped_at) {
      std::cout << "stopped: power " << *seq.capped_at << " exceeded length cap "
                << cfg.length_cap << "\n";
    }
    std::cout << "S_l level: " << sl_level << "\n";
    if (bounds.lower) {
      std::cout << "asymptotic Nielsen number: " << fmt_double(*bounds.lower)
                << " <= N^inf <= " << fmt_double(bounds.upper, 12) << "\n";
    } else {
      std::cout << "asymptotic Nielsen number: N^inf <= "
                << fmt_double(bounds.upper, 12) << " (lower bound refused: not in S_l)\n";
    }
    std::cout << "spectral radius: " << fmt_double(rho, 12) << "\n";
    std::cout << "L_n: ";
    for (std::size_t k = 0; k < entropy.ln.size(); ++k) {
      std::cout << (k ? " " : "") << entropy.ln[k];
    }
    std::cout << "\nentropy estimate log(L_n)/n: "
              << fmt_double(entropy.h_estimate, 10) << "\n";
    if (entropy.certified_lower) {
      std::cout << "certified entropy lower bound log(l*m): "
                << fmt_double(*entropy.certified_lower, 10) << "\n";
    }
    std::cout << "elapsed_ms: " << fmt_double(ms_since(start)) << "\n";
  }
  return seq.capped_at ? kExitExhausted : kExitOk;
}

// ---------------------------------------------------------------------------
// periodic
// ---------------------------------------------------------------------------

struct PeriodicConfig {
  std::string map;
  bool auto_reduce = false;
  int n = 1;
  bool list = false;
  bool census = false;
  std::uint64_t budget = wagner::kDefaultAddressBudget;
  std::string format = "table";
};

std::string address_to_string(const wagner::Address& addr) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < addr.size(); ++i) {
    if (i) out << ',';
    out << addr[i];
  }
  out << ')';
  return out.str();
}

int cmd_periodic(const PeriodicConfig& cfg) {
  const auto start = Clock::now();
  const wagner::Endomorphism phi = load_map(cfg.map, cfg.auto_reduce);
  const wagner::BigInt count = wagner::fixed_point_count(phi, cfg.n);

  std::optional<std::map<int, std::uint64_t>> census;
  if (cfg.census) census = wagner::minimal_period_census(phi, cfg.n, cfg.budget);
  std::optional<std::vector<wagner::PeriodicPointRecord>> points;
  if (cfg.list) points = wagner::label_fixed_points(phi, cfg.n, cfg.budget);

  if (cfg.format == "json") {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["command"] = "periodic";
    doc["map"] = wagner::format_endomorphism(phi);
    doc["rank"] = phi.rank();
    doc["n"] = cfg.n;
    doc["fixed_point_count"] = count.str();
    if (census) {
      ordered_json c = ordered_json::object();
      for (const auto& [d, cnt] : *census) c[std::to_string(d)] = cnt;
      doc["census"] = c;
    }
    if (points) {
      doc["points"] = ordered_json::array();
      for (const auto& rec : *points) {
        doc["points"].push_back(ordered_json{{"label", rec.label},
                                             {"address", rec.address},
                                             {"minimal_period", rec.minimal_period},
                                             {"orbit", rec.orbit}});
      }
    }
    doc["elapsed_ms"] = ms_since(start);
    emit(doc);
  } else if (cfg.format == "csv") {
    std::cout << "fixed_point_count," << count.str() << "\n";
    if (census) {
      std::cout << "\nperiod,count\n";
      for (const auto& [d, cnt] : *census) std::cout << d << ',' << cnt << "\n";
    }
    if (points) {
      std::cout << "\nlabel,address,minimal_period,orbit\n";
      for (const auto& rec : *points) {
        std::cout << rec.label << ",\"";
        for (std::size_t i = 0; i < rec.address.size(); ++i) {
          if (i) std::cout << ' ';
          std::cout << rec.address[i];
        }
        std::cout << "\"," << rec.minimal_period << ",\"";
        for (std::size_t i = 0; i < rec.orbit.size(); ++i) {
          if (i) std::cout << ' ';
          std::cout << rec.orbit[i];
        }
        std::cout << "\"\n";
      }
    }
  } else {
    std::cout << "map: " << wagner::format_endomorphism(phi) << "\n";
    std::cout << "fixed points of power " << cfg.n << " (incl. base point): "
              << count.str() << "\n";
    if (census) {
      std::cout << "minimal period census (non-base points):\n";
      for (const auto& [d, cnt] : *census) {
        std::cout << "  period " << d << ": " << cnt << "\n";
      }
    }
    if (points) {
      std::cout << "fixed points:\n";
      for (const auto& rec : *points) {
        std::cout << "  " << rec.label << "_" << cfg.n << "  address "
                  << (rec.address.empty() ? "(base)" : address_to_string(rec.address))
                  << "  period " << rec.minimal_period << "  orbit {";
        for (std::size_t i = 0; i < rec.orbit.size(); ++i) {
          if (i) std::cout << ", ";
          std::cout << rec.orbit[i] << "_" << cfg.n;
        }
        std::cout << "}\n";
      }
    }
    std::cout << "elapsed_ms: " << fmt_double(ms_since(start)) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// density
// ---------------------------------------------------------------------------

struct DensityConfig {
  std::string predicate = "remnant";
  int m = 2;
  std::vector<int> p_list;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0;
  bool seed_set = false;
  unsigned threads = 0;
  std::string csv_path;
  bool exact = false;
  std::uint64_t budget = wagner::kDefaultEnumerationBudget;
  std::string format = "table";
};

void write_density_csv(std::ostream& out,
                       const std::vector<wagner::DensityEstimate>& rows) {
  out << "m,p,predicate,samples,hits,estimate,ci_lo,ci_hi,seed\n";
  for (const auto& r : rows) {
    out << r.m << ',' << r.p << ',' << r.predicate_id << ',' << r.samples << ','
        << r.hits << ',' << fmt_double(r.estimate, 10) << ','
        << fmt_double(r.ci_lo, 10) << ',' << fmt_double(r.ci_hi, 10) << ','
        << r.seed << "\n";
  }
}

int cmd_density(const DensityConfig& cfg) {
  const auto start = Clock::now();
  const wagner::EndomorphismPredicate predicate = parse_predicate(cfg.predicate);
  if (cfg.p_list.empty()) throw wagner::Error("--p requires at least one radius");
  if (!cfg.exact && !cfg.seed_set) {
    throw wagner::Error("--seed is required for sampling runs");
  }

  std::vector<wagner::DensityEstimate> rows;
  struct ExactRow {
    int p;
    wagner::BigRational value;
  };
  std::vector<ExactRow> exact_rows;

  if (cfg.exact) {
    for (int p : cfg.p_list) {
      exact_rows.push_back(ExactRow{p, wagner::exact_density(predicate, cfg.m, p,
                                                             cfg.budget)});
    }
  }
  if (cfg.samples > 0) {
    rows = wagner::density_curve(predicate, cfg.m, cfg.p_list, cfg.samples,
                                 cfg.seed, cfg.threads);
  }

  if (!cfg.csv_path.empty()) {
    std::ofstream out(cfg.csv_path);
    if (!out) throw wagner::Error("cannot write CSV file: " + cfg.csv_path);
    write_density_csv(out, rows);
  }

  if (cfg.format == "json") {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["command"] = "density";
    doc["predicate"] = cfg.predicate;
    doc["m"] = cfg.m;
    doc["samples"] = cfg.samples;
    doc["threads"] = cfg.threads == 0 ? 1 : cfg.threads;
    doc["rows"] = ordered_json::array();
    for (const auto& r : rows) {
      doc["rows"].push_back(ordered_json{{"p", r.p},
                                         {"samples", r.samples},
                                         {"hits", r.hits},
                                         {"estimate", r.estimate},
                                         {"ci_lo", r.ci_lo},
                                         {"ci_hi", r.ci_hi},
                                         {"seed", r.seed}});
    }
    if (cfg.exact) {
      doc["exact"] = ordered_json::array();
      for (const auto& e : exact_rows) {
        doc["exact"].push_back(ordered_json{
            {"p", e.p},
            {"numerator", boost::multiprecision::numerator(e.value).str()},
            {"denominator", boost::multiprecision::denominator(e.value).str()},
            {"value", e.value.convert_to<double>()}});
      }
    }
    doc["elapsed_ms"] = ms_since(start);
    emit(doc);
  } else if (cfg.format == "csv") {
    write_density_csv(std::cout, rows);
    if (cfg.exact) {
      std::cout << "\np,exact_numerator,exact_denominator,exact_value\n";
      for (const auto& e : exact_rows) {
        std::cout << e.p << ',' << boost::multiprecision::numerator(e.value).str()
                  << ',' << boost::multiprecision::denominator(e.value).str() << ','
                  << fmt_double(e.value.convert_to<double>(), 10) << "\n";
      }
    }
  } else {
    std::cout << "predicate: " << cfg.predicate << "  m: " << cfg.m << "\n";
    for (const auto& r : rows) {
      std::cout << "  p=" << std::setw(3) << r.p << "  estimate "
                << fmt_double(r.estimate, 6) << "  99% CI ["
                << fmt_double(r.ci_lo, 6) << ", " << fmt_double(r.ci_hi, 6)
                << "]  hits " << r.hits << "/" << r.samples << "  seed " << r.seed
                << "\n";
    }
    for (const auto& e : exact_rows) {
      std::cout << "  p=" << std::setw(3) << e.p << "  exact "
                << boost::multiprecision::numerator(e.value).str() << "/"
                << boost::multiprecision::denominator(e.value).str() << " = "
                << fmt_double(e.value.convert_to<double>(), 10) << "\n";
    }
    std::cout << "elapsed_ms: " << fmt_double(ms_since(start)) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nielsen-theoretic invariants of free group endomorphisms"};
  app.require_subcommand(1);

  unsigned threads = 0;  // 0 = resolve from NIELSEN_THREADS, default 1

  RemnantConfig remnant_cfg;
  CLI::App* remnant = app.add_subcommand(
      "remnant", "Remnant decomposition and R_k / S_l membership");
  remnant->add_option("--map", remnant_cfg.map, "Endomorphism (inline or file)")
      ->required();
  remnant->add_flag("--auto-reduce", remnant_cfg.auto_reduce,
                    "Freely reduce unreduced images instead of rejecting");
  remnant->add_option("--check", remnant_cfg.check,
                      "Membership predicate Rk=<k> or Sl=<l>; exit 2 when not a member");
  remnant->add_option("--format", remnant_cfg.format, "table, csv, or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  NielsenConfig nielsen_cfg;
  CLI::App* nielsen = app.add_subcommand(
      "nielsen", "Nielsen numbers of iterates via Wagner's algorithm");
  nielsen->add_option("--map", nielsen_cfg.map, "Endomorphism (inline or file)")
      ->required();
  nielsen->add_flag("--auto-reduce", nielsen_cfg.auto_reduce,
                    "Freely reduce unreduced images instead of rejecting");
  nielsen->add_option("--power", nielsen_cfg.power, "Largest power n")
      ->check(CLI::PositiveNumber);
  nielsen->add_option("--length-cap", nielsen_cfg.length_cap,
                      "Abort when an iterate image exceeds this many letters");
  nielsen->add_option("--format", nielsen_cfg.format, "table, csv, or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  DynamicsConfig dynamics_cfg;
  CLI::App* dynamics = app.add_subcommand(
      "dynamics", "Growth table, asymptotic Nielsen bounds, entropy bounds");
  dynamics->add_option("--map", dynamics_cfg.map, "Endomorphism (inline or file)")
      ->required();
  dynamics->add_flag("--auto-reduce", dynamics_cfg.auto_reduce,
                     "Freely reduce unreduced images instead of rejecting");
  dynamics->add_option("--n-max", dynamics_cfg.n_max, "Largest power n")
      ->check(CLI::PositiveNumber);
  dynamics->add_option("--length-cap", dynamics_cfg.length_cap,
                       "Abort when an iterate image exceeds this many letters");
  dynamics->add_option("--format", dynamics_cfg.format, "table, csv, or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  dynamics->add_flag_callback(
      "--csv", [&dynamics_cfg]() { dynamics_cfg.format = "csv"; },
      "Shorthand for --format csv");

  PeriodicConfig periodic_cfg;
  CLI::App* periodic = app.add_subcommand(
      "periodic", "Fixed points of powers: addresses, labels, orbits, census");
  periodic->add_option("--map", periodic_cfg.map, "Endomorphism (inline or file)")
      ->required();
  periodic->add_flag("--auto-reduce", periodic_cfg.auto_reduce,
                     "Freely reduce unreduced images instead of rejecting");
  periodic->add_option("--n", periodic_cfg.n, "Power n")->check(CLI::PositiveNumber);
  periodic->add_flag("--list", periodic_cfg.list,
                     "List every fixed point with label, address, period, orbit");
  periodic->add_flag("--census", periodic_cfg.census,
                     "Print counts of points by minimal period");
  periodic->add_option("--budget", periodic_cfg.budget,
                       "Refuse enumeration beyond this many fixed points");
  periodic->add_option("--format", periodic_cfg.format, "table, csv, or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  DensityConfig density_cfg;
  CLI::App* density = app.add_subcommand(
      "density", "Monte-Carlo / exact densities of R_k, S_l, remnant");
  density->add_option("--predicate", density_cfg.predicate,
                      "remnant, Rk=<k>, or Sl=<l>");
  density->add_option("--m", density_cfg.m, "Rank of the free group")
      ->check(CLI::PositiveNumber);
  density
      ->add_option("--p", density_cfg.p_list,
                   "Ball radii, comma separated (e.g. 4,8,16)")
      ->required()
      ->delimiter(',');
  density->add_option("--samples", density_cfg.samples,
                      "Monte-Carlo samples per radius (0 with --exact skips sampling)");
  density->add_option("--seed", density_cfg.seed, "Base RNG seed")
      ->trigger_on_parse()
      ->each([&density_cfg](const std::string&) { density_cfg.seed_set = true; });
  density->add_flag("--exact", density_cfg.exact,
                    "Also compute the exact density by full enumeration");
  density->add_option("--budget", density_cfg.budget,
                      "Tuple budget for exact enumeration");
  density->add_option("--csv", density_cfg.csv_path, "Write sampling rows to a CSV file");
  density->add_option("--format", density_cfg.format, "table, csv, or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  for (CLI::App* sub : {remnant, nielsen, dynamics, periodic, density}) {
    sub->add_option("--threads", threads,
                    "Worker threads for stochastic runs (env NIELSEN_THREADS)")
        ->envname("NIELSEN_THREADS");
  }

  CLI11_PARSE(app, argc, argv);

  if (threads == 0) threads = 1;
  density_cfg.threads = threads;

  try {
    if (app.got_subcommand(remnant)) return cmd_remnant(remnant_cfg);
    if (app.got_subcommand(nielsen)) return cmd_nielsen(nielsen_cfg);
    if (app.got_subcommand(dynamics)) return cmd_dynamics(dynamics_cfg);
    if (app.got_subcommand(periodic)) return cmd_periodic(periodic_cfg);
    if (app.got_subcommand(density)) return cmd_density(density_cfg);
  } catch (const wagner::NoRemnantError& e) {
    std::cerr << "error: NoRemnantError: " << e.what() << "\n";
    return kExitRefused;
  } catch (const wagner::NotInSlError& e) {
    std::cerr << "error: NotInSlError: " << e.what() << "\n";
    return kExitRefused;
  } catch (const wagner::CapExceededError& e) {
    std::cerr << "error: CapExceededError: " << e.what() << "\n";
    return kExitExhausted;
  } catch (const wagner::BudgetExceededError& e) {
    std::cerr << "error: BudgetExceededError: " << e.what() << "\n";
    return kExitExhausted;
  } catch (const wagner::ParseError& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return kExitError;
  } catch (const wagner::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
