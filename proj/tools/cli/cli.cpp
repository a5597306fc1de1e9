#include "cli/cli.hpp"

#include <chrono>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "autorecon/error.hpp"
#include "autorecon/families.hpp"
#include "autorecon/io.hpp"
#include "autorecon/recon.hpp"

namespace autorecon::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse_error:
    case ErrorKind::invalid_group:
    case ErrorKind::invalid_element:
    case ErrorKind::invalid_parameter:
    case ErrorKind::order_exceeded:
    case ErrorKind::budget_exceeded:
      return input_error;
    default:
      return verification_failed;
  }
}

GridFormat parse_format(const std::string& name) {
  if (name == "json") return GridFormat::json;
  if (name == "csv") return GridFormat::csv;
  throw Error(ErrorKind::parse_error, "unknown grid format \"" + name + "\"");
}

json report_to_json(const ReconReport& r, const std::string& mode, std::size_t cap) {
  json gens = json::array();
  for (const auto& [p, elems] : r.generators) {
    json list = json::array();
    for (const auto& x : elems) list.push_back(x.coords);
    gens.push_back({{"prime", p}, {"generators", std::move(list)}});
  }
  json exps = json::array();
  for (const auto& e : r.exponents) exps.push_back(e.get_str());
  return {{"mode", mode},
          {"cap", cap},
          {"max_order_queried", r.max_order},
          {"queries", r.queries},
          {"support_size", r.support_size},
          {"rank", r.rank},
          {"required_order", r.required_order},
          {"generators", std::move(gens)},
          {"exponents", std::move(exps)},
          {"roots_extracted", r.roots_extracted},
          {"max_precision_bits", r.max_precision_used},
          {"seconds", r.seconds}};
}

bool tables_agree(const MomentTable& a, const MomentTable& b, std::size_t k) {
  for (std::size_t n = 1; n <= k; ++n)
    if (a.entries(n) != b.entries(n)) return false;
  return true;
}

// ---------------------------------------------------------------------------

struct MomentsArgs {
  std::string in, out, format = "json";
  std::size_t order = 0;
  std::uint64_t budget = 5'000'000;
};

int cmd_moments(const MomentsArgs& a, std::ostream& out) {
  if (a.order < 1) throw Error(ErrorKind::invalid_parameter, "--order must be at least 1");
  const RatFn f = read_grid(a.in, parse_format(a.format));
  const auto table = MomentTable::from_function(f, a.order, a.budget);
  write_text_file_atomic(a.out, moments_to_json(table));
  std::size_t entries = 0;
  for (std::size_t n = 1; n <= a.order; ++n) entries += table.entries(n).size();
  out << "wrote " << entries << " nonzero moments of orders 1.." << a.order << " to " << a.out << "\n";
  return ok;
}

struct ReconstructArgs {
  std::string in, out, report, cap = "auto", format = "json";
};

int cmd_reconstruct(const ReconstructArgs& a, std::ostream& out, std::ostream& err) {
  const ReconConfig cfg = ReconConfig::from_environment();
  std::optional<std::size_t> cap;
  if (a.cap != "auto") {
    try {
      std::size_t used = 0;
      const auto k = std::stoull(a.cap, &used);
      if (used != a.cap.size() || k < 1) throw std::invalid_argument(a.cap);
      cap = k;
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse_error, "--cap must be \"auto\" or a positive integer");
    }
  }

  const GridFormat format = parse_format(a.format);
  const std::string text = read_text_file(a.in);
  const bool from_table = format == GridFormat::json && is_moment_document(text);

  ReconReport report;
  RatFn rec;
  std::size_t used_cap = 0;
  bool verified = false;
  if (from_table) {
    const MomentTable table = moments_from_json(text);
    used_cap = cap.value_or(table.max_order());
    if (used_cap > table.max_order())
      throw Error(ErrorKind::order_exceeded, "--cap " + std::to_string(used_cap) + " exceeds the file's max_order " +
                                                 std::to_string(table.max_order()));
    auto oracle = MomentOracle::from_table(table, used_cap);
    rec = reconstruct(oracle, cfg, &report);
    verified = tables_agree(MomentTable::from_function(rec, used_cap), table, used_cap);
  } else {
    const RatFn f = format == GridFormat::csv ? grid_from_csv(text) : grid_from_json(text);
    used_cap = cap.value_or(required_order_for(f));
    rec = reconstruct_hidden(f, cfg, used_cap, &report);
    verified = verify_translation(f, rec).has_value();
  }

  if (!a.report.empty())
    write_text_file_atomic(a.report, report_to_json(report, from_table ? "table" : "hidden", used_cap).dump(2) + "\n");
  if (!verified) {
    err << "error: reconstruction does not reproduce the input moments\n";
    return verification_failed;
  }
  write_grid(a.out, rec, format);
  out << "reconstructed " << rec.group().order() << " values; max order queried " << report.max_order << " (cap "
      << used_cap << ")\n";
  return ok;
}

struct VerifyArgs {
  std::string a, b, format = "json";
};

int cmd_verify(const VerifyArgs& v, std::ostream& out) {
  const GridFormat format = parse_format(v.format);
  const RatFn f = read_grid(v.a, format), g = read_grid(v.b, format);
  if (!(f.group() == g.group())) throw Error(ErrorKind::invalid_group, "grids have different dimensions");
  if (const auto y = verify_translation(f, g)) {
    out << *y << "\n";
    return ok;
  }
  out << "not translation-equivalent\n";
  return verification_failed;
}

struct GenArgs {
  std::string family, out;
  std::int64_t a = 0, b = 0, p = 0, q = 0, d = 0;
  std::size_t r = 1;
  std::vector<std::int64_t> dims;
};

int cmd_gen_example(const GenArgs& a, std::ostream& out) {
  json params;
  json files = json::array();
  std::size_t claimed = 0;
  bool rational = true;
  std::map<std::string, std::string> contents;

  const auto need_dims = [&] {
    if (a.dims.empty()) throw Error(ErrorKind::invalid_parameter, "--dims is required for this family");
    return GroupSpec(a.dims);
  };
  const auto add_pair = [&](const RatFn& f, const RatFn& g) {
    contents["f.json"] = grid_to_json(f);
    contents["g.json"] = grid_to_json(g);
  };
  const auto add_spectra = [&](const SpecFn& f, const SpecFn& g) {
    contents["f.spectrum.json"] = spectrum_to_json(f);
    contents["g.spectrum.json"] = spectrum_to_json(g);
  };

  if (a.family == "z6") {
    params = {{"a", a.a}, {"b", a.b}};
    contents["f.json"] = grid_to_json(family_z6(Integer(static_cast<long>(a.a)), Integer(static_cast<long>(a.b))));
    claimed = 5;
  } else if (a.family == "threer") {
    params = {{"r", a.r}};
    const auto [f, g] = family_threer(a.r);
    add_pair(f, g);
    claimed = 3 * a.r;
  } else if (a.family == "sharp") {
    params = {{"p", a.p}, {"q", a.q}, {"r", a.r}};
    const auto [f, g] = family_sharp(a.p, a.q, a.r);
    add_pair(f, g);
    claimed = 3 * a.r + 2;
  } else if (a.family == "delta") {
    const GroupSpec g = need_dims();
    params = {{"dims", a.dims}};
    const auto [f, h] = family_delta(g);
    add_spectra(f, h);
    claimed = static_cast<std::size_t>(g.exponent() - 1);
    rational = false;
  } else if (a.family == "divisor") {
    const GroupSpec g = need_dims();
    params = {{"dims", a.dims}, {"d", a.d}};
    const auto [f, h] = family_divisor(g, a.d);
    add_spectra(f, h);
    std::int64_t total = 0;
    for (auto n : a.dims) total += n;
    claimed = static_cast<std::size_t>(total / a.d);
    rational = false;
  } else {
    throw Error(ErrorKind::invalid_parameter, "unknown family \"" + a.family + "\"");
  }

  fs::create_directories(a.out);
  for (const auto& [name, text] : contents) {
    write_text_file_atomic(fs::path(a.out) / name, text);
    files.push_back(name);
  }
  const json manifest = {{"family", a.family},
                         {"params", params},
                         {"files", files},
                         {"claimed_agreement_order", claimed},
                         {"rational", rational},
                         {"translation_equivalent", false}};
  write_text_file_atomic(fs::path(a.out) / "manifest.json", manifest.dump(2) + "\n");
  out << "wrote " << files.size() << " file(s) and manifest.json to " << a.out << "\n";
  return ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact reconstruction of rational grids from autocorrelations", "autorecon"};
  app.require_subcommand(1);

  MomentsArgs moments;
  auto* sub_moments = app.add_subcommand("moments", "Write exact moment tables of a grid");
  sub_moments->add_option("input", moments.in, "Grid file")->required();
  sub_moments->add_option("--order,-k", moments.order, "Highest moment order")->required();
  sub_moments->add_option("--out,-o", moments.out, "Moment file to write")->required();
  sub_moments->add_option("--budget", moments.budget, "Maximum number of table entries");
  sub_moments->add_option("--format", moments.format, "Grid format: json or csv");

  ReconstructArgs recon;
  auto* sub_recon = app.add_subcommand("reconstruct", "Recover a grid up to translation");
  sub_recon->add_option("input", recon.in, "Grid file (hidden-oracle mode) or moment file")->required();
  sub_recon->add_option("--out,-o", recon.out, "Grid file to write")->required();
  sub_recon->add_option("--cap", recon.cap, "Highest order the oracle answers: auto or an integer");
  sub_recon->add_option("--report", recon.report, "JSON report path");
  sub_recon->add_option("--format", recon.format, "Grid format: json or csv");

  VerifyArgs verify;
  auto* sub_verify = app.add_subcommand("verify", "Check whether two grids are translates");
  sub_verify->add_option("a", verify.a, "First grid")->required();
  sub_verify->add_option("b", verify.b, "Second grid")->required();
  sub_verify->add_option("--format", verify.format, "Grid format: json or csv");

  GenArgs gen;
  auto* sub_gen = app.add_subcommand("gen-example", "Write a homometric family member or pair");
  sub_gen->add_option("--family", gen.family, "z6, threer, sharp, delta or divisor")->required();
  sub_gen->add_option("--out,-o", gen.out, "Output directory")->required();
  sub_gen->add_option("--a", gen.a);
  sub_gen->add_option("--b", gen.b);
  sub_gen->add_option("--p", gen.p);
  sub_gen->add_option("--q", gen.q);
  sub_gen->add_option("--r", gen.r);
  sub_gen->add_option("--d", gen.d);
  sub_gen->add_option("--dims", gen.dims)->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    if (*sub_moments) return cmd_moments(moments, out);
    if (*sub_recon) return cmd_reconstruct(recon, out, err);
    if (*sub_verify) return cmd_verify(verify, out);
    return cmd_gen_example(gen, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
}

}  // namespace autorecon::cli
