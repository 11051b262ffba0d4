#include "wmds/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wmds/ppart.hpp"
#include "wmds/render.hpp"

namespace wmds {

namespace {

const std::vector<std::string> kCheckNames = {"recurrence", "support", "stable", "gap",
                                              "coxeter",    "shift",   "uniqueness"};
constexpr int kCoxeterSamples = 10;

const std::map<std::string, Format> kFormats = {
    {"json", Format::Json}, {"text", Format::Text}, {"svg", Format::Svg}, {"tikz", Format::Tikz}};

Format default_format(Command c) {
  switch (c) {
    case Command::Plot: return Format::Svg;
    case Command::Dimension: return Format::Text;
    default: return Format::Json;
  }
}

std::string ell_tag(const std::vector<int>& ell) {
  std::string s;
  for (std::size_t i = 0; i < ell.size(); ++i) s += (i ? "," : "") + std::to_string(ell[i]);
  return s;
}

// Writes to a sibling temporary and renames it into place.
void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot open " + tmp.string() + " for writing");
    f << text;
    if (!f.flush()) throw UsageError("failed writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw UsageError("cannot move output into " + path + ": " + ec.message());
  }
}

std::string poly_text(const LaurentPoly& p) {
  std::ostringstream os;
  for (const auto& [e, c] : p.terms()) os << format_vector(e.to_vector(p.rank())) << '\t' << c.to_string() << '\n';
  return os.str();
}

LaurentPoly selected_poly(const RunConfig& cfg, const PPart& pp, int h) {
  return cfg.what == "f" ? compute_f_truncated(pp, h) : pp.poly;
}

std::string do_compute(const RunConfig& cfg, const PPartContext& ctx, Format fmt, int h) {
  const LaurentPoly p = selected_poly(cfg, compute_N(ctx), h);
  if (fmt == Format::Text) return poly_text(p);
  return p.to_json().dump(2) + "\n";
}

std::string do_plot(const RunConfig& cfg, const PPartContext& ctx, Format fmt, int h) {
  const LaurentPoly p = selected_poly(cfg, compute_N(ctx), h);
  std::string title = std::string(1, family_letter(ctx.roots().family())) + std::to_string(ctx.rank()) + ", " +
                      cfg.what + "(x; " + ell_tag(ctx.ell()) + "), n = " + std::to_string(ctx.n());
  if (cfg.what == "f") title += ", height <= " + std::to_string(h);
  const SupportPlot plot = support_plot(ctx, p, std::move(title));
  return fmt == Format::Tikz ? render_tikz(plot) : render_svg(plot);
}

std::string do_check(const RunConfig& cfg, const PPartContext& ctx, Format fmt, int h, bool& passed) {
  const PPart pp = compute_N(ctx);
  std::vector<CheckReport> reports;
  for (const auto& name : kCheckNames) {
    if (std::find(cfg.checks.begin(), cfg.checks.end(), name) == cfg.checks.end()) continue;
    if (name == "recurrence") reports.push_back(check_recurrence(pp, cfg.five_term));
    else if (name == "support") reports.push_back(check_support(pp));
    else if (name == "stable") reports.push_back(check_stable(pp));
    else if (name == "gap") reports.push_back(check_gap(pp, h));
    else if (name == "coxeter") reports.push_back(check_coxeter(ctx, kCoxeterSamples, cfg.seed));
    else if (name == "shift") reports.push_back(check_shift(ctx, cfg.seed));
    else if (name == "uniqueness") reports.push_back(check_uniqueness(pp, cfg.seed));
  }
  passed = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
  if (fmt == Format::Text) {
    std::ostringstream os;
    for (const auto& r : reports)
      os << r.name << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.counterexamples.size()
         << " counterexamples)\n";
    return os.str();
  }
  nlohmann::ordered_json j;
  j["passed"] = passed;
  j["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) j["reports"].push_back(r.to_json());
  return j.dump(2) + "\n";
}

std::string do_dimension(const RunConfig& cfg, const PPartContext& ctx, Format fmt) {
  const int dim = recurrence_space_dim_vote(ctx, cfg.seed);
  const auto theta_plus = regular_subset(dominant_weights_theta(ctx.twisted())).size();
  if (fmt == Format::Json) {
    nlohmann::ordered_json j;
    j["dimension"] = dim;
    j["theta_plus"] = theta_plus;
    return j.dump(2) + "\n";
  }
  return std::to_string(dim) + " " + std::to_string(theta_plus) + "\n";
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (static_cast<int>(cfg.ell.size()) != cfg.rank)
    throw UsageError("--ell needs " + std::to_string(cfg.rank) + " entries, got " + std::to_string(cfg.ell.size()));
  for (int l : cfg.ell)
    if (l < 0) throw UsageError("--ell entries must be nonnegative");
  if (cfg.truncate && *cfg.truncate < 0) throw UsageError("--truncate must be nonnegative");
  if (cfg.what != "N" && cfg.what != "f") throw UsageError("--what must be N or f");
  if (cfg.command == Command::Check && cfg.checks.empty()) throw UsageError("check needs a nonempty --check list");
  const Format fmt = cfg.format.value_or(default_format(cfg.command));
  const bool graphic = fmt == Format::Svg || fmt == Format::Tikz;
  if (cfg.command == Command::Plot && !graphic) throw UsageError("plot writes svg or tikz");
  if (cfg.command != Command::Plot && graphic) throw UsageError("svg and tikz are only available for plot");
  if (cfg.command == Command::Plot && cfg.rank != 2) throw UsageError("plots are only available for rank 2");
}

ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local p-parts of Weyl group multiple Dirichlet series", "wmds"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "Root system family (A-G)")->required();
    sub->add_option("--rank", cfg.rank, "Rank of the root system")->required()->check(CLI::Range(1, 8));
    sub->add_option("--n", cfg.n, "Metaplectic degree")->required()->check(CLI::PositiveNumber);
    sub->add_option("--ell", cfg.ell, "Twisting parameter l1,l2,...")->required()->delimiter(',');
    sub->add_option("--truncate", cfg.truncate, "Height bound H for f (default: highest vertex + 4)");
    sub->add_option("--seed", cfg.seed, "Seed for randomized checks");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text", "svg", "tikz"}));
    sub->add_option("--out", cfg.out, "Output path (default: standard output)");
  };
  CLI::App* compute = app.add_subcommand("compute", "Compute N or a truncation of f");
  CLI::App* check = app.add_subcommand("check", "Run structural checks on N");
  CLI::App* plot = app.add_subcommand("plot", "Plot the support of N or f (rank 2)");
  CLI::App* dimension = app.add_subcommand("dimension", "Dimension of the recurrence solution space");
  for (CLI::App* sub : {compute, check, plot, dimension}) add_common(sub);
  for (CLI::App* sub : {compute, plot})
    sub->add_option("--what", cfg.what, "N or f")->check(CLI::IsMember({"N", "f"}));
  check->add_option("--check", cfg.checks, "Comma-separated checks")
      ->required()
      ->delimiter(',')
      ->check(CLI::IsMember(kCheckNames));
  check->add_flag("--five-term", cfg.five_term, "Also check the five-term relations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? kExitOk : kExitUsage};
  }
  if (compute->parsed()) cfg.command = Command::Compute;
  else if (check->parsed()) cfg.command = Command::Check;
  else if (plot->parsed()) cfg.command = Command::Plot;
  else cfg.command = Command::Dimension;
  if (!format.empty()) cfg.format = kFormats.at(format);
  return {cfg, kExitOk};
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<PPartContext> ctx;
  try {
    validate(cfg);
    ctx.emplace(parse_family(cfg.family), cfg.rank, cfg.n, cfg.ell);
  } catch (const Error& e) {
    err << "wmds: " << e.what() << '\n';
    return kExitUsage;
  }
  const Format fmt = cfg.format.value_or(default_format(cfg.command));
  const int h = cfg.truncate.value_or(ctx->twisted().max_vertex_height() + 4);
  try {
    bool passed = true;
    std::string text;
    switch (cfg.command) {
      case Command::Compute: text = do_compute(cfg, *ctx, fmt, h); break;
      case Command::Check: text = do_check(cfg, *ctx, fmt, h, passed); break;
      case Command::Plot: text = do_plot(cfg, *ctx, fmt, h); break;
      case Command::Dimension: text = do_dimension(cfg, *ctx, fmt); break;
    }
    write_output(cfg.out, text, out);
    return passed ? kExitOk : kExitCheckFailed;
  } catch (const UsageError& e) {
    err << "wmds: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "wmds: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

int main_entry(int argc, const char* const* argv) {
  ParseResult parsed = parse_args(argc, argv, std::cout, std::cerr);
  if (!parsed.config) return parsed.status;
  return run(*parsed.config, std::cout, std::cerr);
}

}  // namespace wmds
