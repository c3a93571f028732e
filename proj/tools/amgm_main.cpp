// amgm: command-line front end for the weighted-mean inequality library.

#include "amgm/error.hpp"
#include "amgm/experiment.hpp"
#include "amgm/holder.hpp"
#include "amgm/inequality.hpp"
#include "amgm/jensen.hpp"
#include "amgm/kernels.hpp"
#include "amgm/sampling.hpp"
#include "amgm/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

enum class Format { csv, json };

std::string cell(const ordered_json& v) {
  if (v.is_number_float()) return amgm::format_real(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) out += (out.empty() ? "" : ";") + cell(e);
    return out;
  }
  return v.dump();
}

// Single-record output: a header line plus one row, or a JSON object.
void emit(const ordered_json& rec, Format fmt, std::ostream& out) {
  if (fmt == Format::json) {
    out << rec.dump(2) << '\n';
    return;
  }
  std::string header;
  std::string row;
  for (const auto& [key, value] : rec.items()) {
    header += (header.empty() ? "" : ",") + key;
    row += (row.empty() ? "" : ",") + cell(value);
  }
  out << header << '\n' << row << '\n';
}

ordered_json finite_or_string(double v) {
  return std::isfinite(v) ? ordered_json(v) : ordered_json(amgm::format_real(v));
}

struct Common {
  std::string format = "csv";
  std::string out;

  Format fmt() const { return format == "json" ? Format::json : Format::csv; }
};

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", c.out, "Output file (default: stdout)");
}

template <class Fn>
void with_output(const Common& c, Fn&& fn) {
  if (c.out.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw amgm::ConfigError("cannot open output file '" + c.out + "'");
  fn(file);
}

amgm::WeightVector weights_from(const std::vector<double>& listed, const std::string& file, const char* what) {
  if (!listed.empty() && !file.empty()) throw amgm::ConfigError(std::string(what) + ": give a list or a file, not both");
  if (!file.empty()) return amgm::WeightVector(amgm::load_weights_file(file));
  if (listed.empty()) throw amgm::ConfigError(std::string(what) + " is required");
  return amgm::WeightVector(listed);
}

ordered_json profile_json(const amgm::QuotientProfile& p) {
  return {{"min_quotient", p.min_quotient},
          {"max_quotient", p.max_quotient},
          {"set_a", p.argmin_set},
          {"set_b", p.argmax_set}};
}

struct HolderInput {
  std::vector<double> masses;
  std::vector<std::vector<double>> functions;
};

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

HolderInput read_holder_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw amgm::ConfigError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw amgm::ConfigError("'" + path + "' is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::vector<std::string> header = split(line, ',');
  if (header.size() < 3 || header[0] != "mass") {
    throw amgm::ConfigError("holder input needs a header 'mass,f,g[,...]'");
  }
  HolderInput h;
  h.functions.resize(header.size() - 1);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cols = split(line, ',');
    if (cols.size() != header.size()) {
      throw amgm::ConfigError("'" + path + "' line " + std::to_string(lineno) + ": expected " +
                              std::to_string(header.size()) + " columns");
    }
    try {
      h.masses.push_back(std::stod(cols[0]));
      for (std::size_t k = 1; k < cols.size(); ++k) h.functions[k - 1].push_back(std::stod(cols[k]));
    } catch (const std::logic_error&) {
      throw amgm::ConfigError("'" + path + "' line " + std::to_string(lineno) + ": not a number");
    }
  }
  return h;
}

// Fixture checks shared with the test suite, runnable on an installed binary.
int selfcheck(std::ostream& out) {
  int failures = 0;
  auto report = [&](const char* name, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << name << '\n';
    if (!ok) ++failures;
  };
  const amgm::WeightVector alpha({2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0});
  const amgm::WeightVector beta = amgm::WeightVector::uniform(3);

  const amgm::DataVector x149({1.0, 4.0, 9.0});
  report("weighted geometric mean",
         amgm::relatively_equal(amgm::weighted_geometric_mean(alpha, x149), 1.8171205928321397, 1e-14));
  const amgm::GapComparison g = amgm::gap_comparison(alpha, beta, x149);
  report("gap comparison", amgm::relatively_equal(g.gap_alpha, 1.0162127405011937, 1e-13) &&
                               amgm::relatively_equal(g.lower, 0.68236970888601999, 1e-13) &&
                               amgm::relatively_equal(g.upper, 2.7294788355440800, 1e-13));

  const amgm::DataVector xeq({1.0, 2.0, 0.5});
  const amgm::EqualityDiagnosis d = amgm::equality_diagnosis(alpha, beta, xeq);
  const amgm::GapComparison ge = amgm::gap_comparison(alpha, beta, xeq);
  report("left equality case", d.left_equal && !d.right_equal && std::abs(ge.gap_alpha - 1.0 / 12.0) <= 1e-12 &&
                                   std::abs(ge.gap_alpha - ge.lower) <= 1e-12 && ge.gap_alpha < ge.upper);

  const amgm::YoungBounds y = amgm::young_refinement(1.0, 2.0, amgm::ConjugatePair(2.0, 2.0), 0.25);
  report("young bracket", amgm::relatively_equal(y.mid, 0.5, 1e-14) &&
                              amgm::relatively_equal(y.lower, 0.28104858350253993, 1e-13) &&
                              amgm::relatively_equal(y.upper, 0.84314575050761980, 1e-13));

  const std::vector<double> f{1.0, 2.0};
  const std::vector<double> gfun{2.0, 1.0};
  const amgm::HolderEnvelope h =
      amgm::holder_refinement(f, gfun, amgm::DiscreteMeasure({0.5, 0.5}), amgm::ConjugatePair(2.0, 2.0), 0.25);
  report("holder envelope", amgm::relatively_equal(h.classical, 2.5, 1e-14) &&
                                amgm::relatively_equal(h.inner, 2.0, 1e-14) &&
                                amgm::relatively_equal(h.lower, 1.7426406871192851, 1e-13) &&
                                amgm::relatively_equal(h.upper, 2.2475468957064284, 1e-13));

  const amgm::DataVector x3({1.0, 2.0, 3.0});
  report("gm/am ratio", amgm::relatively_equal(amgm::gm_am_ratio(x3), 0.90856029641606983, 1e-14));

  // Kernel variants against the scalar reference.
  amgm::Xoshiro256 rng(amgm::SeededStream{0x5e1fc4ecULL, 0});
  std::vector<double> w(1031);
  std::vector<double> xs(1031);
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = rng.uniform() + 0.01;
    xs[i] = std::exp(40.0 * rng.uniform() - 20.0);
  }
  const double ref = amgm::kernels::sum(xs) / static_cast<double>(xs.size());
  const amgm::kernels::KernelTable& scalar = *amgm::kernels::table_for(amgm::kernels::Isa::scalar);
  for (amgm::kernels::Isa isa : {amgm::kernels::Isa::avx2}) {
    const amgm::kernels::KernelTable* t = amgm::kernels::table_for(isa);
    if (t == nullptr) {
      out << "SKIP kernels " << amgm::kernels::isa_name(isa) << " (not supported on this CPU)\n";
      continue;
    }
    const std::size_t n = xs.size();
    const bool ok =
        amgm::relatively_equal(t->sum(xs.data(), n), scalar.sum(xs.data(), n), 1e-14) &&
        amgm::relatively_equal(t->dot(w.data(), xs.data(), n), scalar.dot(w.data(), xs.data(), n), 1e-14) &&
        amgm::relatively_equal(t->log_ratio_sum(w.data(), xs.data(), n, ref),
                               scalar.log_ratio_sum(w.data(), xs.data(), n, ref), 1e-12) &&
        amgm::relatively_equal(t->log_deficit_sum(w.data(), xs.data(), n, ref),
                               scalar.log_deficit_sum(w.data(), xs.data(), n, ref), 1e-12);
    out << (ok ? "PASS " : "FAIL ") << "kernels " << amgm::kernels::isa_name(isa) << '\n';
    if (!ok) ++failures;
  }
  out << "active kernels: " << amgm::kernels::isa_name(amgm::kernels::active_isa()) << '\n';
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted AM-GM gaps, refined Young/Hoelder/Jensen bounds and GM/AM concentration experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "amgm 1.0.0");

  Common common;
  std::vector<double> alpha_list;
  std::vector<double> beta_list;
  std::vector<double> x_list;
  std::string weights_file;
  std::string beta_file;
  double tol = amgm::kDefaultEqualityTolerance;

  auto add_alpha = [&](CLI::App* cmd) {
    cmd->add_option("--alpha,--weights", alpha_list, "Weights alpha, comma separated")->delimiter(',');
    cmd->add_option("--weights-file", weights_file, "File with one weight per line (alpha)");
  };
  auto add_beta = [&](CLI::App* cmd) {
    cmd->add_option("--beta", beta_list, "Comparison weights beta (default: uniform)")->delimiter(',');
    cmd->add_option("--beta-file", beta_file, "File with one beta weight per line");
  };
  auto add_x = [&](CLI::App* cmd) {
    cmd->add_option("--x", x_list, "Data values, comma separated")->delimiter(',')->required();
  };
  auto beta_or_uniform = [&](std::size_t n) {
    if (beta_list.empty() && beta_file.empty()) return amgm::WeightVector::uniform(n);
    return weights_from(beta_list, beta_file, "beta");
  };

  // gap
  CLI::App* gap = app.add_subcommand("gap", "AM, GM, gap and the two-sided gap comparison");
  add_alpha(gap);
  add_beta(gap);
  add_x(gap);
  add_format(gap, common);
  gap->callback([&] {
    const amgm::WeightVector alpha = weights_from(alpha_list, weights_file, "alpha");
    const amgm::DataVector x(x_list);
    const amgm::WeightVector beta = beta_or_uniform(x.size());
    const amgm::GapComparison g = amgm::gap_comparison(alpha, beta, x);
    ordered_json rec{{"am", amgm::weighted_arithmetic_mean(alpha, x)},
                     {"gm", amgm::weighted_geometric_mean(alpha, x)},
                     {"gap_alpha", g.gap_alpha},
                     {"gap_beta", g.gap_beta},
                     {"lower", g.lower},
                     {"upper", g.upper},
                     {"variance_lower_bound", amgm::variance_lower_bound(alpha, x)}};
    rec.update(profile_json(g.profile));
    with_output(common, [&](std::ostream& os) { emit(rec, common.fmt(), os); });
  });

  // bounds
  CLI::App* bounds = app.add_subcommand("bounds", "Equal-weight gap bounds and GM/AM ratio bounds");
  add_alpha(bounds);
  add_x(bounds);
  add_format(bounds, common);
  bounds->callback([&] {
    const amgm::WeightVector alpha = weights_from(alpha_list, weights_file, "alpha");
    const amgm::DataVector x(x_list);
    const amgm::GapComparison g = amgm::equal_weight_bounds(alpha, x);
    const amgm::RatioBounds r = amgm::ratio_bounds(alpha, x);
    const ordered_json rec{{"gap_alpha", g.gap_alpha},   {"gap_uniform", g.gap_beta},
                           {"gap_lower", g.lower},       {"gap_upper", g.upper},
                           {"gm_am_ratio", r.gm_am_ratio}, {"ratio_lower", r.lower},
                           {"ratio", r.ratio},           {"ratio_upper", r.upper},
                           {"exponent_max", r.exponent_max}, {"exponent_min", r.exponent_min}};
    with_output(common, [&](std::ostream& os) { emit(rec, common.fmt(), os); });
  });

  // equality
  CLI::App* equality = app.add_subcommand("equality", "Which side of the gap comparison is attained");
  add_alpha(equality);
  add_beta(equality);
  add_x(equality);
  add_format(equality, common);
  equality->add_option("--tol", tol, "Relative tolerance");
  equality->callback([&] {
    const amgm::WeightVector alpha = weights_from(alpha_list, weights_file, "alpha");
    const amgm::DataVector x(x_list);
    const amgm::WeightVector beta = beta_or_uniform(x.size());
    const amgm::EqualityDiagnosis d = amgm::equality_diagnosis(alpha, beta, x, tol);
    const amgm::QuotientProfile p = amgm::quotient_profile(alpha, beta);
    ordered_json rec{{"left_equal", d.left_equal},
                     {"right_equal", d.right_equal},
                     {"forced_value_left", d.forced_value_left ? ordered_json(*d.forced_value_left) : ordered_json()},
                     {"forced_value_right", d.forced_value_right ? ordered_json(*d.forced_value_right) : ordered_json()}};
    rec.update(profile_json(p));
    with_output(common, [&](std::ostream& os) { emit(rec, common.fmt(), os); });
  });

  // young
  double u = 0.0;
  double v = 0.0;
  double p = 2.0;
  double split_beta = 0.5;
  CLI::App* young = app.add_subcommand("young", "Refined Young inequality bracket");
  young->add_option("--u", u)->required();
  young->add_option("--v", v)->required();
  young->add_option("--p", p, "Exponent p > 1; q = p/(p-1)");
  young->add_option("--split", split_beta, "Splitting weight in (0,1)");
  add_format(young, common);
  young->callback([&] {
    const amgm::ConjugatePair pq = amgm::ConjugatePair::from_p(p);
    const amgm::YoungBounds y = amgm::young_refinement(u, v, pq, split_beta);
    const ordered_json rec{{"p", pq.p()}, {"q", pq.q()}, {"lower", y.lower}, {"mid", y.mid}, {"upper", y.upper}};
    with_output(common, [&](std::ostream& os) { emit(rec, common.fmt(), os); });
  });

  // holder
  std::string holder_input;
  std::vector<double> ps;
  CLI::App* holder = app.add_subcommand("holder", "Refined Hoelder envelope on a discrete measure");
  holder->add_option("--input", holder_input, "CSV with header mass,f,g[,...]")->required()->check(CLI::ExistingFile);
  holder->add_option("--p", p, "Exponent p for two functions");
  holder->add_option("--split", split_beta, "Splitting weight in (0,1) for two functions");
  holder->add_option("--ps", ps, "Exponents for three or more functions")->delimiter(',');
  add_format(holder, common);
  holder->callback([&] {
    const HolderInput in = read_holder_csv(holder_input);
    const amgm::DiscreteMeasure mu(in.masses);
    ordered_json rec;
    amgm::HolderEnvelope h;
    if (in.functions.size() == 2 && ps.empty()) {
      const amgm::ConjugatePair pq = amgm::ConjugatePair::from_p(p);
      h = amgm::holder_refinement(in.functions[0], in.functions[1], mu, pq, split_beta);
      rec["p"] = pq.p();
      rec["q"] = pq.q();
      rec["angular_distance"] = amgm::angular_distance(in.functions[0], in.functions[1], mu, pq);
    } else {
      if (ps.size() != in.functions.size()) {
        throw amgm::ConfigError("--ps needs one exponent per function (" + std::to_string(in.functions.size()) + ")");
      }
      h = amgm::holder_multi(in.functions, ps, mu);
    }
    rec["classical"] = h.classical;
    rec["lower"] = h.lower;
    rec["inner"] = h.inner;
    rec["upper"] = h.upper;
    rec["coupling"] = h.coupling;
    with_output(common, [&](std::ostream& os) { emit(rec, common.fmt(), os); });
  });

  // jensen
  std::string fname = "exp";
  std::vector<double> points;
  CLI::App* jensen = app.add_subcommand("jensen", "Jensen gap comparison for a catalog function");
  add_alpha(jensen);
  add_beta(jensen);
  jensen->add_option("--x", points, "Points (may be negative)")->delimiter(',')->required();
  jensen->add_option("--function", fname, "Convex function")->check(CLI::IsMember(amgm::convex_catalog()));
  jensen->add_option("--tol", tol, "Relative tolerance for the equality diagnosis");
  add_format(jensen, common);
  jensen->callback([&] {
    const amgm::WeightVector alpha = weights_from(alpha_list, weights_file, "alpha");
    const amgm::WeightVector beta = beta_or_uniform(points.size());
    const amgm::ConvexFunction f = amgm::make_convex_function(fname);
    const amgm::JensenGapComparison j = amgm::jensen_gap_comparison(alpha, beta, points, f);
    const amgm::EqualityDiagnosis d = amgm::jensen_equality_diagnosis(alpha, beta, points, tol);
    ordered_json rec{{"function", f.name()}, {"gap_alpha", j.gap_alpha}, {"gap_beta", j.gap_beta},
                     {"lower", j.lower},     {"upper", j.upper},         {"left_equal", d.left_equal},
                     {"right_equal", d.right_equal}};
    rec.update(profile_json(j.profile));
    with_output(common, [&](std::ostream& os) { emit(rec, common.fmt(), os); });
  });

  // sample
  std::size_t sample_n = 10;
  std::size_t draws = 1;
  double lambda = 1.0;
  std::uint64_t seed = 0;
  std::uint64_t stream_index = 0;
  std::string sampler = "exponential";
  CLI::App* sample = app.add_subcommand("sample", "Seeded draws, one CSV row per vector");
  sample->add_option("--n", sample_n, "Dimension")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
  sample->add_option("--trials", draws, "Number of vectors");
  sample->add_option("--lambda", lambda, "Exponential rate");
  sample->add_option("--seed", seed, "Base seed");
  sample->add_option("--stream", stream_index, "First stream index");
  sample->add_option("--sampler", sampler, "exponential, sphere or spacings")
      ->check(CLI::IsMember({"exponential", "sphere", "spacings"}));
  sample->add_option("--out", common.out, "Output file (default: stdout)");
  sample->callback([&] {
    with_output(common, [&](std::ostream& os) {
      os << "draw,base_seed,stream_index,gm_am_ratio";
      for (std::size_t i = 0; i < sample_n; ++i) os << ",x" << i;
      os << '\n';
      for (std::size_t k = 0; k < draws; ++k) {
        const amgm::SeededStream s{seed, stream_index + k};
        std::vector<double> x;
        if (sampler == "exponential") {
          const auto dv = amgm::sample_exponential(sample_n, lambda, s);
          x.assign(dv.values().begin(), dv.values().end());
        } else if (sampler == "sphere") {
          const auto dv = amgm::sample_l1_sphere_positive(sample_n, s);
          x.assign(dv.values().begin(), dv.values().end());
        } else {
          x = amgm::sample_simplex_spacings(sample_n, s);
        }
        os << k << ',' << seed << ',' << s.stream_index << ',' << amgm::format_real(amgm::gm_am_ratio(x));
        for (double xi : x) os << ',' << amgm::format_real(xi);
        os << '\n';
      }
    });
  });

  // experiment
  std::string kind_name;
  amgm::ExperimentConfig cfg;
  std::string scheme_text = "uniform";
  std::string cfg_weights_file;
  CLI::App* experiment = app.add_subcommand("experiment", "GM/AM concentration experiments");
  experiment->add_option("kind", kind_name, "ratio, gap or wratio")
      ->required()
      ->check(CLI::IsMember({"ratio", "gap", "wratio"}));
  experiment->add_option("--n", cfg.n_values, "Dimensions, comma separated")->delimiter(',')->required();
  experiment->add_option("--trials", cfg.trials, "Trials per dimension");
  experiment->add_option("--epsilon", cfg.epsilon, "Relative half-width of the event, in [0, 1)");
  experiment->add_option("--lambda", cfg.lambda, "Exponential rate");
  experiment->add_option("--seed", cfg.base_seed, "Base seed");
  experiment->add_option("--scheme", scheme_text,
                         "uniform, dirichlet_random, geometric_decay(<rho>) or explicit");
  experiment->add_option("--weights-file", cfg_weights_file, "Weights for the explicit scheme");
  experiment->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
  add_format(experiment, common);
  experiment->callback([&] {
    cfg.scheme = amgm::WeightScheme::parse(scheme_text);
    if (!cfg_weights_file.empty()) {
      if (cfg.scheme.kind != amgm::WeightScheme::Kind::explicit_weights) {
        if (scheme_text != "uniform") throw amgm::ConfigError("--weights-file requires --scheme explicit");
        cfg.scheme.kind = amgm::WeightScheme::Kind::explicit_weights;
      }
      cfg.scheme.explicit_values = amgm::load_weights_file(cfg_weights_file);
    } else if (cfg.scheme.kind == amgm::WeightScheme::Kind::explicit_weights) {
      throw amgm::ConfigError("--scheme explicit requires --weights-file");
    }
    cfg.output_path = common.out;
    for (const std::string& w : cfg.validate()) std::cerr << "warning: " << w << '\n';
    const amgm::ExperimentKind kind = amgm::parse_experiment_kind(kind_name);
    const std::vector<amgm::ExperimentResult> results = amgm::run_experiment(kind, cfg);
    with_output(common, [&](std::ostream& os) {
      if (common.fmt() == Format::json) {
        amgm::write_json(os, kind, cfg, results);
      } else {
        amgm::write_csv(os, results);
      }
    });
    for (const amgm::ExperimentResult& r : results) {
      std::cerr << "n=" << r.n << " streams=[" << r.stream_first << "," << r.stream_last
                << "] exceedance=" << amgm::format_real(r.exceedance) << " k_hat=" << amgm::format_real(r.k_hat)
                << " boundary_hits=" << r.boundary_hits;
      if (kind == amgm::ExperimentKind::gap) {
        std::cerr << " unweighted_hits=" << r.unweighted_hits << " implication_violations=" << r.implication_violations;
      }
      if (kind == amgm::ExperimentKind::wratio) std::cerr << " sandwich_violations=" << r.sandwich_violations;
      std::cerr << '\n';
    }
  });

  // suite
  std::size_t suite_trials = 10000;
  amgm::SuiteOptions suite_opts;
  int exit_code = 0;
  CLI::App* suite = app.add_subcommand("suite", "Randomized inequality verification");
  suite->add_option("--trials", suite_trials, "Random instances");
  suite->add_option("--seed", seed, "Base seed");
  suite->add_option("--tolerance", suite_opts.tolerance, "Relative slack allowed per inequality");
  suite->add_flag("--inject-bug", suite_opts.inject_bug, "Swap min/max quotient (harness self-test)");
  add_format(suite, common);
  suite->callback([&] {
    const amgm::SuiteReport report = amgm::run_inequality_suite(suite_trials, amgm::SeededStream{seed, 0}, suite_opts);
    with_output(common, [&](std::ostream& os) {
      if (common.fmt() == Format::json) {
        ordered_json checks = ordered_json::array();
        for (const amgm::SuiteCheck& c : report.checks) {
          checks.push_back({{"name", c.name},
                            {"instances", c.instances},
                            {"violations", c.violations},
                            {"worst_slack", finite_or_string(c.worst_slack)}});
        }
        os << ordered_json{{"trials", report.trials}, {"base_seed", seed}, {"passed", report.passed()},
                           {"checks", checks}}
                  .dump(2)
           << '\n';
      } else {
        os << "check,instances,violations,worst_slack\n";
        for (const amgm::SuiteCheck& c : report.checks) {
          os << c.name << ',' << c.instances << ',' << c.violations << ',' << amgm::format_real(c.worst_slack) << '\n';
        }
      }
    });
    if (!report.passed()) {
      std::cerr << "suite: " << report.total_violations() << " violation(s)\n";
      exit_code = 1;
    }
  });

  CLI::App* self = app.add_subcommand("selfcheck", "Built-in fixtures and kernel equivalence");
  self->callback([&] { exit_code = selfcheck(std::cout); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const amgm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
