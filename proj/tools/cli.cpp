#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "erasing/dynamics.hpp"
#include "erasing/entropy.hpp"
#include "erasing/error.hpp"
#include "erasing/oracle.hpp"
#include "erasing/parallel.hpp"

namespace erasing::cli {

using nlohmann::json;

nlohmann::json to_json(const Verdict& v) {
  return json{{"kind", std::string(verdict_name(v.kind))},
              {"summary", v.summary},
              {"evidence", v.evidence},
              {"bound", v.bound}};
}

Verdict verdict_from_json(const nlohmann::json& j) {
  Verdict v;
  v.kind = verdict_from_name(j.at("kind").get<std::string>());
  v.summary = j.at("summary").get<std::string>();
  v.evidence = j.at("evidence").get<std::vector<std::string>>();
  v.bound = j.at("bound").get<std::int64_t>();
  return v;
}

nlohmann::json to_json(const ClassificationReport& r) {
  return json{{"oc", to_json(r.oc())},
              {"strongly", to_json(r.strongly())},
              {"completely", to_json(r.completely())},
              {"boundedly", to_json(r.boundedly())}};
}

ClassificationReport report_from_json(const nlohmann::json& j) {
  return ClassificationReport(verdict_from_json(j.at("oc")), verdict_from_json(j.at("strongly")),
                              verdict_from_json(j.at("completely")), verdict_from_json(j.at("boundedly")));
}

namespace {

bool is_parse_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::kMissingBlock:
    case ErrorCode::kDuplicateBlock:
    case ErrorCode::kNoEmptyImage:
    case ErrorCode::kMultipleEmptyImages:
    case ErrorCode::kErasedBlockIsAllOnes:
    case ErrorCode::kBadSymbol:
    case ErrorCode::kBadLiteral:
      return true;
    default:
      return false;
  }
}

json point_json(const UnitReal& x) { return json{{"value", x.to_fraction()}, {"expansion", to_string(to_tilde(x))}}; }

std::string point_text(const UnitReal& x) { return render_point(x); }

std::string ok(bool b) { return b ? "ok" : "FAILED"; }

std::vector<FiniteWord> split_words(const std::string& csv) {
  std::vector<FiniteWord> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "-") item.clear();
    if (!is_binary(item)) throw Error(ErrorCode::kBadLiteral, "target " + item);
    out.push_back(item);
  }
  return out;
}

std::vector<int> bits_of(const std::string& s) {
  std::vector<int> out;
  for (char c : s) {
    if (c != '0' && c != '1') throw Error(ErrorCode::kBadLiteral, "bit sequence " + s);
    out.push_back(c - '0');
  }
  return out;
}

std::string flags_text(const PointFlags& f) {
  std::string out;
  auto add = [&](bool b, const char* name) {
    if (b) out += (out.empty() ? "" : ",") + std::string(name);
  };
  add(f.in_Q2, "Q2");
  add(f.in_E, "E");
  add(f.in_F, "F");
  add(f.in_C, "C");
  return out.empty() ? "-" : out;
}

json stage_table(const StagedPoint& p, std::vector<std::string>& text) {
  json rows = json::array();
  for (std::size_t i = 0; i < p.stages.size(); ++i) {
    rows.push_back(json{{"stage", i},
                        {"length", p.stages[i].size()},
                        {"word", p.stages[i].describe()},
                        {"verified", static_cast<bool>(p.verified[i])}});
    text.push_back(std::to_string(i) + "  |w|=" + std::to_string(p.stages[i].size()) + "  " +
                   p.stages[i].describe() + "  " + ok(p.verified[i]));
  }
  return rows;
}

struct Options {
  std::string file;
  bool structured = false;
  int jobs = 0;
  std::uint64_t seed = 1;
  int budget_l = 0;
  int steps = 0;
  std::uint64_t intermediate = 0;

  Budget budget() const {
    Budget b = Budget::from_env();
    if (budget_l > 0) b.max_word_length = budget_l;
    if (steps > 0) b.max_steps = steps;
    if (intermediate > 0) b.max_intermediate = intermediate;
    return b;
  }
  int workers() const { return jobs > 0 ? jobs : default_jobs(); }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Erasing block substitutions and their interval maps"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--structured", opt.structured, "JSON output");
  app.add_option("--jobs", opt.jobs, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", opt.seed, "Random seed");
  app.add_option("-L,--budget-L", opt.budget_l, "Word-length budget")->check(CLI::PositiveNumber);
  app.add_option("--steps", opt.steps, "Step budget")->check(CLI::PositiveNumber);
  app.add_option("--intermediate", opt.intermediate, "Intermediate length budget")->check(CLI::PositiveNumber);

  json result;
  std::vector<std::string> text;
  std::function<void()> action;

  auto with_file = [&](CLI::App* sub) { sub->add_option("file", opt.file, "Substitution spec file")->required(); };
  auto load = [&] { return Substitution::load(opt.file); };
  auto parse_point = [](const std::string& s) { return UnitReal::parse(s); };

  // classify
  bool verbose = false;
  {
    auto* sub = app.add_subcommand("classify", "Place the substitution in the erasing hierarchy");
    with_file(sub);
    sub->add_flag("-v,--verbose", verbose, "Print certificates");
    sub->callback([&] {
      action = [&] {
        const Substitution s = load();
        const ClassificationReport r = classify(s, opt.budget(), opt.workers());
        result = to_json(r);
        const std::pair<const char*, const Verdict*> rows[] = {
            {"oc", &r.oc()}, {"strongly", &r.strongly()}, {"completely", &r.completely()}, {"boundedly", &r.boundedly()}};
        for (const auto& [name, v] : rows) {
          text.push_back(std::string(name) + ": " + v->render());
          if (verbose)
            for (const auto& e : v->evidence) text.push_back("  " + e);
        }
      };
    });
  }

  // eval
  std::string x_arg, y_arg, w_arg, u_arg;
  {
    auto* sub = app.add_subcommand("eval", "Exact value of f at a rational point");
    with_file(sub);
    sub->add_option("x", x_arg, "Point (p/q or 0b0.P(C))")->required();
    sub->callback([&] {
      action = [&] {
        const Substitution s = load();
        const UnitReal x = parse_point(x_arg);
        const UnitReal y = eval_f(s, x);
        result = json{{"x", point_json(x)}, {"f", point_json(y)}};
        if (x.is_zero()) {
          text.push_back("0 (x = 0)");
        } else if (is_eps_point(s, x)) {
          result["eps_point"] = true;
          text.push_back("0 (x̃ = w_ε^∞)");
        } else {
          text.push_back(point_text(y));
        }
      };
    });
  }

  // orbit
  int steps_n = 0;
  bool show_flags = false;
  {
    auto* sub = app.add_subcommand("orbit", "Exact orbit x, f(x), ..., f^n(x)");
    with_file(sub);
    sub->add_option("x", x_arg, "Start point")->required();
    sub->add_option("-n", steps_n, "Number of steps")->check(CLI::NonNegativeNumber);
    sub->add_flag("--flags", show_flags, "Print membership flags per step");
    sub->callback([&] {
      action = [&] {
        const Substitution s = load();
        const OrbitRecord r = orbit(s, parse_point(x_arg), steps_n);
        json pts = json::array();
        std::string line;
        for (std::size_t i = 0; i < r.points.size(); ++i) {
          line += (i ? ", " : "") + r.points[i].to_fraction();
          const auto& f = r.flags[i];
          pts.push_back(json{{"point", point_json(r.points[i])},
                             {"Q2", f.in_Q2}, {"E", f.in_E}, {"F", f.in_F}, {"C", f.in_C}});
        }
        result = json{{"orbit", pts}};
        text.push_back(line);
        if (show_flags) {
          for (std::size_t i = 0; i < r.points.size(); ++i)
            text.push_back(std::to_string(i) + "  " + point_text(r.points[i]) + "  " + flags_text(r.flags[i]));
        }
      };
    });
  }

  // preimage
  {
    auto* sub = app.add_subcommand("preimage", "A rational x with f(x) = y");
    with_file(sub);
    sub->add_option("y", y_arg, "Target point")->required();
    sub->callback([&] {
      action = [&] {
        const Substitution s = load();
        const UnitReal y = parse_point(y_arg);
        const UnitReal x = preimage_point(s, y);
        const bool good = eval_f(s, x) == y;
        result = json{{"y", point_json(y)}, {"x", point_json(x)}, {"verified", good}};
        text.push_back("x = " + point_text(x));
        text.push_back("check f(x) = " + y.to_fraction() + ": " + ok(good));
      };
    });
  }

  // fiber
  std::size_t count = 5;
  {
    auto* sub = app.add_subcommand("fiber", "Distinct preimages of y from insertion sequences");
    with_file(sub);
    sub->add_option("y", y_arg, "Target point")->required();
    sub->add_option("--count", count, "Number of samples");
    sub->callback([&] {
      action = [&] {
        const Substitution s = load();
        const UnitReal y = parse_point(y_arg);
        const auto xs = fiber_samples(s, y, count, opt.seed);
        json arr = json::array();
        for (const auto& x : xs) {
          const bool good = eval_f(s, x) == y;
          arr.push_back(json{{"x", point_json(x)}, {"verified", good}});
          text.push_back(point_text(x) + "  " + ok(good));
        }
        result = json{{"y", point_json(y)}, {"samples", arr}};
      };
    });
  }

  // lift
  std::vector<std::uint64_t> pads;
  {
    auto* sub = app.add_subcommand("lift", "v with sigma^h(wv) starting with u");
    with_file(sub);
    sub->add_option("w", w_arg, "Prefix word (use - for empty)")->required();
    sub->add_option("u", u_arg, "Target word")->required();
    sub->add_option("--pads", pads, "w_eps padding per level");
    sub->callback([&] {
      action = [&] {
        const Substitution s = load();
        const FiniteWord w = w_arg == "-" ? "" : w_arg;
        const LiftResult r = lift_through(s, w, u_arg, pads, opt.budget());
        result = json{{"h", r.h}, {"v", r.v}, {"relative_levels", r.relative_levels}};
        text.push_back("h = " + std::to_string(r.h));
        text.push_back("v = " + r.v);
        for (std::size_t j = 0; j < r.relative_levels.size(); ++j)
          text.push_back("level " + std::to_string(j) + ": " + r.relative_levels[j]);
      };
    });
  }

  // periodic
  int stages = 8;
  {
    auto* sub = app.add_subcommand("periodic", "Staged periodic point in the cylinder [u0]");
    with_file(sub);
    sub->add_option("u0", u_arg, "Seed word, |u0| >= k")->required();
    sub->add_option("--stages", stages, "Number of stages")->check(CLI::PositiveNumber);
    sub->callback([&] {
      action = [&] {
        const Substitution s = load();
        const PeriodicPoint p = periodic_point(s, u_arg, stages);
        text.push_back("period = " + std::to_string(p.period));
        result = json{{"period", p.period}, {"stages", stage_table(p.point, text)}};
      };
    });
  }

  // dense
  std::string targets_csv;
  {
    auto* sub = app.add_subcommand("dense", "Staged point whose orbit visits the target cylinders");
    with_file(sub);
    sub->add_option("--stages", stages, "Number of stages")->check(CLI::PositiveNumber);
    sub->add_option("--targets", targets_csv, "Comma-separated target words (default: all words)");
    sub->callback([&] {
      action = [&] {
        const Substitution s = load();
        const auto targets =
            targets_csv.empty() ? enumerate_words(static_cast<std::size_t>(stages)) : split_words(targets_csv);
        const DenseOrbit d = dense_orbit_point(s, targets, stages);
        json rows = json::array();
        for (std::size_t n = 0; n < d.point.stages.size(); ++n) {
          const FiniteWord& t = targets[n % targets.size()];
          rows.push_back(json{{"stage", n},
                              {"time", d.schedule[n]},
                              {"target", t},
                              {"visit", d.visits[n]},
                              {"length", d.point.stages[n].size()},
                              {"verified", static_cast<bool>(d.point.verified[n])}});
          text.push_back(std::to_string(n) + "  h=" + std::to_string(d.schedule[n]) + "  target=" +
                         (t.empty() ? "-" : t) + "  visit=" + d.visits[n] + "  |w|=" +
                         std::to_string(d.point.stages[n].size()) + "  " + ok(d.point.verified[n]));
        }
        result = json{{"stages", rows}};
      };
    });
  }

  // sensitivity
  std::string delta_arg = "1/1024";
  {
    auto* sub = app.add_subcommand("sensitivity", "z near x whose n-th iterate is 1/2 away");
    with_file(sub);
    sub->add_option("x", x_arg, "Point")->required();
    sub->add_option("--delta", delta_arg, "Radius");
    sub->callback([&] {
      action = [&] {
        const Substitution s = load();
        const UnitReal x = parse_point(x_arg);
        const SensitivityWitness w = sensitivity_witness(s, x, parse_point(delta_arg));
        const mpq_class gap = abs(w.fn_x.to_mpq() - w.fn_z.to_mpq());
        const mpq_class dist = abs(x.to_mpq() - w.z.to_mpq());
        result = json{{"z", point_json(w.z)},           {"n", w.n},
                      {"fn_x", point_json(w.fn_x)},     {"fn_z", point_json(w.fn_z)},
                      {"distance", dist.get_str()},     {"gap", gap.get_str()},
                      {"verified", w.verified}};
        text.push_back("z = " + point_text(w.z));
        text.push_back("n = " + std::to_string(w.n));
        text.push_back("|x - z| = " + dist.get_str() + " < " + delta_arg);
        text.push_back("f^n(x) = " + w.fn_x.to_fraction() + ", f^n(z) = " + w.fn_z.to_fraction());
        text.push_back("gap = " + gap.get_str() + " >= 1/2: " + ok(w.verified));
      };
    });
  }

  // mixing
  {
    auto* sub = app.add_subcommand("mixing", "x in [w] with f^h(x) = y");
    with_file(sub);
    sub->add_option("w", w_arg, "Cylinder word (use - for empty)")->required();
    sub->add_option("y", y_arg, "Target point")->required();
    sub->callback([&] {
      action = [&] {
        const Substitution s = load();
        const MixingWitness m = mixing_witness(s, w_arg == "-" ? "" : w_arg, parse_point(y_arg));
        result = json{{"h", m.h}, {"x", point_json(m.x)}, {"verified", m.verified}};
        text.push_back("h = " + std::to_string(m.h));
        text.push_back("x = " + point_text(m.x));
        text.push_back("check x in [w] and f^h(x) = y: " + ok(m.verified));
      };
    });
  }

  // scrambled
  std::string alpha = "10", beta = "01";
  {
    auto* sub = app.add_subcommand("scrambled", "Pair of staged points with proximity and separation events");
    with_file(sub);
    sub->add_option("--alpha", alpha, "Bit sequence, repeated");
    sub->add_option("--beta", beta, "Bit sequence, repeated");
    sub->add_option("--stages", stages, "Number of stages")->check(CLI::PositiveNumber);
    sub->add_option("--targets", targets_csv, "Comma-separated targets (default: 1, 11, 111, ...)");
    sub->callback([&] {
      action = [&] {
        const Substitution s = load();
        std::vector<FiniteWord> targets;
        if (targets_csv.empty()) {
          for (int i = 1; i <= stages; ++i) targets.emplace_back(static_cast<std::size_t>(i), '1');
        } else {
          targets = split_words(targets_csv);
        }
        const ScrambledPair p = scrambled_pair(s, bits_of(alpha), bits_of(beta), targets, stages);
        json prox = json::array(), sep = json::array();
        for (const auto& e : p.proximity) {
          prox.push_back(json{{"stage", e.stage}, {"time", e.time}, {"upper_bound", e.bound.get_str()}});
          text.push_back("proximity  stage " + std::to_string(e.stage) + "  time " + std::to_string(e.time) +
                         "  |f^t(x) - f^t(y)| <= " + e.bound.get_str());
        }
        for (const auto& e : p.separation) {
          sep.push_back(json{{"stage", e.stage}, {"time", e.time}, {"lower_bound", e.bound.get_str()}});
          text.push_back("separation stage " + std::to_string(e.stage) + "  time " + std::to_string(e.time) +
                         "  |f^t(x) - f^t(y)| >= " + e.bound.get_str());
        }
        const bool good = p.first.all_verified() && p.second.all_verified();
        text.push_back("stage checks: " + ok(good));
        result = json{{"proximity", prox}, {"separation", sep}, {"verified", good}};
      };
    });
  }

  // almost-fixed
  int j_arg = 10;
  {
    auto* sub = app.add_subcommand("almost-fixed", "Witness near x0 = 0.w_eps^inf");
    with_file(sub);
    sub->add_option("-j", j_arg, "Resolution exponent")->check(CLI::PositiveNumber);
    sub->callback([&] {
      action = [&] {
        const Substitution s = load();
        const AlmostFixedWitness w = almost_fixed_witness(s, j_arg);
        result = json{{"x0", point_json(w.x0)}, {"z", point_json(w.z)}, {"fz", point_json(w.fz)},
                      {"cylinder", w.cylinder}, {"side", w.right_side ? "right" : "left"},
                      {"verified", w.verified}};
        text.push_back("x0 = " + point_text(w.x0));
        text.push_back("z = " + point_text(w.z));
        text.push_back("f(z) = " + point_text(w.fz) + " in [" + w.cylinder + "]: " + ok(w.verified));
      };
    });
  }

  // entropy
  int k_len = 2;
  std::string word_arg;
  {
    auto* sub = app.add_subcommand("entropy", "Entropy lower bound k·log2/F(k)");
    with_file(sub);
    sub->add_option("-k", k_len, "Word length")->check(CLI::Range(1, 24));
    sub->add_option("--word", word_arg, "Cylinder for the localized bound");
    sub->callback([&] {
      action = [&] {
        const Substitution s = load();
        const EntropyBound b = word_arg.empty() ? entropy_lower_bound(s, k_len, opt.workers())
                                                : localized_entropy_bound(s, k_len, word_arg, opt.workers());
        result = json{{"k", b.k_len}, {"F", b.f}, {"local", b.local}, {"bound_log2", b.value_in_log2}};
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", b.value_in_log2);
        text.push_back(b.render());
        text.push_back(std::string("bound = ") + buf + "·log2");
      };
    });
  }

  // separated
  int n_arg = 1;
  {
    auto* sub = app.add_subcommand("separated", "Separated family with block itineraries");
    with_file(sub);
    sub->add_option("-k", k_len, "Word length")->check(CLI::Range(1, 16));
    sub->add_option("-n", n_arg, "Stages")->check(CLI::NonNegativeNumber);
    sub->callback([&] {
      action = [&] {
        const Substitution s = load();
        const SeparatedFamily f = separated_family(s, k_len, n_arg, opt.workers(), opt.seed);
        const auto lines = f.export_lines();
        result = json{{"k", f.k_len},
                      {"n", f.n},
                      {"t", f.t},
                      {"epsilon", f.epsilon.to_fraction()},
                      {"points", f.points.size()},
                      {"pairs_checked", f.pairs_checked},
                      {"min_distance", f.min_distance.to_fraction()},
                      {"sampled", f.sampled},
                      {"verified", f.verified()},
                      {"family", lines}};
        text.push_back("t = " + std::to_string(f.t) + ", epsilon = " + f.epsilon.to_fraction() + ", points = " +
                       std::to_string(f.points.size()) + ", pairs checked = " + std::to_string(f.pairs_checked) +
                       ", min d = " + f.min_distance.to_fraction() +
                       ", verified: " + (!f.verified() ? "no" : f.sampled ? "sampled" : "yes"));
        text.insert(text.end(), lines.begin(), lines.end());
      };
    });
  }

  // oracle (hidden): regenerate the derived constants
  std::string data_dir = "data";
  {
    auto* sub = app.add_subcommand("oracle", "");
    sub->group("");
    sub->add_option("data", data_dir, "Directory with sigma1..4.sub");
    sub->callback([&] {
      action = [&] {
        const auto lines = oracle::derived_constants(data_dir);
        result = json(lines);
        text = lines;
      };
    });
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  try {
    action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_parse_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (opt.structured) {
    out << result.dump(2) << "\n";
  } else {
    for (const auto& line : text) out << line << "\n";
  }
  return 0;
}

}  // namespace erasing::cli
