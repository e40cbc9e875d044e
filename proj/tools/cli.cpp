#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>

#include "stw/canonical.hpp"
#include "stw/enumeration.hpp"
#include "stw/error.hpp"
#include "stw/generators.hpp"
#include "stw/io.hpp"
#include "stw/moves.hpp"
#include "stw/report.hpp"
#include "stw/steiner.hpp"
#include "stw/verify.hpp"

namespace stw::cli {

namespace {

struct OutputOptions {
  std::string out_path;
  std::string format = "edgelist";
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--out", o.out_path, "Write to FILE instead of stdout");
  cmd->add_option("--format", o.format, "edgelist or dot")
      ->check(CLI::IsMember({"edgelist", "dot"}));
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  file << text;
}

std::string render(const Tree& t, const OutputOptions& o, const std::string& comment) {
  if (o.format == "dot") {
    return (comment.empty() ? "" : "// " + comment + "\n") + to_dot(t);
  }
  return (comment.empty() ? "" : "# " + comment + "\n") + to_edge_list(t);
}

std::string compact_edges(const Tree& t) {
  std::string s;
  for (const Edge& e : t.edges()) {
    if (!s.empty()) s += ';';
    s += std::to_string(e.u) + ' ' + std::to_string(e.v);
  }
  return s;
}

std::string instance_label(const VerificationReport& r) {
  std::string s;
  if (r.instance.segments) {
    s = "l=(" + r.instance.segments->to_string() + ")";
  } else if (r.instance.n && r.instance.m) {
    s = "n=" + std::to_string(*r.instance.n) + " m=" + std::to_string(*r.instance.m);
  } else if (r.instance.samples) {
    s = "samples=" + std::to_string(*r.instance.samples);
  }
  s += " k=";
  for (std::size_t i = 0; i < r.instance.k.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(r.instance.k[i]);
  }
  return s;
}

int summarize(const std::vector<VerificationReport>& reports, const std::string& report_path,
              bool verbose, std::ostream& out) {
  std::map<Verdict, int> tally;
  for (const VerificationReport& r : reports) {
    ++tally[r.verdict];
    if (verbose || r.verdict != Verdict::Confirmed) {
      out << r.theorem << ' ' << instance_label(r) << ' ' << to_string(r.verdict)
          << " value=" << r.extremal_value << " | " << r.notes << '\n';
    }
  }
  const std::string name = reports.empty() ? "verify" : reports.front().theorem;
  out << name << ": " << reports.size() << " instances, " << tally[Verdict::Confirmed]
      << " confirmed, " << tally[Verdict::ConfirmedWithNotes] << " confirmed-with-notes, "
      << tally[Verdict::Violated] << " violated\n";
  if (!report_path.empty()) {
    std::ofstream file(report_path);
    if (!file) throw Error(ErrorKind::ParseError, "cannot write '" + report_path + "'");
    file << reports_to_json(reports);
  }
  return any_violated(reports) ? kExitViolation : kExitConfirmed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steiner k-Wiener index of trees: compute, enumerate, verify, optimize"};
  app.name(args.empty() ? "stw" : args.front());
  app.require_subcommand(1);

  // Deferred action chosen by whichever subcommand parsed.
  std::function<int()> action;

  // gen
  auto* gen = app.add_subcommand("gen", "Construct extremal trees");
  gen->require_subcommand(1);
  OutputOptions gen_out;
  std::string segments_text;
  auto* gen_star = gen->add_subcommand("starlike", "Starlike tree with given segment lengths");
  gen_star->add_option("--segments", segments_text, "Comma-separated lengths, e.g. 3,2,2")
      ->required();
  add_output_options(gen_star, gen_out);
  gen_star->callback([&] {
    action = [&] {
      emit(render(starlike(SegmentSequence::parse(segments_text)), gen_out, ""),
           gen_out.out_path, out);
      return kExitConfirmed;
    };
  });
  int gen_n = 0;
  int gen_m = 0;
  auto* gen_bal = gen->add_subcommand("balanced", "Balanced starlike tree of order n with m legs");
  gen_bal->add_option("--n", gen_n)->required();
  gen_bal->add_option("--m", gen_m)->required();
  add_output_options(gen_bal, gen_out);
  gen_bal->callback([&] {
    action = [&] {
      emit(render(balanced_starlike(gen_n, gen_m), gen_out, ""), gen_out.out_path, out);
      return kExitConfirmed;
    };
  });
  std::string which;
  auto* gen_fam = gen->add_subcommand("family", "Caterpillar family member T_i..T_iv");
  gen_fam->add_option("--n", gen_n)->required();
  gen_fam->add_option("--m", gen_m)->required();
  gen_fam->add_option("--which", which, "i, ii, iii or iv")
      ->required()
      ->check(CLI::IsMember({"i", "ii", "iii", "iv"}));
  add_output_options(gen_fam, gen_out);
  gen_fam->callback([&] {
    action = [&] {
      const FamilyTree ft = family_T({gen_n, gen_m, parse_family(which)});
      emit(render(ft.tree, gen_out, ft.note), gen_out.out_path, out);
      return kExitConfirmed;
    };
  });

  // sw
  auto* sw = app.add_subcommand("sw", "Steiner k-Wiener index of an edge-list tree");
  int sw_k_value = 0;
  bool profile = false;
  std::string in_path;
  sw->add_option("--k", sw_k_value, "Subset size");
  sw->add_flag("--profile", profile, "Print SW_k for every k = 1..n as 'k value' lines");
  sw->add_option("--in", in_path, "Edge-list file")->required();
  sw->callback([&] {
    action = [&] {
      const Tree t = load_edge_list(in_path);
      if (profile) {
        const SWProfile p = sw_profile(t);
        for (int k = 1; k <= t.order(); ++k) out << k << ' ' << p.at(k) << '\n';
        return kExitConfirmed;
      }
      if (sw->count("--k") == 0) throw CLI::RequiredError("--k");
      out << sw_k(t, sw_k_value) << '\n';
      return kExitConfirmed;
    };
  });

  // enumerate
  auto* en = app.add_subcommand("enumerate", "List trees of order n up to isomorphism");
  int en_n = 0;
  int en_m = -1;
  bool count_only = false;
  std::string en_segments;
  std::string en_format = "code";
  en->add_option("--n", en_n)->required();
  en->add_option("--segments", en_segments, "Keep trees with this segment sequence");
  en->add_option("--num-segments", en_m, "Keep trees with this many segments");
  en->add_flag("--count-only", count_only);
  en->add_option("--format", en_format, "code (canonical code) or edgelist ('u v;u v;...')")
      ->check(CLI::IsMember({"code", "edgelist"}));
  en->callback([&] {
    action = [&] {
      std::optional<SegmentSequence> seq;
      if (!en_segments.empty()) {
        seq = SegmentSequence::parse(en_segments);
        if (seq->order() != en_n) {
          throw Error(ErrorKind::OutOfRange, "segments sum to order " +
                                                 std::to_string(seq->order()) + ", not --n");
        }
      }
      TreeStream stream(en_n, [&](const Tree& t) {
        if (seq && (t.order() < 2 || segment_sequence(t) != *seq)) return false;
        if (en_m >= 0 && (t.order() < 2 || segment_count(t) != en_m)) return false;
        return true;
      });
      if (count_only) {
        out << stream.count() << '\n';
        return kExitConfirmed;
      }
      while (auto t = stream.next()) {
        out << (en_format == "code" ? canonical_code(*t).code : compact_edges(*t)) << '\n';
      }
      return kExitConfirmed;
    };
  });

  // verify
  auto* ver = app.add_subcommand("verify", "Exhaustive or sampled theorem checks");
  ver->require_subcommand(1);
  int max_n = 0;
  std::vector<int> k_set{2, 3, 4};
  std::string report_path;
  bool verbose = false;
  int jobs = 0;
  long long samples = 200;
  std::uint64_t seed = 42;
  using Runner = std::vector<VerificationReport> (*)(int, const std::vector<int>&,
                                                     const VerifyOptions&);
  const std::vector<std::pair<std::string, Runner>> theorems{
      {"theorem1", &verify_min_starlike},
      {"theorem2", &verify_max_quasi_caterpillar},
      {"structure", &verify_structure},
      {"theorem5min", &verify_min_balanced},
      {"theorem5max", &verify_max_caterpillar_family}};
  for (const auto& [name, runner] : theorems) {
    auto* cmd = ver->add_subcommand(name);
    cmd->add_option("--max-n", max_n, "Largest tree order")->required();
    cmd->add_option("--k", k_set, "Comma-separated k values")->delimiter(',');
    cmd->add_option("--report", report_path, "Write the JSON report here");
    cmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
    cmd->add_flag("--verbose", verbose, "Print every instance, not only exceptions");
    Runner fn = runner;
    cmd->callback([&, fn] {
      action = [&, fn] {
        return summarize(fn(max_n, k_set, VerifyOptions{jobs}), report_path, verbose, out);
      };
    });
  }
  auto* lemma = ver->add_subcommand("lemma31", "Random switch instances");
  lemma->add_option("--samples", samples);
  lemma->add_option("--seed", seed);
  lemma->add_option("--k", k_set)->delimiter(',');
  lemma->add_option("--report", report_path);
  lemma->add_flag("--verbose", verbose);
  lemma->callback([&] {
    action = [&] {
      return summarize({verify_lemma31(samples, seed, k_set)}, report_path, true, out);
    };
  });

  // optimize
  auto* opt = app.add_subcommand("optimize", "Hill-climb over segment-preserving moves");
  int opt_k = 0;
  std::string direction;
  bool trace = false;
  opt->add_option("--in", in_path, "Edge-list file")->required();
  opt->add_option("--k", opt_k)->required();
  opt->add_option("--direction", direction)->required()->check(CLI::IsMember({"max", "min"}));
  opt->add_flag("--trace", trace, "Print every applied move");
  opt->callback([&] {
    action = [&] {
      const Tree t = load_edge_list(in_path);
      const ClimbResult result =
          hill_climb(t, opt_k, direction == "max" ? Direction::Maximize : Direction::Minimize);
      out << "# start SW_" << opt_k << " = " << sw_k(t, opt_k) << '\n';
      if (trace) {
        for (std::size_t i = 0; i < result.steps.size(); ++i) {
          const ClimbStep& s = result.steps[i];
          out << "# step " << i + 1 << ": " << describe(s.move) << " delta=" << s.delta
              << " value=" << s.value << '\n';
        }
      }
      out << "# final SW_" << opt_k << " = " << result.value << " after " << result.steps.size()
          << " moves\n";
      out << to_edge_list(result.tree);
      return kExitConfirmed;
    };
  });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    return action ? action() : kExitUsage;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitConfirmed;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitConfirmed;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace stw::cli
