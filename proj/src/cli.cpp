#include "arcdiag/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "arcdiag/action.hpp"
#include "arcdiag/diagram.hpp"
#include "arcdiag/enumerate.hpp"
#include "arcdiag/invariants.hpp"
#include "arcdiag/orbits.hpp"
#include "arcdiag/relations.hpp"
#include "arcdiag/render.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace arcdiag {

namespace {

// Bumped whenever the orbit report layout changes; stale caches recompute.
constexpr int kCacheFormatVersion = 1;

ArcDiagram load_diagram(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  return diagram_from_json(j);
}

void emit(const std::string& text, const std::string& output_path, std::ostream& out) {
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(output_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write " + output_path);
  f << text;
}

std::string cache_file_for(const std::string& cache_dir, const ValenceProfile& profile) {
  std::string tag = profile.to_string();
  for (char& c : tag) {
    if (c == ':') c = '_';
  }
  return (std::filesystem::path(cache_dir) / ("orbits_" + tag + ".json")).string();
}

int run_enumerate(const ValenceProfile& profile, int jobs, bool oracle,
                  const std::string& output_path, std::ostream& out, std::ostream& err) {
  DiagramSet set = enumerate_diagrams(profile, jobs);
  if (oracle) {
    DiagramSet ref = brute_force_oracle(profile);
    if (set.keys != ref.keys) {
      err << "error: enumeration disagrees with the brute-force matcher on "
          << profile.to_string() << "\n";
      return 1;
    }
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& d : set.elements) arr.push_back(diagram_to_json(d));
  emit(arr.dump(2) + "\n", output_path, out);
  return 0;
}

int run_count(const ValenceProfile& profile, bool oracle, const std::string& output_path,
              std::ostream& out, std::ostream& err) {
  std::uint64_t count = count_diagrams(profile);
  if (oracle) {
    DiagramSet ref = brute_force_oracle(profile);
    if (ref.size() != count) {
      err << "error: count disagrees with the brute-force matcher on "
          << profile.to_string() << "\n";
      return 1;
    }
  }
  nlohmann::ordered_json j;
  j["profile"] = profile_to_json(profile);
  j["count"] = count;
  emit(j.dump(2) + "\n", output_path, out);
  return 0;
}

int run_act(const std::string& input_path, const std::string& word_text,
            const std::optional<ValenceProfile>& profile, const std::string& output_path,
            std::ostream& out, std::ostream& err) {
  ArcDiagram d = load_diagram(input_path);
  if (profile && !(*profile == d.profile)) {
    err << "error: input diagram has profile " << d.profile.to_string() << ", not "
        << profile->to_string() << "\n";
    return 1;
  }
  Word w = parse_word(word_text, d.profile.n);
  ArcDiagram result = apply_word(d, w);
  emit(diagram_to_json(result).dump(2) + "\n", output_path, out);
  return 0;
}

int run_invariants(const std::string& input_path, const std::string& output_path,
                   std::ostream& out) {
  ArcDiagram d = load_diagram(input_path);
  emit(record_to_json(invariant_record(d)).dump(2) + "\n", output_path, out);
  return 0;
}

int run_orbits(const ValenceProfile& profile, int jobs, const std::string& cache_dir,
               const std::string& output_path, std::ostream& out) {
  std::string cache_file;
  if (!cache_dir.empty()) {
    cache_file = cache_file_for(cache_dir, profile);
    std::ifstream in(cache_file, std::ios::binary);
    if (in) {
      nlohmann::ordered_json cached = nlohmann::ordered_json::parse(in, nullptr, false);
      if (!cached.is_discarded() &&
          cached.value("format_version", -1) == kCacheFormatVersion) {
        emit(cached.dump(2) + "\n", output_path, out);
        return 0;
      }
    }
  }

  DiagramSet set = enumerate_diagrams(profile, jobs);
  nlohmann::ordered_json j = report_to_json(orbit_report(set));
  j["format_version"] = kCacheFormatVersion;
  if (!cache_file.empty()) {
    std::filesystem::create_directories(cache_dir);
    std::ofstream f(cache_file, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write " + cache_file);
    f << j.dump(2) << "\n";
  }
  emit(j.dump(2) + "\n", output_path, out);
  return 0;
}

int run_check_relations(const ValenceProfile& profile, int jobs,
                        const std::string& output_path, std::ostream& out) {
  DiagramSet set = enumerate_diagrams(profile, jobs);
  nlohmann::ordered_json j;
  j["profile"] = profile_to_json(profile);
  bool holds = true;

  DefiningRelationReport defining = check_defining_relations(set);
  holds = holds && defining.all_hold();
  j["defining"] = defining_report_to_json(defining);

  j["braid"] = nlohmann::ordered_json::array();
  for (int i = 2; i + 1 <= profile.n; ++i) {
    RelationCheck braid = check_braid(set, i);
    holds = holds && braid.holds;
    j["braid"].push_back(check_to_json(braid));
  }

  if (profile.all_equal() && profile.n >= 2) {
    RotationReport rotation = check_rotation_relation(set);
    holds = holds && rotation.pass();
    j["rotation"] = rotation_report_to_json(rotation);
  } else {
    j["rotation"] = nullptr;
  }

  j["holds"] = holds;
  emit(j.dump(2) + "\n", output_path, out);
  return 0;
}

int run_render(const std::string& input_path, const std::string& format,
               const std::string& output_path, std::ostream& out) {
  ArcDiagram d = load_diagram(input_path);
  emit(format == "tikz" ? render_tikz(d) : render_svg(d), output_path, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"non-crossing arc diagrams under the interval-reversal action"};
  app.name("arcdiag");
  app.require_subcommand(1);

  std::string profile_text, word_text, input_path, output_path, cache_dir;
  std::string format = "svg";
  int jobs = 1;
  bool oracle = false;

  auto add_profile = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--profile", profile_text,
                                "valences as l1,...,ln:linf");
    if (required) opt->required();
    return opt;
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", output_path, "write to this file instead of stdout");
  };
  auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", jobs, "worker threads for enumeration")
        ->check(CLI::PositiveNumber);
  };

  auto* cmd_enumerate =
      app.add_subcommand("enumerate", "list every diagram of a profile");
  add_profile(cmd_enumerate, true);
  add_jobs(cmd_enumerate);
  cmd_enumerate->add_flag("--oracle", oracle,
                          "cross-check against the brute-force matcher");
  add_output(cmd_enumerate);

  auto* cmd_count = app.add_subcommand("count", "count diagrams without listing them");
  add_profile(cmd_count, true);
  cmd_count->add_flag("--oracle", oracle,
                      "cross-check against the brute-force matcher");
  add_output(cmd_count);

  auto* cmd_act = app.add_subcommand("act", "apply a word to a diagram");
  cmd_act->add_option("--input", input_path, "diagram JSON file")->required();
  cmd_act->add_option("--word", word_text,
                      "generators as s(p,q), rightmost applied first");
  CLI::Option* act_profile = add_profile(cmd_act, false);
  add_output(cmd_act);

  auto* cmd_invariants =
      app.add_subcommand("invariants", "border, gcd, components of a diagram");
  cmd_invariants->add_option("--input", input_path, "diagram JSON file")->required();
  add_output(cmd_invariants);

  auto* cmd_orbits = app.add_subcommand("orbits", "orbit classification of a profile");
  add_profile(cmd_orbits, true);
  add_jobs(cmd_orbits);
  cmd_orbits
      ->add_option("--cache-dir", cache_dir, "reuse reports stored in this directory")
      ->envname("ARCDIAG_CACHE_DIR");
  add_output(cmd_orbits);

  auto* cmd_relations =
      app.add_subcommand("check-relations", "verify the relation suite on a profile");
  add_profile(cmd_relations, true);
  add_jobs(cmd_relations);
  add_output(cmd_relations);

  auto* cmd_render = app.add_subcommand("render", "draw a diagram");
  cmd_render->add_option("--input", input_path, "diagram JSON file")->required();
  cmd_render->add_option("--format", format, "svg or tikz")
      ->check(CLI::IsMember({"svg", "tikz"}));
  add_output(cmd_render);

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(std::move(reversed_args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  std::optional<ValenceProfile> profile;
  bool wants_profile = cmd_enumerate->parsed() || cmd_count->parsed() ||
                       cmd_orbits->parsed() || cmd_relations->parsed() ||
                       (cmd_act->parsed() && act_profile->count() > 0);
  if (wants_profile) {
    try {
      profile = ValenceProfile::parse(profile_text);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  }

  try {
    if (cmd_enumerate->parsed()) {
      return run_enumerate(*profile, jobs, oracle, output_path, out, err);
    }
    if (cmd_count->parsed()) {
      return run_count(*profile, oracle, output_path, out, err);
    }
    if (cmd_act->parsed()) {
      return run_act(input_path, word_text, profile, output_path, out, err);
    }
    if (cmd_invariants->parsed()) {
      return run_invariants(input_path, output_path, out);
    }
    if (cmd_orbits->parsed()) {
      return run_orbits(*profile, jobs, cache_dir, output_path, out);
    }
    if (cmd_relations->parsed()) {
      return run_check_relations(*profile, jobs, output_path, out);
    }
    if (cmd_render->parsed()) {
      return run_render(input_path, format, output_path, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace arcdiag
