#include "ifscheck/cli.hpp"

#include "ifscheck/digits.hpp"
#include "ifscheck/errors.hpp"
#include "ifscheck/ifs_json.hpp"
#include "ifscheck/render.hpp"
#include "ifscheck/segments.hpp"
#include "ifscheck/topology.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

namespace ifscheck {

namespace {

using nlohmann::json;

struct Common {
  std::string ifs = "paper";
  bool json = false;
  bool verbose = false;
};

void add_output_flags(CLI::App* cmd, Common& c) {
  cmd->add_flag("--json", c.json, "Print the report as JSON");
  cmd->add_flag("-v,--verbose", c.verbose, "List every check, not only failures");
}

void add_ifs_option(CLI::App* cmd, Common& c) {
  cmd->add_option("--ifs", c.ifs, "paper, grid, or a path to an IFS JSON file")->capture_default_str();
}

Rational parse_rational(const std::string& text, const std::string& what) {
  try {
    return Rational::parse(text);
  } catch (const InputError& e) {
    throw InputError(what + ": " + e.what());
  }
}

void require_range(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

// Shared by every verification command: text or JSON, exit 0 or 1.
int finish(const std::vector<Report>& reports, const Common& c, std::ostream& out, json extra = json::object()) {
  const bool passed = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });
  if (c.json) {
    json doc = std::move(extra);
    doc["passed"] = passed;
    doc["reports"] = json::array();
    for (const auto& r : reports) doc["reports"].push_back(r.to_json());
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : reports) r.print(out, c.verbose);
  }
  return passed ? kExitPass : kExitFail;
}

std::vector<DigitStream> c2_streams(const std::vector<std::string>& texts, std::size_t random_count,
                                    std::uint64_t seed) {
  std::vector<DigitStream> zs;
  for (const auto& t : texts) zs.push_back(DigitStream::parse(Alphabet::C2, t));
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < random_count; ++k) zs.push_back(random_stream(Alphabet::C2, rng));
  return zs;
}

// (x, 0) to (x + 1/4, 1).
RatSegment ell_segment(const Rational& x) { return RatSegment({x, Rational(0)}, {x + rat(1, 4), Rational(1)}); }

struct ProbePreset {
  RatPoint center;
  Rational radius = rat(1, 216);
  int depth = 3;
  Word anchor{{1}};
  Word placement{{7, 4}};
  Rational x = rat(1, 5);
};

// φ_7φ_4 applied to the midpoint of ℓ_{1/5}.
ProbePreset lemma4_preset() {
  ProbePreset p;
  const RatPoint mid{p.x + rat(1, 8), rat(1, 2)};
  p.center = apply(word_map(paper_ifs(), p.placement), mid);
  return p;
}

struct StripPreset {
  Rational low = rat(1, 4);
  Rational high = rat(9, 20);
  std::vector<Rational> bundles = {rat(1, 5), rat(1, 2)};
};

// ---- verify-osc ----

int cmd_verify_osc(const Common& c, std::ostream& out) {
  const Ifs ifs = load_ifs(c.ifs);
  const OscReport osc = verify_osc(ifs);
  Report r{"osc", {}};
  r.add(check_true("images inside the invariant square", osc.containment(),
                   std::to_string(osc.uncontained.size()) + " uncontained"));
  r.add(check_true("pairwise interior-disjoint images", osc.disjoint(),
                   std::to_string(osc.overlapping.size()) + " overlapping of " + std::to_string(osc.pairs_checked)));
  if (!c.json) out << osc.summary() << "\n";
  return finish({r}, c, out, json{{"summary", osc.summary()}});
}

// ---- verify-lemma1 ----

struct AddressOptions {
  std::size_t random = 100;
  std::uint64_t seed = 1;
  int max_depth = 12;
};

int cmd_verify_lemma1(const Common& c, const AddressOptions& o, std::ostream& out) {
  require_range(o.max_depth >= 1 && o.max_depth <= 40, "verify-lemma1: --max-depth must be in 1..40");
  const Ifs& phi = paper_ifs();
  Report digits{"digit pairs", {}};
  for (std::uint8_t label = 0; label < 2; ++label) {
    const Rational x = digit_value(Alphabet::C1, label);
    for (int y = 0; y < 6; ++y) {
      const int index = lemma1_index(x, y);
      digits.add(check_equal("phi_" + std::to_string(index) + "(0,0) for (" + x.to_string() + ", " +
                                 std::to_string(y) + ")",
                             apply(phi.map(index), RatPoint{Rational(0), Rational(0)}),
                             RatPoint{x / 6 + Rational(y) / 24, Rational(y) / 6}));
    }
  }
  Report streams{"random addresses", {}};
  std::mt19937_64 rng(o.seed);
  for (std::size_t k = 0; k < o.random; ++k) {
    const DigitStream x = random_stream(Alphabet::C1, rng);
    const DigitStream y = random_stream(Alphabet::Base6, rng);
    for (int n = 1; n <= o.max_depth; ++n) {
      const AddressReport a = lemma1_address(x, y, n);
      const std::string tag = x.to_string() + " " + y.to_string() + " n=" + std::to_string(n);
      streams.add(check_true(tag + " partial sum", a.partial_sum_matches, a.point_estimate.to_string()));
      streams.add(check_true(tag + " within 6^-n", a.within_bound(),
                             a.point_estimate.to_string() + " vs " + a.limit.to_string()));
    }
  }
  return finish({digits, streams}, c, out);
}

// ---- verify-lemma2 ----

struct StreamOptions {
  std::vector<std::string> z;
  std::size_t random = 100;
  std::uint64_t seed = 1;
  int depth = 12;
};

int cmd_verify_lemma2(const Common& c, const StreamOptions& o, std::ostream& out) {
  Report r{"endpoint coincidences", {}};
  for (const auto& z : c2_streams(o.z, o.random, o.seed)) r.merge(verify_lemma2(z), z.to_string() + ": ");
  return finish({r}, c, out);
}

// ---- verify-lemma3 ----

int cmd_verify_lemma3(const Common& c, const StreamOptions& o, std::ostream& out) {
  require_range(o.depth >= 1 && o.depth <= 60, "verify-lemma3: --depth must be in 1..60");
  std::vector<std::string> texts = o.z;
  if (texts.empty() && o.random == 0) texts = {"|0", "|1", "|10", "|01", "0|1", "1|0", "|001"};
  Report fact1{"fact1", {}}, fact2{"fact2", {}}, fact3{"fact3", {}}, line{"line membership", {}};
  for (const auto& z : c2_streams(texts, o.random, o.seed)) {
    const std::string tag = z.to_string() + ": ";
    fact1.merge(verify_fact1(z), tag);
    for (int n = 1; n <= o.depth; ++n) {
      fact2.merge(verify_fact2(z, n), tag + "n=" + std::to_string(n) + " ");
      fact3.merge(verify_fact3(z, n), tag + "N=" + std::to_string(n) + " ");
    }
    line.merge(verify_line_membership(decompose_ell_z(z, o.depth)), tag);
    line.add(check_equal(tag + "x(z) = 1/2 - (3/2)z", x_value(z), rat(1, 2) - rat(3, 2) * stream_value(z)));
  }
  return finish({fact1, fact2, fact3, line}, c, out);
}

// ---- strip ----

struct StripOptions {
  std::string low, high, preset;
  int max_depth = 4;
  int cascade = 2;
  std::vector<std::string> bundles;
  std::uint64_t cap = kDefaultCellCap;
};

int cmd_strip(const Common& c, const StripOptions& o, std::ostream& out) {
  require_range(o.max_depth >= 0 && o.max_depth <= 12, "strip: --max-depth must be in 0..12");
  require_range(o.cascade >= 0 && o.cascade <= 6, "strip: --cascade must be in 0..6");
  std::optional<Rational> low, high;
  std::vector<Rational> bundles;
  if (!o.preset.empty()) {
    if (o.preset != "paper") throw InputError("strip: unknown preset '" + o.preset + "'");
    const StripPreset p;
    low = p.low;
    high = p.high;
    bundles = p.bundles;
  }
  if (!o.low.empty()) low = parse_rational(o.low, "--low");
  if (!o.high.empty()) high = parse_rational(o.high, "--high");
  for (const auto& b : o.bundles) bundles.push_back(parse_rational(b, "--bundle"));
  if (!low || !high) throw InputError("strip: give --low and --high, or --preset paper");

  const Ifs ifs = load_ifs(c.ifs);
  const auto found = find_vacant_strip(ifs, *low, *high, o.max_depth);
  Report r{"vacant strip", {}};
  json extra{{"hints", {low->to_string(), high->to_string()}}};
  if (!found) {
    r.add(check_true("vacant strip within hints", false, "none up to depth " + std::to_string(o.max_depth)));
    if (!c.json) out << "no vacant strip in (" << *low << ", " << *high << ") up to depth " << o.max_depth << "\n";
    return finish({r}, c, out, extra);
  }
  const Strip& s = found->strip;
  const int m = found->depth;
  if (!c.json) {
    out << "strip " << s.c_low() << " < x - y/4 < " << s.c_high() << " at depth " << m << " (gap " << found->gap_low
        << ", " << found->gap_high << ")\n";
  }
  extra["strip"] = {s.c_low().to_string(), s.c_high().to_string()};
  extra["depth"] = m;
  extra["gap"] = {found->gap_low.to_string(), found->gap_high.to_string()};
  r.add(check_true("vacant at depth " + std::to_string(m), strip_is_vacant(ifs, s, m)));
  r.add(check_true("vacant at depth " + std::to_string(m + o.cascade), strip_is_vacant(ifs, s, m + o.cascade)));

  if (!bundles.empty()) {
    const CellGraph g = build_cell_graph(ifs, m, o.cap);
    std::vector<std::pair<Rational, std::vector<std::uint32_t>>> sides;
    json labels = json::array();
    for (const auto& x : bundles) {
      auto ls = g.labels_meeting(ell_segment(x));
      r.add(check_true("bundle " + x.to_string() + " meets level-" + std::to_string(m) + " cells", !ls.empty()));
      r.add(check_true("bundle " + x.to_string() + " lies outside the strip", x <= s.c_low() || x >= s.c_high()));
      labels.push_back({{"x", x.to_string()}, {"labels", ls}});
      sides.emplace_back(x, std::move(ls));
    }
    for (std::size_t i = 0; i < sides.size(); ++i) {
      for (std::size_t j = i + 1; j < sides.size(); ++j) {
        const bool opposite = (sides[i].first <= s.c_low()) != (sides[j].first <= s.c_low());
        if (!opposite) continue;
        std::vector<std::uint32_t> common;
        std::set_intersection(sides[i].second.begin(), sides[i].second.end(), sides[j].second.begin(),
                              sides[j].second.end(), std::back_inserter(common));
        r.add(check_true("bundles " + sides[i].first.to_string() + " and " + sides[j].first.to_string() +
                             " have different component labels",
                         common.empty(), std::to_string(common.size()) + " shared"));
      }
    }
    extra["bundles"] = labels;
  }
  return finish({r}, c, out, extra);
}

// ---- components ----

struct ComponentOptions {
  int min_depth = 0;
  int max_depth = 3;
  std::string edges;
  std::uint64_t cap = kDefaultCellCap;
};

int cmd_components(const Common& c, const ComponentOptions& o, std::ostream& out) {
  require_range(o.min_depth >= 0 && o.min_depth <= o.max_depth, "components: need 0 <= --min-depth <= --max-depth");
  const Ifs ifs = load_ifs(c.ifs);
  Report r{"component counts", {}};
  json table = json::array();
  if (!c.json) out << "depth\tcells\tedges\tcomponents\n";
  std::optional<std::size_t> previous;
  for (int n = o.min_depth; n <= o.max_depth; ++n) {
    const CellGraph g = build_cell_graph(ifs, n, o.cap);
    if (!c.json) out << n << "\t" << g.size() << "\t" << g.edge_count() << "\t" << g.component_count() << "\n";
    table.push_back({{"depth", n}, {"cells", g.size()}, {"edges", g.edge_count()}, {"components", g.component_count()}});
    if (previous) {
      r.add(check_at_most("count(" + std::to_string(n - 1) + ") <= count(" + std::to_string(n) + ")",
                          Rational(static_cast<long long>(*previous)),
                          Rational(static_cast<long long>(g.component_count()))));
    }
    previous = g.component_count();
    if (n == o.max_depth && !o.edges.empty()) {
      std::ofstream file(o.edges);
      if (!file) throw InputError("components: cannot write " + o.edges);
      write_edge_list(file, g);
    }
  }
  return finish({r}, c, out, json{{"table", table}});
}

// ---- probe ----

struct ProbeOptions {
  std::string x, y, radius, anchor, preset;
  int depth = -1;
  std::size_t min_components = 0;
  bool check_next = false;
};

int cmd_probe(const Common& c, const ProbeOptions& o, std::ostream& out) {
  std::optional<RatPoint> center;
  std::optional<Rational> radius;
  int depth = o.depth;
  Word anchor;
  std::size_t min_components = o.min_components;
  bool check_next = o.check_next;
  if (!o.preset.empty()) {
    if (o.preset != "lemma4") throw InputError("probe: unknown preset '" + o.preset + "'");
    const ProbePreset p = lemma4_preset();
    center = p.center;
    radius = p.radius;
    if (depth < 0) depth = p.depth;
    anchor = p.anchor;
    min_components = std::max<std::size_t>(min_components, 2);
    check_next = true;
  }
  if (!o.x.empty() || !o.y.empty()) {
    if (o.x.empty() || o.y.empty()) throw InputError("probe: give both --x and --y");
    center = RatPoint{parse_rational(o.x, "--x"), parse_rational(o.y, "--y")};
  }
  if (!o.radius.empty()) radius = parse_rational(o.radius, "--radius");
  if (!o.anchor.empty()) anchor = Word::parse(o.anchor);
  if (!center || !radius || depth < 0) throw InputError("probe: give --x, --y, --radius and --depth, or --preset lemma4");
  require_range(radius->sign() > 0, "probe: --radius must be positive");

  const Ifs ifs = load_ifs(c.ifs);
  const auto describe = [](const ProbeResult& p) {
    return json{{"depth", p.depth},
                {"center", {p.center.x.to_string(), p.center.y.to_string()}},
                {"radius", p.radius.to_string()},
                {"anchor", p.anchor.to_string()},
                {"global_component_id", p.global_component_id},
                {"window_cells", p.window_cells},
                {"anchored_cells", p.anchored_cells},
                {"local_component_count", p.local_component_count}};
  };
  const auto print = [&](const ProbeResult& p) {
    if (c.json) return;
    out << "depth " << p.depth << ": window " << p.window_cells << " cells, " << p.anchored_cells
        << " in component " << p.global_component_id << " of " << right_side(ifs, p.anchor).to_string() << ", "
        << p.local_component_count << " local components\n";
  };
  if (!c.json) out << "probe at " << center->to_string() << " radius " << *radius << "\n";

  Report r{"local connectivity probe", {}};
  const ProbeResult first = local_connectivity_probe(ifs, *center, *radius, depth, anchor);
  print(first);
  json results = json::array({describe(first)});
  if (min_components > 0) {
    r.add(check_at_most("local components >= " + std::to_string(min_components),
                        Rational(static_cast<long long>(min_components)),
                        Rational(static_cast<long long>(first.local_component_count))));
  }
  if (check_next) {
    const ProbeResult next = local_connectivity_probe(ifs, *center, *radius, depth + 1, anchor);
    print(next);
    results.push_back(describe(next));
    r.add(check_at_most("count(" + std::to_string(depth) + ") <= count(" + std::to_string(depth + 1) + ")",
                        Rational(static_cast<long long>(first.local_component_count)),
                        Rational(static_cast<long long>(next.local_component_count))));
  }
  return finish({r}, c, out, json{{"probes", results}});
}

// ---- render ----

struct RenderOptions {
  int depth = 1;
  int size = 600;
  std::string out = "-";
  bool no_flip = false;
  std::vector<std::string> ells;
  std::string preset;
  std::uint64_t cap = 2'000'000;
};

int cmd_render(const Common& c, const RenderOptions& o, std::ostream& out) {
  require_range(o.depth >= 0, "render: --depth must be non-negative");
  require_range(o.size > 0, "render: --size must be positive");
  const Ifs ifs = load_ifs(c.ifs);
  RenderSpec spec;
  spec.depth = o.depth;
  spec.canvas_size = o.size;
  spec.flip_y = !o.no_flip;
  spec.cap = o.cap;
  for (const auto& e : o.ells) spec.overlays.emplace_back(SegmentOverlay{ell_segment(parse_rational(e, "--ell"))});
  if (!o.preset.empty()) {
    if (o.preset != "lemma4") throw InputError("render: unknown preset '" + o.preset + "'");
    const ProbePreset p = lemma4_preset();
    const StripPreset sp;
    if (const auto found = find_vacant_strip(ifs, sp.low, sp.high, 4)) {
      spec.overlays.emplace_back(StripOverlay{found->strip});
    }
    for (const auto& x : sp.bundles) spec.overlays.emplace_back(SegmentOverlay{ell_segment(x)});
    spec.overlays.emplace_back(SegmentOverlay{apply(word_map(ifs, p.placement), ell_segment(p.x))});
    spec.overlays.emplace_back(WindowOverlay{RatRect::around(p.center, p.radius)});
    spec.overlays.emplace_back(PointsOverlay{{p.center}});
  }
  const std::string svg = render_svg(ifs, spec);
  if (o.out == "-") {
    out << svg;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw InputError("render: cannot write " + o.out);
    file << svg;
  }
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification and rendering for rectangle-based self-similar sets"};
  app.name("ifscheck");
  app.require_subcommand(1);

  Common common;
  AddressOptions lemma1;
  StreamOptions lemma2, lemma3;
  StripOptions strip;
  ComponentOptions components;
  ProbeOptions probe;
  RenderOptions render;

  auto* osc_cmd = app.add_subcommand("verify-osc", "Open set condition by rectangle images");
  add_ifs_option(osc_cmd, common);
  add_output_flags(osc_cmd, common);

  auto* l1_cmd = app.add_subcommand("verify-lemma1", "Digit addressing of points (x + y/4, y)");
  l1_cmd->add_option("--random", lemma1.random, "Random stream pairs")->capture_default_str();
  l1_cmd->add_option("--seed", lemma1.seed)->capture_default_str();
  l1_cmd->add_option("--max-depth", lemma1.max_depth)->capture_default_str();
  add_output_flags(l1_cmd, common);

  auto* l2_cmd = app.add_subcommand("verify-lemma2", "Shared endpoints of the E and L segments");
  l2_cmd->add_option("--z", lemma2.z, "C2 stream \"pre|period\" (repeatable)");
  l2_cmd->add_option("--random", lemma2.random, "Random C2 streams")->capture_default_str();
  l2_cmd->add_option("--seed", lemma2.seed)->capture_default_str();
  add_output_flags(l2_cmd, common);

  auto* l3_cmd = app.add_subcommand("verify-lemma3", "Chain decomposition of the slope-4 line through (0, z)");
  lemma3.random = 0;
  l3_cmd->add_option("--z", lemma3.z, "C2 stream \"pre|period\" (repeatable)");
  l3_cmd->add_option("--depth", lemma3.depth, "Chain length N")->capture_default_str();
  l3_cmd->add_option("--random", lemma3.random, "Random C2 streams")->capture_default_str();
  l3_cmd->add_option("--seed", lemma3.seed)->capture_default_str();
  add_output_flags(l3_cmd, common);

  auto* strip_cmd = app.add_subcommand("strip", "Search for a vacant slope-4 strip between hints");
  add_ifs_option(strip_cmd, common);
  strip_cmd->add_option("--low", strip.low, "Lower hint for x - y/4");
  strip_cmd->add_option("--high", strip.high, "Upper hint for x - y/4");
  strip_cmd->add_option("--max-depth", strip.max_depth)->capture_default_str();
  strip_cmd->add_option("--cascade", strip.cascade, "Extra depth for the confirming vacancy check")
      ->capture_default_str();
  strip_cmd->add_option("--bundle", strip.bundles, "x of a segment l_x whose component label is compared");
  strip_cmd->add_option("--cap", strip.cap, "Cell cap for the label graph")->capture_default_str();
  strip_cmd->add_option("--preset", strip.preset, "paper");
  add_output_flags(strip_cmd, common);

  auto* comp_cmd = app.add_subcommand("components", "Component counts of the cell-contact graph");
  add_ifs_option(comp_cmd, common);
  comp_cmd->add_option("--min-depth", components.min_depth)->capture_default_str();
  comp_cmd->add_option("--max-depth", components.max_depth)->capture_default_str();
  comp_cmd->add_option("--edges", components.edges, "Write the max-depth edge list to this file");
  comp_cmd->add_option("--cap", components.cap)->capture_default_str();
  add_output_flags(comp_cmd, common);

  auto* probe_cmd = app.add_subcommand("probe", "Local components of the anchored component in a window");
  add_ifs_option(probe_cmd, common);
  probe_cmd->add_option("--x", probe.x);
  probe_cmd->add_option("--y", probe.y);
  probe_cmd->add_option("--radius", probe.radius, "L-infinity radius");
  probe_cmd->add_option("--depth", probe.depth);
  probe_cmd->add_option("--anchor", probe.anchor, "Word w; the anchor segment is phi_w of the right side");
  probe_cmd->add_option("--min-components", probe.min_components)->capture_default_str();
  probe_cmd->add_flag("--check-next", probe.check_next, "Also require a non-decreasing count at depth + 1");
  probe_cmd->add_option("--preset", probe.preset, "lemma4");
  add_output_flags(probe_cmd, common);

  auto* render_cmd = app.add_subcommand("render", "SVG of the level-n cells");
  add_ifs_option(render_cmd, common);
  render_cmd->add_option("--depth", render.depth)->capture_default_str();
  render_cmd->add_option("--size", render.size, "Canvas size in pixels")->capture_default_str();
  render_cmd->add_option("-o,--out", render.out, "Output file, - for stdout")->capture_default_str();
  render_cmd->add_flag("--no-flip", render.no_flip, "Keep the SVG y-axis pointing down");
  render_cmd->add_option("--ell", render.ells, "Overlay l_x for this x (repeatable)");
  render_cmd->add_option("--cap", render.cap)->capture_default_str();
  render_cmd->add_option("--preset", render.preset, "lemma4");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (osc_cmd->parsed()) return cmd_verify_osc(common, out);
    if (l1_cmd->parsed()) return cmd_verify_lemma1(common, lemma1, out);
    if (l2_cmd->parsed()) return cmd_verify_lemma2(common, lemma2, out);
    if (l3_cmd->parsed()) return cmd_verify_lemma3(common, lemma3, out);
    if (strip_cmd->parsed()) return cmd_strip(common, strip, out);
    if (comp_cmd->parsed()) return cmd_components(common, components, out);
    if (probe_cmd->parsed()) return cmd_probe(common, probe, out);
    if (render_cmd->parsed()) return cmd_render(common, render, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PremiseError& e) {
    err << "premise failed: " << e.what() << "\n";
    return kExitFail;
  } catch (const ConsistencyError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace ifscheck
