#include "xxl/commands.hpp"

#include "xxl/dihedral.hpp"
#include "xxl/export.hpp"
#include "xxl/geometry.hpp"
#include "xxl/polygon_complex.hpp"
#include "xxl/rankone.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace xxl {

namespace {

Json config_json(const RunConfig& config) {
  Json j;
  j["alpha"] = config.alpha;
  j["precision_bits"] = config.precision;
  j["mode"] = to_string(config.mode);
  j["radius"] = config.radius;
  return j;
}

Alpha config_alpha(const RunConfig& config) {
  if (config.precision < 2 || config.precision > max_precision) {
    throw InputError("precision must lie in [2, " + std::to_string(max_precision) + "] bits");
  }
  return Alpha::parse(config.alpha, static_cast<mpfr_prec_t>(config.precision));
}

DihedralParams xxl_params(int m) {
  if (m < 5) throw NotApplicable("label " + std::to_string(m) + " < 5 is outside the XXL range");
  return DihedralParams::make(m);
}

/// Runs a command body and converts exceptions into report verdicts.
CommandResult run(std::string_view command, std::string_view input, const RunConfig& config,
                  const std::function<int(Json&)>& body) {
  CommandResult result;
  result.report = report_header(command, input);
  result.report["config"] = config_json(config);
  auto fail = [&](std::string_view verdict, const std::exception& e, int code) {
    result.report["verdict"] = verdict;
    result.report["error"] = e.what();
    result.exit_code = code;
  };
  try {
    result.exit_code = body(result.report);
  } catch (const NotApplicable& e) {
    fail("not-applicable", e, exit_not_applicable);
  } catch (const InputError& e) {
    fail("input-error", e, exit_input_error);
  } catch (const std::invalid_argument& e) {
    fail("input-error", e, exit_input_error);
  } catch (const CertificationError& e) {
    fail("refuted", e, exit_refuted);
  } catch (const PrecisionExhausted& e) {
    fail("undecided", e, exit_refuted);
  } catch (const std::runtime_error& e) {
    fail("failed", e, exit_refuted);
  }
  result.report["exit_code"] = result.exit_code;
  return result;
}

Json graph_json(const LabeledGraph& g) {
  Json j;
  j["vertices"] = g.vertices();
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"s", g.vertices()[e.s]}, {"t", g.vertices()[e.t]}, {"label", e.label}});
  }
  j["edges"] = edges;
  return j;
}

Json classification_json(const ArtinType& type) {
  return {{"class", to_string(type.kind)}, {"rank", type.rank}, {"edgeless", type.edgeless}};
}

Json piece_table_json(const PieceAngleTable& table) {
  Json j;
  j["m"] = table.params.m;
  j["alpha"] = table.alpha.text();
  j["interior"] = angle_json(table.interior);
  j["same_sign"] = {{"angle", "∠(a⁺,b⁺) = ∠(a⁻,b⁻)"}, {"value", certified_angle_json(table.same())}};
  j["mixed_sign"] = {{"angle", "∠(a⁺,b⁻) = ∠(a⁻,b⁺)"}, {"value", certified_angle_json(table.mixed())}};
  j["antipodal"] = angle_json(table.antipodal);
  Json checks = Json::array();
  for (const auto& c : table.checks) {
    checks.push_back({{"claim", c.angle + " > " + c.bound.fraction()}, {"holds", c.holds}});
  }
  j["checks"] = checks;
  j["all_hold"] = table.all_hold();
  return j;
}

std::string verdict_text(Verdict v) { return std::string(to_string(v)); }

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::certified:
      return exit_certified;
    case Verdict::refuted:
      return exit_refuted;
    case Verdict::not_applicable:
      return exit_not_applicable;
  }
  return exit_refuted;
}

}  // namespace

CommandResult cmd_check(std::string_view graph_text, const RunConfig& config) {
  return run("check", graph_text, config, [&](Json& report) {
    const auto g = parse_graph(graph_text);
    report["graph"] = graph_json(g);
    const auto type = classify(g);
    report["classification"] = classification_json(type);
    const auto alpha = config_alpha(config);

    const auto gluing = check_gluing(g);
    Json glue;
    glue["pieces"] = gluing.pieces;
    Json circles = Json::array();
    for (const auto& [generator, pieces] : gluing.circles) circles.push_back({{"generator", generator}, {"pieces", pieces}});
    glue["circles"] = circles;
    glue["vertices"] = gluing.vertices;
    glue["euler_characteristic"] = gluing.euler_characteristic;
    glue["wedge_of_circles"] = gluing.wedge_of_circles;
    report["gluing"] = glue;

    if (config.mode == WeightMode::computed) {
      std::set<std::int64_t> labels;
      for (const auto& e : g.edges()) labels.insert(e.label);
      Json tables = Json::array();
      for (const auto label : labels) {
        tables.push_back(piece_table_json(evaluate_piece_angle_table(DihedralParams::make(static_cast<int>(label)), alpha)));
      }
      report["angle_tables"] = tables;
    }

    const auto pg = piece_graph(g, config.mode, alpha);
    const auto cert = systole_certificate(pg);
    Json link;
    link["mode"] = to_string(pg.mode);
    link["nodes"] = pg.nodes;
    link["edge_count"] = pg.edges.size();
    link["minimum"] = angle_json(cert.total);
    link["threshold"] = angle_json(RationalAngle::pi_times(2));
    Json cycle = Json::array();
    for (const auto& step : cert.cycle) {
      const auto& e = pg.edges[step.edge];
      const std::size_t to = e.from == step.node ? e.to : e.from;
      cycle.push_back({{"from", pg.nodes[step.node]},
                       {"to", pg.nodes[to]},
                       {"piece", pg.pieces[step.piece]},
                       {"kind", to_string(e.kind)},
                       {"weight", angle_json(step.weight)}});
    }
    link["witness_cycle"] = cycle;
    link["case_tags"] = cert.case_tags;
    if (!cert.note.empty()) link["note"] = cert.note;
    report["link"] = link;
    report["verdict"] = verdict_text(cert.verdict);
    return verdict_code(cert.verdict);
  });
}

CommandResult cmd_rank1(std::string_view graph_text, const RunConfig& config,
                        const std::optional<WitnessOverride>& override_witness) {
  return run("rank1", graph_text, config, [&](Json& report) {
    const auto g = parse_graph(graph_text);
    report["graph"] = graph_json(g);
    report["classification"] = classification_json(classify(g));
    const auto alpha = config_alpha(config);
    if (!classify(g).is_xxl()) throw NotApplicable("graph is not of XXL type (some label < 5)");

    RankOneWitness w;
    if (override_witness) {
      if (g.rank() <= 2) w = choose_rank1_witness(g);
      w = rank1_witness_for(g, override_witness->a, override_witness->b, override_witness->c);
    } else {
      w = choose_rank1_witness(g);
    }
    const auto cert = certify_rank1(g, w, config.mode, alpha);

    Json witness;
    witness["description"] = w.describe(g);
    if (w.kind == RankOneWitness::Kind::loop) {
      witness["edge"] = {g.vertices()[w.a], g.vertices()[w.b]};
      witness["label"] = w.label;
      witness["parity"] = w.parity == Parity::odd ? "odd" : "even";
      witness["third"] = g.vertices()[w.c];
      witness["loop"] = "ℓ = ℓ_ab · X_" + g.vertices()[w.c];
    }
    report["witness"] = witness;

    if (cert.table) {
      const auto& t = *cert.table;
      Json table;
      table["mode"] = to_string(t.mode);
      table["x_offset_in_P"] = t.x_offset;
      table["x_prime_offset_in_P_prime"] = t.x_prime_offset;
      table["meets_generator_loops_only_at_base"] = t.meets_generator_loops_only_at_base;
      if (t.evaluated) table["across_exceeds_nine_tenths_pi"] = t.across_exceeds_nine_tenths;
      Json entries = Json::array();
      for (const auto& e : t.entries) {
        Json entry;
        entry["angle"] = e.name();
        entry["bound"] = angle_json(e.bound);
        entry["weight"] = angle_json(e.weight);
        if (e.horizontal) entry["horizontal"] = angle_json(*e.horizontal);
        if (e.value) entry["value"] = certified_angle_json(*e.value);
        if (t.evaluated) entry["exceeds_bound"] = e.holds;
        entries.push_back(entry);
      }
      table["entries"] = entries;
      table["turn"] = angle_json(t.turn);
      table["all_bounds_hold"] = t.all_hold();
      report["loop_table"] = table;
    }

    Json passings = Json::array();
    for (const auto& p : cert.passings) {
      Json passing;
      passing["from"] = p.from;
      passing["to"] = p.to;
      passing["distance"] = angle_json(p.distance);
      passing["exceeds_pi"] = p.distance.exceeds(RationalAngle::pi_times(1));
      Json sums = Json::array();
      for (const auto& s : p.separators) {
        Json sum;
        sum["separator"] = s.separator;
        sum["to_separator"] = angle_json(s.to_separator);
        sum["onwards"] = angle_json(s.onwards);
        sum["total"] = angle_json(s.total);
        if (!s.note.empty()) sum["note"] = s.note;
        sums.push_back(sum);
      }
      passing["separator_sums"] = sums;
      passings.push_back(passing);
    }
    report["passings"] = passings;
    report["notes"] = cert.notes;
    report["verdict"] = verdict_text(cert.verdict);
    return verdict_code(cert.verdict);
  });
}

CommandResult cmd_dihedral(int m, const RunConfig& config) {
  const std::string input = "m=" + std::to_string(m);
  return run("dihedral", input, config, [&](Json& report) {
    const auto params = xxl_params(m);
    const auto alpha = config_alpha(config);
    if (config.radius < 2) throw InputError("dihedral needs ball radius >= 2");
    report["m"] = m;
    report["parity"] = params.parity == Parity::odd ? "odd" : "even";

    const auto sub = presentation_for(params);
    Json pres;
    pres["relation"] = format_word(alternating_ab(Symbol::a, m)) + " = " + format_word(alternating_ab(Symbol::b, m));
    pres["quotient_alphabet"] = to_string(sub.quotient);
    pres["a"] = format_word(sub.image_of_a);
    pres["b"] = format_word(sub.image_of_b);
    pres["t"] = format_word(sub.image_of_t);
    pres[params.parity == Parity::odd ? "u" : "a_from_quotient"] = format_word(sub.image_of_second);
    if (!sub.hnn_description.empty()) pres["hnn"] = sub.hnn_description;
    pres["center_generator"] = format_word(center_generator(params));
    report["presentation"] = pres;

    const auto ball = TreeOfPolygons::build(params, config.radius);
    const auto q = quotient_complex(ball);
    Json quotient;
    quotient["ball_polygons"] = ball.polygons().size();
    quotient["ball_vertices"] = ball.vertices().size();
    quotient["polygon_adjacency_is_tree"] = ball.adjacency_is_tree();
    quotient["vertex_orbits"] = q.vertex_orbits;
    quotient["expected_vertex_orbits"] = m;
    quotient["horizontal_edge_orbits"] = q.horizontal_edge_orbits;
    quotient["polygon_orbits"] = q.polygon_orbits;
    quotient["cells"] = {{"vertices", q.cells.vertices},
                         {"edges", q.cells.edges},
                         {"faces", q.cells.faces},
                         {"solids", q.cells.solids},
                         {"euler_characteristic", q.cells.euler_characteristic()}};
    quotient["loops_meet_only_at_base"] = q.loops_meet_only_at_base;
    quotient["free_action_words"] = q.free_action_words;
    quotient["free_action_fixed_point_pairs"] = q.free_action_fixing;
    quotient["free_action_fixed_points_only_by_trivial_words"] = true;
    report["quotient"] = quotient;

    const auto axes = verify_axes(ball);
    Json ax;
    ax["a_side_in_P"] = {axes.a.side_in_p.first, axes.a.side_in_p.second};
    ax["b_side_in_P"] = {axes.b.side_in_p.first, axes.b.side_in_p.second};
    ax["consecutive_at_e"] = axes.consecutive_at_e;
    ax["rotation_element"] = axes.rotation_element;
    ax["rotation_steps"] = axes.rotation_steps;
    if (params.parity == Parity::odd) {
      const auto v = fixed_vertex_of_u(ball);
      ax["fixed_vertex_of_u"] = v == ball.base_vertex() ? "e" : format_normal_form(ball.vertices()[v].key);
    } else {
      const auto orbits = even_orientation_orbits(ball);
      ax["orientation_orbits"] = orbits.orbits;
      ax["orientation_alternates"] = orbits.alternating;
    }
    report["axes"] = ax;

    const auto table = evaluate_piece_angle_table(params, alpha);
    report["angle_table"] = piece_table_json(table);

    const bool ok = q.vertex_orbits == static_cast<std::size_t>(m) &&
                    axes.consecutive_at_e && ball.adjacency_is_tree() && table.all_hold();
    report["verdict"] = ok ? "certified" : "refuted";
    return ok ? exit_certified : exit_refuted;
  });
}

CommandResult cmd_word(int m, std::string_view word, const RunConfig& config) {
  const std::string input = "m=" + std::to_string(m) + "\n" + std::string(word);
  return run("word", input, config, [&](Json& report) {
    const auto params = xxl_params(m);
    const auto w = parse_word(word);
    if (w.alphabet() != Alphabet::ab && w.alphabet() != params.quotient_alphabet()) {
      throw InputError("letters of alphabet " + std::string(to_string(w.alphabet())) + " do not fit m = " +
                       std::to_string(m));
    }
    const Word ab = w.alphabet() == Alphabet::ab ? w : rewrite(w, params, Alphabet::ab);
    const auto record = act_on_cover(ab, params);
    const bool trivial = is_trivial(ab, params);
    report["m"] = m;
    report["word"] = format_word(w);
    report["alphabet"] = to_string(w.alphabet());
    if (w.alphabet() != Alphabet::ab) report["over_ab"] = format_word(ab);
    report["quotient_image"] = record.image.empty() ? "1" : format_normal_form(record.image);
    report["translation"] = record.translation;
    report["trivial"] = trivial;
    report["verdict"] = trivial ? "trivial" : "nontrivial";
    return trivial ? exit_certified : exit_refuted;
  });
}

ExportResult cmd_export(std::string_view what, std::string_view format, std::string_view graph_text, int m,
                        const RunConfig& config) {
  ExportResult result;
  try {
    if (format != "dot" && format != "svg") throw InputError("export format must be dot or svg");
    if (what == "tree-ball") {
      const auto ball = TreeOfPolygons::build(xxl_params(m), config.radius);
      result.text = format == "svg" ? tree_ball_svg(ball) : tree_ball_dot(ball);
    } else if (what == "piece-graph") {
      if (format != "dot") throw InputError("piece-graph exports only to dot");
      const auto g = parse_graph(graph_text);
      const auto pg = piece_graph(g, config.mode, config_alpha(config));
      result.text = piece_graph_dot(pg);
    } else if (what == "link") {
      if (format != "dot") throw InputError("link exports only to dot");
      const auto ball = TreeOfPolygons::build(xxl_params(m), std::max(1, config.radius));
      result.text = link_dot(vertex_link(ball, ball.base_vertex()));
    } else {
      throw InputError("unknown export '" + std::string(what) + "'; expected tree-ball, piece-graph or link");
    }
  } catch (const NotApplicable& e) {
    result.exit_code = exit_not_applicable;
    result.error = e.what();
  } catch (const InputError& e) {
    result.exit_code = exit_input_error;
    result.error = e.what();
  } catch (const std::invalid_argument& e) {
    result.exit_code = exit_input_error;
    result.error = e.what();
  } catch (const CertificationError& e) {
    result.exit_code = exit_refuted;
    result.error = e.what();
  }
  return result;
}

std::string format_report(const Json& report, std::string_view format) {
  if (format == "human") return render_human(report);
  return report.dump(2) + "\n";
}

}  // namespace xxl
