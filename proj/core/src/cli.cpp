#include "cartograph/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <utility>

#include <CLI11.hpp>

#include "cartograph/compare.hpp"
#include "cartograph/error.hpp"
#include "cartograph/graph.hpp"
#include "cartograph/incidence.hpp"
#include "cartograph/io.hpp"
#include "cartograph/layout.hpp"
#include "cartograph/ordering.hpp"
#include "cartograph/render.hpp"

namespace cartograph {

namespace {

GraphFormat format_of(const std::string& path) {
  return path.ends_with(".json") ? GraphFormat::Json : GraphFormat::EdgeList;
}

// Prefix file-level diagnostics with the file they came from.
template <typename Fn>
auto with_file_context(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

Graph load_graph(const std::string& path) {
  Graph g = with_file_context(
      path, [&] { return parse_graph(read_file(path), format_of(path)); });
  if (g.name().empty()) {
    g.set_name(std::filesystem::path(path).stem().string());
  }
  return g;
}

Config load_config(const std::string& explicit_path) {
  std::string path = explicit_path;
  if (path.empty()) {
    if (const char* env = std::getenv("CARTOGRAPH_CONFIG")) path = env;
  }
  Config config;
  if (!path.empty()) {
    with_file_context(path, [&] { apply_config(config, read_file(path)); });
  }
  return config;
}

struct OrderChoice {
  OrderingStrategy strategy = OrderingStrategy::Canonical;
  std::string custom_path;
};

OrderChoice parse_order_text(const std::string& text) {
  if (text == "canonical") return {OrderingStrategy::Canonical, ""};
  if (text == "outdeg") return {OrderingStrategy::OutDegree, ""};
  if (text == "indeg") return {OrderingStrategy::InDegree, ""};
  if (text == "weight") return {OrderingStrategy::Weight, ""};
  if (text.starts_with("custom=") && text.size() > 7) {
    return {OrderingStrategy::Custom, text.substr(7)};
  }
  throw Error(ErrorKind::InvalidOption,
              "unknown ordering '" + text +
                  "' (expected canonical | outdeg | indeg | weight | "
                  "custom=<file>)");
}

EdgeOrdering make_ordering(const Graph& g, const Config& config,
                           const std::string& custom_path) {
  switch (config.strategy) {
    case OrderingStrategy::Canonical:
      return order_canonical(g, config.show_absent, config.group_gaps);
    case OrderingStrategy::OutDegree:
      return order_by_degree(g, DegreeEndpoint::Origin);
    case OrderingStrategy::InDegree:
      return order_by_degree(g, DegreeEndpoint::Destination);
    case OrderingStrategy::Weight:
      return order_by_weight(g, config.weight_direction);
    case OrderingStrategy::Custom: {
      const std::vector<OrderingSpecItem> spec = with_file_context(
          custom_path,
          [&] { return parse_ordering_spec(read_file(custom_path)); });
      return order_custom(g, spec);
    }
  }
  return order_canonical(g, config.show_absent, config.group_gaps);
}

void append_fixed4(std::string& out, double value) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 4);
  std::string_view text(buf, static_cast<std::size_t>(res.ptr - buf));
  if (text == "-0.0000") text = "0.0000";
  out.append(text);
}

// Resolution token: a positive number with an optional mm / cm / m suffix
// (no suffix means mm). Returns (value, units per meter).
std::pair<double, double> parse_resolution(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || !(value > 0.0)) {
    throw Error(ErrorKind::InvalidOption,
                "malformed resolution '" + text +
                    "' (expected e.g. 0.5mm, 1cm, 0.001m)");
  }
  const std::string_view suffix(res.ptr,
                                static_cast<std::size_t>(last - res.ptr));
  double per_meter = 1000.0;
  if (suffix == "mm" || suffix.empty()) per_meter = 1000.0;
  else if (suffix == "cm") per_meter = 100.0;
  else if (suffix == "m") per_meter = 1.0;
  else {
    throw Error(ErrorKind::InvalidOption,
                "unknown resolution unit '" + std::string(suffix) +
                    "' (expected mm, cm, or m)");
  }
  return {value, per_meter};
}

struct PendingFile {
  std::string path;
  std::string content;
};

int run_draw(const std::string& graph_path, const std::string& order_text,
             bool flag_complement, bool flag_show_absent, bool flag_group_gaps,
             const std::string& vorder_path, const std::string& config_path,
             const std::string& out_path, const std::string& layout_out_path,
             std::ostream& out) {
  Config config = load_config(config_path);
  if (flag_show_absent) config.show_absent = true;
  if (flag_group_gaps) config.group_gaps = true;
  if (flag_complement) config.complement = true;
  std::string custom_path;
  if (!order_text.empty()) {
    const OrderChoice choice = parse_order_text(order_text);
    config.strategy = choice.strategy;
    custom_path = choice.custom_path;
  }

  Graph g = load_graph(graph_path);
  if (config.complement) {
    std::string name = g.name();
    g = complement(g);
    g.set_name(name.empty() ? "complement" : name + " complement");
  }
  if (!vorder_path.empty()) {
    const VertexOrder order = with_file_context(
        vorder_path, [&] { return parse_vertex_order(read_file(vorder_path)); });
    g = permute_vertices(g, order);
  }

  const EdgeOrdering ordering = make_ordering(g, config, custom_path);
  const CartographicLayout layout =
      compute_layout(g, ordering, identity_order(g), config.layout);

  const bool want_stdout = out_path.empty() && layout_out_path.empty();
  std::vector<PendingFile> files;
  std::string svg;
  if (!out_path.empty() || want_stdout) {
    svg = render_svg(layout, config.style);
  }
  if (!out_path.empty()) files.push_back({out_path, svg});
  if (!layout_out_path.empty()) {
    files.push_back({layout_out_path, export_layout(layout)});
  }
  for (const PendingFile& file : files) {
    write_file(file.path, file.content);
  }
  if (want_stdout) out << svg;
  return 0;
}

int run_compare(const std::string& a_path, const std::string& b_path,
                const std::string& config_path, const std::string& out_path,
                const std::string& layout_out_path,
                const std::vector<std::string>& emit_specs,
                std::ostream& out) {
  Config config = load_config(config_path);
  const Graph a = load_graph(a_path);
  const Graph b = load_graph(b_path);
  const ComparisonResult result = compare(a, b);

  std::vector<PendingFile> files;
  for (const std::string& spec : emit_specs) {
    const std::size_t eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
      throw Error(ErrorKind::InvalidOption,
                  "malformed --emit '" + spec + "' (expected op=<file>)");
    }
    const std::string op_name = spec.substr(0, eq);
    const std::string path = spec.substr(eq + 1);
    BooleanOp op;
    if (op_name == "union") op = BooleanOp::Union;
    else if (op_name == "intersection") op = BooleanOp::Intersection;
    else if (op_name == "symdiff") op = BooleanOp::SymmetricDifference;
    else if (op_name == "diff-ab") op = BooleanOp::DifferenceAB;
    else if (op_name == "diff-ba") op = BooleanOp::DifferenceBA;
    else {
      throw Error(ErrorKind::InvalidOption,
                  "unknown --emit operation '" + op_name +
                      "' (expected union | intersection | symdiff | diff-ab "
                      "| diff-ba)");
    }
    const Graph derived = derive_boolean(result, op);
    files.push_back({path, format_of(path) == GraphFormat::Json
                               ? emit_graph_json(derived)
                               : emit_edge_list(derived)});
  }

  const CartographicLayout layout =
      comparison_layout(result, result.union_vertices, config.layout);

  // Comparison ink classes and weight styling are mutually exclusive.
  RenderStyle style = config.style;
  style.weight_mode = WeightMode::None;

  const bool want_stdout =
      out_path.empty() && layout_out_path.empty() && emit_specs.empty();
  std::string svg;
  if (!out_path.empty() || want_stdout) {
    svg = render_svg(layout, style);
  }
  if (!out_path.empty()) files.push_back({out_path, svg});
  if (!layout_out_path.empty()) {
    files.push_back({layout_out_path, export_layout(layout)});
  }
  for (const PendingFile& file : files) {
    write_file(file.path, file.content);
  }
  if (want_stdout) out << svg;
  return 0;
}

int run_stats(const std::string& graph_path, std::ostream& out) {
  const Graph g = load_graph(graph_path);
  const std::uint64_t slots =
      g.vertex_count() == 0 ? 0 : edge_slot_count(g.vertex_count(), g.kind());
  std::string text;
  text += "vertices\t" + std::to_string(g.vertex_count()) + '\n';
  text += "edges\t" + std::to_string(g.edge_count()) + '\n';
  text += "slots\t" + std::to_string(slots) + '\n';
  text += std::string("density\t") + to_string(classify_density(g)) + '\n';
  const std::vector<VertexDegrees> deg = degrees(g);
  for (std::uint32_t p = 0; p < g.vertex_count(); ++p) {
    text += "degree\t" + g.vertex_at(p).id + '\t';
    if (g.kind().directed) {
      text += std::to_string(deg[p].out) + '\t' + std::to_string(deg[p].in);
    } else {
      text += std::to_string(deg[p].out);
    }
    text += '\n';
  }
  out << text;
  return 0;
}

int run_estimate(std::uint64_t n_vertices, std::uint64_t n_columns,
                 const std::string& resolution_text, std::ostream& out) {
  const auto [value, per_meter] = parse_resolution(resolution_text);
  const auto [height, width] = estimate_canvas(n_vertices, n_columns, value);
  std::string text;
  append_fixed4(text, height / per_meter);
  text += " m\t";
  append_fixed4(text, width / per_meter);
  text += " m\n";
  out << text;
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Draw graphs the way maps are drawn: vertices as horizontal "
               "latitudes, edges as vertical longitudes.",
               "cartograph"};
  app.require_subcommand(1);

  std::string draw_graph, draw_order, draw_vorder, draw_config, draw_out,
      draw_layout_out;
  bool draw_complement = false, draw_show_absent = false,
       draw_group_gaps = false;
  CLI::App* draw = app.add_subcommand("draw", "Draw one graph as SVG");
  draw->add_option("graph", draw_graph, "Graph file (.json or edge list)")
      ->required();
  draw->add_option("--order", draw_order,
                   "Edge ordering: canonical | outdeg | indeg | weight | "
                   "custom=<file>");
  draw->add_flag("--complement", draw_complement,
                 "Draw the complement instead");
  draw->add_flag("--show-absent", draw_show_absent,
                 "Leave a blank column for every absent edge (canonical "
                 "order only)");
  draw->add_flag("--group-gaps", draw_group_gaps,
                 "Separator column between adjacency rows (canonical order "
                 "only)");
  draw->add_option("--vertex-order", draw_vorder,
                   "File with one vertex id per line");
  draw->add_option("--config", draw_config, "key = value config file");
  draw->add_option("--out", draw_out, "SVG output path");
  draw->add_option("--layout-out", draw_layout_out,
                   "Layout export path (tab-separated)");

  std::string cmp_a, cmp_b, cmp_config, cmp_out, cmp_layout_out;
  std::vector<std::string> cmp_emits;
  CLI::App* cmp = app.add_subcommand(
      "compare", "Draw two graphs as one comparison figure");
  cmp->add_option("graphA", cmp_a, "First graph file")->required();
  cmp->add_option("graphB", cmp_b, "Second graph file")->required();
  cmp->add_option("--config", cmp_config, "key = value config file");
  cmp->add_option("--out", cmp_out, "SVG output path");
  cmp->add_option("--layout-out", cmp_layout_out,
                  "Layout export path (tab-separated)");
  cmp->add_option("--emit", cmp_emits,
                  "Write a Boolean-operation graph: union | intersection | "
                  "symdiff | diff-ab | diff-ba =<file>; repeatable");

  std::string stats_graph;
  CLI::App* stats = app.add_subcommand(
      "stats", "Print vertex/edge/slot counts, density class, and degrees");
  stats->add_option("graph", stats_graph, "Graph file")->required();

  std::uint64_t est_vertices = 0, est_columns = 0;
  std::string est_resolution;
  CLI::App* estimate = app.add_subcommand(
      "estimate", "Physical canvas size at a given band resolution");
  estimate->add_option("vertices", est_vertices, "Latitude count")->required();
  estimate->add_option("columns", est_columns, "Column count")->required();
  estimate
      ->add_option("resolution", est_resolution,
                   "Length per band, e.g. 0.5mm, 1cm, 0.001m")
      ->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("cartograph");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (draw->parsed()) {
      return run_draw(draw_graph, draw_order, draw_complement,
                      draw_show_absent, draw_group_gaps, draw_vorder,
                      draw_config, draw_out, draw_layout_out, out);
    }
    if (cmp->parsed()) {
      return run_compare(cmp_a, cmp_b, cmp_config, cmp_out, cmp_layout_out,
                         cmp_emits, out);
    }
    if (stats->parsed()) return run_stats(stats_graph, out);
    if (estimate->parsed()) {
      return run_estimate(est_vertices, est_columns, est_resolution, out);
    }
    err << "error: no subcommand given\n";
    return 1;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cartograph
