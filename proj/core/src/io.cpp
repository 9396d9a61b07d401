#include "cartograph/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cartograph/error.hpp"

namespace cartograph {

namespace {

struct Token {
  std::string_view text;
  std::size_t column = 0;  // 1-based
};

// Whitespace-separated tokens; a token starting with '#' begins a comment
// that runs to the end of the line.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

// Calls fn(line_number, line) for each line; line numbers are 1-based.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t number = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t end = text.find('\n', begin);
    const std::string_view line =
        end == std::string_view::npos ? text.substr(begin)
                                      : text.substr(begin, end - begin);
    ++number;
    if (end != std::string_view::npos || !line.empty()) fn(number, line);
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
}

[[noreturn]] void parse_fail(std::size_t line, std::size_t column,
                             const std::string& message) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) +
                                         ", column " + std::to_string(column) +
                                         ": " + message);
}

double parse_double_token(const Token& token, std::size_t line,
                          const char* what) {
  double value = 0.0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last) {
    parse_fail(line, token.column,
               std::string("malformed ") + what + " '" +
                   std::string(token.text) + "'");
  }
  return value;
}

// Rethrow a construction error with the input location prepended.
[[noreturn]] void located_fail(const Error& e, std::size_t line) {
  throw Error(e.kind(), "line " + std::to_string(line) + ": " + e.what());
}

void ensure_vertex(Graph& g, std::string_view id, std::size_t line) {
  if (g.has_vertex(id)) return;
  try {
    g.add_vertex(id);
  } catch (const Error& e) {
    located_fail(e, line);
  }
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  GraphKind kind;
  std::optional<Graph> graph;
  auto started = [&]() -> Graph& {
    if (!graph.has_value()) graph.emplace(kind);
    return *graph;
  };

  for_each_line(text, [&](std::size_t line, std::string_view raw) {
    const std::vector<Token> tokens = tokenize(raw);
    if (tokens.empty()) return;

    if (tokens.size() == 1) {
      const std::string_view word = tokens[0].text;
      if (word == "directed" || word == "loops") {
        // Header directives; recognized only before graph content, and
        // reserved afterwards so a stray late directive cannot silently
        // become a vertex.
        if (graph.has_value()) {
          parse_fail(line, tokens[0].column,
                     "'" + std::string(word) +
                         "' directive must precede graph content");
        }
        if (word == "directed") kind.directed = true;
        else kind.loops_allowed = true;
        return;
      }
      // Bare vertex declaration.
      Graph& g = started();
      try {
        g.add_vertex(word);
      } catch (const Error& e) {
        located_fail(e, line);
      }
      return;
    }

    if (tokens.size() != 3 && tokens.size() != 4) {
      parse_fail(line, tokens[0].column,
                 "expected 'u -- v [weight]', 'u -> v [weight]', or a bare "
                 "vertex id");
    }
    const std::string_view arrow = tokens[1].text;
    if (arrow != "--" && arrow != "->") {
      parse_fail(line, tokens[1].column,
                 "expected '--' or '->', got '" + std::string(arrow) + "'");
    }
    if ((arrow == "->") != kind.directed) {
      parse_fail(line, tokens[1].column,
                 kind.directed
                     ? "undirected edge in a directed graph"
                     : "directed edge in an undirected graph (missing "
                       "'directed' header?)");
    }
    std::optional<double> weight;
    if (tokens.size() == 4) {
      weight = parse_double_token(tokens[3], line, "weight");
    }
    // The directive words can never name vertices in this format; accepting
    // them here would build a graph emit_edge_list cannot write back.
    for (const Token& endpoint : {tokens[0], tokens[2]}) {
      if (endpoint.text == "directed" || endpoint.text == "loops") {
        parse_fail(line, endpoint.column,
                   "'" + std::string(endpoint.text) +
                       "' is reserved for the header directive and cannot "
                       "name a vertex");
      }
    }
    Graph& g = started();
    ensure_vertex(g, tokens[0].text, line);
    ensure_vertex(g, tokens[2].text, line);
    try {
      g.add_edge(tokens[0].text, tokens[2].text, weight);
    } catch (const Error& e) {
      located_fail(e, line);
    }
  });

  return graph.has_value() ? std::move(*graph) : Graph(kind);
}

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> offset_to_line_column(
    std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void json_fail(const std::string& where,
                            const std::string& message) {
  throw Error(ErrorKind::ParseError, where + ": " + message);
}

std::string json_string_field(const json& object, const char* field,
                              const std::string& where) {
  const auto it = object.find(field);
  if (it == object.end()) {
    json_fail(where, std::string("missing field '") + field + "'");
  }
  if (!it->is_string()) {
    json_fail(where, std::string("field '") + field + "' must be a string");
  }
  return it->get<std::string>();
}

}  // namespace

GraphDocument parse_graph_json_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] =
        offset_to_line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": malformed JSON");
  }
  if (!root.is_object()) {
    json_fail("document", "top-level JSON value must be an object");
  }

  GraphDocument doc;
  if (const auto it = root.find("name"); it != root.end()) {
    if (!it->is_string()) json_fail("document", "field 'name' must be a string");
    doc.name = it->get<std::string>();
  }
  if (const auto it = root.find("directed"); it != root.end()) {
    if (!it->is_boolean()) {
      json_fail("document", "field 'directed' must be a boolean");
    }
    doc.kind.directed = it->get<bool>();
  }
  if (const auto it = root.find("loops"); it != root.end()) {
    if (!it->is_boolean()) {
      json_fail("document", "field 'loops' must be a boolean");
    }
    doc.kind.loops_allowed = it->get<bool>();
  }

  if (const auto it = root.find("vertices"); it != root.end()) {
    if (!it->is_array()) json_fail("document", "field 'vertices' must be an array");
    doc.vertices.reserve(it->size());
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& entry = (*it)[i];
      const std::string where = "vertices[" + std::to_string(i) + "]";
      DocumentVertex vertex;
      if (entry.is_string()) {
        vertex.id = entry.get<std::string>();
      } else if (entry.is_object()) {
        vertex.id = json_string_field(entry, "id", where);
        if (const auto lit = entry.find("label"); lit != entry.end()) {
          if (!lit->is_string()) {
            json_fail(where, "field 'label' must be a string");
          }
          vertex.label = lit->get<std::string>();
        }
      } else {
        json_fail(where, "must be a string or an object");
      }
      doc.vertices.push_back(std::move(vertex));
    }
  }

  if (const auto it = root.find("edges"); it != root.end()) {
    if (!it->is_array()) json_fail("document", "field 'edges' must be an array");
    doc.edges.reserve(it->size());
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& entry = (*it)[i];
      const std::string where = "edges[" + std::to_string(i) + "]";
      if (!entry.is_object()) json_fail(where, "must be an object");
      DocumentEdge edge;
      edge.source = json_string_field(entry, "source", where);
      edge.target = json_string_field(entry, "target", where);
      if (const auto wit = entry.find("weight"); wit != entry.end()) {
        if (!wit->is_number()) {
          json_fail(where, "field 'weight' must be a number");
        }
        edge.weight = wit->get<double>();
      }
      if (const auto lit = entry.find("label"); lit != entry.end()) {
        if (!lit->is_string()) json_fail(where, "field 'label' must be a string");
        edge.label = lit->get<std::string>();
      }
      doc.edges.push_back(std::move(edge));
    }
  }
  return doc;
}

Graph GraphDocument::validate() const {
  Graph g(kind, name);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    try {
      g.add_vertex(vertices[i].id, vertices[i].label);
    } catch (const Error& e) {
      throw Error(e.kind(),
                  "vertices[" + std::to_string(i) + "]: " + e.what());
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    try {
      if (!g.has_vertex(edges[i].source)) g.add_vertex(edges[i].source);
      if (!g.has_vertex(edges[i].target)) g.add_vertex(edges[i].target);
      g.add_edge(edges[i].source, edges[i].target, edges[i].weight,
                 edges[i].label);
    } catch (const Error& e) {
      throw Error(e.kind(), "edges[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return g;
}

Graph parse_graph_json(std::string_view text) {
  return parse_graph_json_document(text).validate();
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Json ? parse_graph_json(text)
                                     : parse_edge_list(text);
}

std::string emit_graph_json(const Graph& g) {
  nlohmann::ordered_json root;
  root["name"] = g.name();
  root["directed"] = g.kind().directed;
  root["loops"] = g.kind().loops_allowed;

  nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
  for (std::uint32_t p = 0; p < g.vertex_count(); ++p) {
    const Vertex& v = g.vertex_at(p);
    if (v.label.has_value()) {
      vertices.push_back({{"id", v.id}, {"label", *v.label}});
    } else {
      vertices.push_back(v.id);
    }
  }
  root["vertices"] = std::move(vertices);

  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    nlohmann::ordered_json edge;
    edge["source"] = g.source_id(i);
    edge["target"] = g.target_id(i);
    if (g.edge(i).weight.has_value()) edge["weight"] = *g.edge(i).weight;
    if (g.edge(i).label.has_value()) edge["label"] = *g.edge(i).label;
    edges.push_back(std::move(edge));
  }
  root["edges"] = std::move(edges);
  return root.dump(2) + "\n";
}

std::string emit_edge_list(const Graph& g) {
  std::string out;
  if (g.kind().directed) out += "directed\n";
  if (g.kind().loops_allowed) out += "loops\n";
  for (std::uint32_t p = 0; p < g.vertex_count(); ++p) {
    const std::string& id = g.vertex_at(p).id;
    if (id == "directed" || id == "loops") {
      throw Error(ErrorKind::IoError,
                  "vertex id '" + id +
                      "' collides with an edge-list header directive; use "
                      "the JSON format for this graph");
    }
    out += id;
    out += '\n';
  }
  const char* arrow = g.kind().directed ? " -> " : " -- ";
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    out += g.source_id(i);
    out += arrow;
    out += g.target_id(i);
    if (g.edge(i).weight.has_value()) {
      out += ' ';
      out += format_weight(*g.edge(i).weight);
    }
    out += '\n';
  }
  return out;
}

std::vector<OrderingSpecItem> parse_ordering_spec(std::string_view text) {
  std::vector<OrderingSpecItem> items;
  for_each_line(text, [&](std::size_t line, std::string_view raw) {
    const std::vector<Token> tokens = tokenize(raw);
    if (tokens.empty()) return;
    if (tokens.size() == 1 && tokens[0].text == "---") {
      items.push_back(OrderingSpecItem{true, false, "", ""});
      return;
    }
    if (tokens.size() != 3) {
      parse_fail(line, tokens[0].column,
                 "expected 'u -- v', 'u -> v', or '---'");
    }
    const std::string_view arrow = tokens[1].text;
    if (arrow != "--" && arrow != "->") {
      parse_fail(line, tokens[1].column,
                 "expected '--' or '->', got '" + std::string(arrow) + "'");
    }
    items.push_back(OrderingSpecItem{false, arrow == "->",
                                     std::string(tokens[0].text),
                                     std::string(tokens[2].text)});
  });
  return items;
}

VertexOrder parse_vertex_order(std::string_view text) {
  VertexOrder order;
  for_each_line(text, [&](std::size_t line, std::string_view raw) {
    const std::vector<Token> tokens = tokenize(raw);
    if (tokens.empty()) return;
    if (tokens.size() != 1) {
      parse_fail(line, tokens[1].column, "expected one vertex id per line");
    }
    order.emplace_back(tokens[0].text);
  });
  return order;
}

namespace {

[[noreturn]] void config_fail(std::size_t line, const std::string& message) {
  throw Error(ErrorKind::InvalidOption,
              "config line " + std::to_string(line) + ": " + message);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double config_double(std::string_view value, std::size_t line,
                     std::string_view key) {
  double parsed = 0.0;
  const auto res =
      std::from_chars(value.data(), value.data() + value.size(), parsed);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size()) {
    config_fail(line, "key '" + std::string(key) +
                          "' needs a number, got '" + std::string(value) +
                          "'");
  }
  return parsed;
}

bool config_bool(std::string_view value, std::size_t line,
                 std::string_view key) {
  if (value == "true") return true;
  if (value == "false") return false;
  config_fail(line, "key '" + std::string(key) +
                        "' needs 'true' or 'false', got '" +
                        std::string(value) + "'");
}

// Maps a closed set of words to enum values; fails naming the key.
template <typename T>
T config_choice(std::string_view value, std::size_t line,
                std::string_view key,
                std::initializer_list<std::pair<std::string_view, T>> choices) {
  std::string expected;
  for (const auto& [word, result] : choices) {
    if (value == word) return result;
    if (!expected.empty()) expected += " | ";
    expected += word;
  }
  config_fail(line, "key '" + std::string(key) + "' needs one of " + expected +
                        ", got '" + std::string(value) + "'");
}

}  // namespace

void apply_config(Config& config, std::string_view text) {
  for_each_line(text, [&](std::size_t line, std::string_view raw) {
    const std::string_view stripped = trim(raw);
    if (stripped.empty() || stripped.front() == '#') return;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string_view::npos) {
      config_fail(line, "expected 'key = value'");
    }
    const std::string_view key = trim(stripped.substr(0, eq));
    const std::string_view value = trim(stripped.substr(eq + 1));
    if (key.empty()) config_fail(line, "empty key");
    if (value.empty()) {
      config_fail(line, "key '" + std::string(key) + "' has no value");
    }

    LayoutOptions& layout = config.layout;
    RenderStyle& style = config.style;
    if (key == "row_pitch") {
      layout.row_pitch = config_double(value, line, key);
    } else if (key == "col_pitch") {
      layout.col_pitch = config_double(value, line, key);
    } else if (key == "latitude_thickness") {
      layout.latitude_thickness = config_choice<BandThickness>(
          value, line, key,
          {{"thin", BandThickness::Thin}, {"thick", BandThickness::Thick}});
    } else if (key == "longitude_thickness") {
      layout.longitude_thickness = config_choice<BandThickness>(
          value, line, key,
          {{"thin", BandThickness::Thin}, {"thick", BandThickness::Thick}});
    } else if (key == "margins") {
      const double all = config_double(value, line, key);
      layout.margins = Margins{all, all, all, all};
    } else if (key == "margin_top") {
      layout.margins.top = config_double(value, line, key);
    } else if (key == "margin_right") {
      layout.margins.right = config_double(value, line, key);
    } else if (key == "margin_bottom") {
      layout.margins.bottom = config_double(value, line, key);
    } else if (key == "margin_left") {
      layout.margins.left = config_double(value, line, key);
    } else if (key == "vertex_labels") {
      layout.vertex_labels = config_choice<VertexLabelPlacement>(
          value, line, key,
          {{"on-band", VertexLabelPlacement::OnBand},
           {"left-margin", VertexLabelPlacement::LeftMargin},
           {"right-margin", VertexLabelPlacement::RightMargin}});
    } else if (key == "edge_labels") {
      layout.edge_labels = config_choice<EdgeLabelPlacement>(
          value, line, key,
          {{"on-band", EdgeLabelPlacement::OnBand},
           {"top-margin", EdgeLabelPlacement::TopMargin},
           {"bottom-margin", EdgeLabelPlacement::BottomMargin}});
    } else if (key == "marker") {
      layout.marker = config_choice<MarkerGlyph>(
          value, line, key,
          {{"arrowhead", MarkerGlyph::Arrowhead},
           {"diamond", MarkerGlyph::Diamond}});
    } else if (key == "separator_columns") {
      layout.separator_columns = config_double(value, line, key);
    } else if (key == "trim_underlays") {
      layout.trim_underlays = config_bool(value, line, key);
    } else if (key == "latitude_color") {
      style.latitude_color = std::string(value);
    } else if (key == "longitude_dark_color") {
      style.longitude_dark_color = std::string(value);
    } else if (key == "longitude_light_color") {
      style.longitude_light_color = std::string(value);
    } else if (key == "gap_underlay_color") {
      style.gap_underlay_color = std::string(value);
    } else if (key == "weight_mode") {
      style.weight_mode = config_choice<WeightMode>(
          value, line, key,
          {{"none", WeightMode::None},
           {"color-ramp", WeightMode::ColorRamp},
           {"annotation", WeightMode::Annotation},
           {"proportional-width", WeightMode::ProportionalWidth}});
    } else if (key == "width_scale") {
      style.width_scale = config_choice<WidthScale>(
          value, line, key,
          {{"linear", WidthScale::Linear},
           {"logarithmic", WidthScale::Logarithmic}});
    } else if (key == "ramp_bucket_1") {
      style.ramp_buckets[0] = std::string(value);
    } else if (key == "ramp_bucket_2") {
      style.ramp_buckets[1] = std::string(value);
    } else if (key == "ramp_bucket_3") {
      style.ramp_buckets[2] = std::string(value);
    } else if (key == "ramp_bucket_4") {
      style.ramp_buckets[3] = std::string(value);
    } else if (key == "font_family") {
      style.font_family = std::string(value);
    } else if (key == "font_size") {
      style.font_size = config_double(value, line, key);
    } else if (key == "min_band_width") {
      style.min_band_width = config_double(value, line, key);
    } else if (key == "max_band_width") {
      style.max_band_width = config_double(value, line, key);
    } else if (key == "order") {
      config.strategy = config_choice<OrderingStrategy>(
          value, line, key,
          {{"canonical", OrderingStrategy::Canonical},
           {"outdeg", OrderingStrategy::OutDegree},
           {"indeg", OrderingStrategy::InDegree},
           {"weight", OrderingStrategy::Weight}});
    } else if (key == "weight_direction") {
      config.weight_direction = config_choice<SortDirection>(
          value, line, key,
          {{"ascending", SortDirection::Ascending},
           {"descending", SortDirection::Descending}});
    } else if (key == "show_absent") {
      config.show_absent = config_bool(value, line, key);
    } else if (key == "group_gaps") {
      config.group_gaps = config_bool(value, line, key);
    } else if (key == "complement") {
      config.complement = config_bool(value, line, key);
    } else {
      config_fail(line, "unknown key '" + std::string(key) + "'");
    }
  });
}

Config parse_config(std::string_view text) {
  Config config;
  apply_config(config, text);
  return config;
}

std::string export_layout(const CartographicLayout& layout) {
  std::string out;
  out.reserve(64 + 48 * layout.latitudes.size() +
              72 * layout.longitudes.size() + 32 * layout.gaps.size());
  out += "canvas\t";
  out += format_fixed3(layout.canvas.width);
  out += '\t';
  out += format_fixed3(layout.canvas.height);
  out += '\n';
  for (const Latitude& lat : layout.latitudes) {
    out += "latitude\t";
    out += lat.vertex;
    out += '\t';
    out += format_fixed3(lat.y_center);
    out += '\t';
    out += format_fixed3(lat.band_height);
    out += '\t';
    out += format_fixed3(lat.underlay_x0);
    out += '\t';
    out += format_fixed3(lat.underlay_x1);
    out += '\n';
  }
  for (const Longitude& lon : layout.longitudes) {
    out += "longitude\t";
    out += lon.key;
    out += '\t';
    out += format_fixed3(lon.x_center);
    out += '\t';
    out += format_fixed3(lon.y_top);
    out += '\t';
    out += format_fixed3(lon.y_bottom);
    out += '\t';
    out += lon.ink_class == InkClass::Light ? "light" : "dark";
    out += '\t';
    out += format_fixed3(lon.band_width);
    out += '\n';
  }
  for (const GapColumn& gap : layout.gaps) {
    out += "gap\t";
    out += gap.purpose == GapKind::AbsentEdge ? "absent" : "separator";
    out += '\t';
    out += format_fixed3(gap.x_center);
    out += '\n';
  }
  for (const Annotation& note : layout.annotations) {
    out += "annotation\t";
    out += format_fixed3(note.x);
    out += '\t';
    out += format_fixed3(note.y);
    out += '\t';
    out += note.text;
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw Error(ErrorKind::IoError, "cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  if (file.bad()) {
    throw Error(ErrorKind::IoError, "failed reading '" + path + "'");
  }
  return std::move(buffer).str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
  }
  file.write(content.data(),
             static_cast<std::streamsize>(content.size()));
  file.flush();
  if (!file.good()) {
    throw Error(ErrorKind::IoError, "failed writing '" + path + "'");
  }
}

}  // namespace cartograph
