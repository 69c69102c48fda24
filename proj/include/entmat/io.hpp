#pragma once

#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "entmat/classify.hpp"
#include "entmat/entmatrix.hpp"
#include "entmat/errors.hpp"
#include "entmat/formulas.hpp"
#include "entmat/graph.hpp"

namespace entmat {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Graph JSON: {"edges": [[i, j], ...], "n": int} with 1-based vertices.

inline Graph graph_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    throw input_error("graph JSON must be an object with \"n\" and \"edges\"");
  if (!doc["n"].is_number_integer()) throw input_error("graph JSON: \"n\" must be an integer");
  if (!doc["edges"].is_array()) throw input_error("graph JSON: \"edges\" must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const json& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw input_error("graph JSON: each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return make_graph(doc["n"].get<int>(), edges);
}

inline Graph read_graph_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& ex) {
    throw input_error(std::string("invalid graph JSON: ") + ex.what());
  }
  return graph_from_json(doc);
}

inline std::string write_graph_json(const Graph& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges) edges.push_back(json::array({a, b}));
  return json{{"edges", edges}, {"n", g.n}}.dump();
}

// ---------------------------------------------------------------------------
// Shared text helpers.

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

inline long long parse_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw input_error("trailing characters in integer '" + s + "'");
    return v;
  } catch (const std::exception&) {
    throw input_error("expected an integer, got '" + s + "'");
  }
}

inline std::string edges_field(const std::vector<std::pair<int, int>>& edges) {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
  }
  return out;
}

inline std::vector<std::pair<int, int>> edges_from_field(const std::string& field) {
  std::vector<std::pair<int, int>> edges;
  if (field.empty()) return edges;
  for (const std::string& part : split(field, ';')) {
    auto nums = split(part, '-');
    if (nums.size() != 2) throw input_error("bad edge field '" + part + "'");
    edges.emplace_back(static_cast<int>(parse_int(nums[0])), static_cast<int>(parse_int(nums[1])));
  }
  return edges;
}

inline std::string canonical_hex(const CanonicalForm& cf) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%d:%016llx", cf.n,
                static_cast<unsigned long long>(cf.packed));
  return buf;
}

inline CanonicalForm canonical_from_hex(const std::string& s) {
  auto parts = split(s, ':');
  if (parts.size() != 2) throw input_error("bad canonical form '" + s + "'");
  CanonicalForm cf;
  cf.n = static_cast<int>(parse_int(parts[0]));
  cf.packed = std::stoull(parts[1], nullptr, 16);
  return cf;
}

// ---------------------------------------------------------------------------
// Entanglement matrix: CSV with midpoint labels on the first row and column,
// and a JSON mirror of the same structure.

inline std::string matrix_to_csv(const EntanglementMatrix& e) {
  std::ostringstream out;
  for (int j = 0; j < e.size(); ++j) out << ',' << label_name(j);
  out << '\n';
  for (int i = 0; i < e.size(); ++i) {
    out << label_name(i);
    for (int j = 0; j < e.size(); ++j) out << ',' << e.at(i, j);
    out << '\n';
  }
  return out.str();
}

struct MatrixCsv {
  std::vector<std::string> labels;
  std::vector<std::vector<long long>> values;

  friend bool operator==(const MatrixCsv&, const MatrixCsv&) = default;
};

/// Parses a matrix CSV section (stops at the first blank line).
inline MatrixCsv matrix_from_csv(const std::string& text) {
  MatrixCsv m;
  auto lines = split_lines(text);
  std::size_t row = 0;
  for (const std::string& line : lines) {
    if (line.empty()) break;
    auto cells = split(line, ',');
    if (row == 0) {
      m.labels.assign(cells.begin() + 1, cells.end());
    } else {
      if (cells.size() != m.labels.size() + 1)
        throw input_error("matrix CSV row has wrong arity: '" + line + "'");
      if (cells[0] != m.labels[row - 1])
        throw input_error("matrix CSV row label mismatch: '" + cells[0] + "'");
      std::vector<long long> vals;
      for (std::size_t c = 1; c < cells.size(); ++c) vals.push_back(parse_int(cells[c]));
      m.values.push_back(std::move(vals));
    }
    ++row;
  }
  if (m.values.size() != m.labels.size()) throw input_error("matrix CSV is not square");
  return m;
}

inline MatrixCsv matrix_as_table(const EntanglementMatrix& e) {
  MatrixCsv m;
  for (int i = 0; i < e.size(); ++i) {
    m.labels.push_back(label_name(i));
    std::vector<long long> row;
    for (int j = 0; j < e.size(); ++j) row.push_back(e.at(i, j));
    m.values.push_back(std::move(row));
  }
  return m;
}

inline json label_to_json(const MidpointLabel& lab) {
  json gens = json::array();
  for (const Chord& c : lab.generators) gens.push_back(json::array({c.a, c.b}));
  json inc = json::array();
  for (const Chord& c : lab.incident_chords) inc.push_back(json::array({c.a, c.b}));
  return json{{"label", label_name(lab.index)},
              {"kind", lab.primary ? "primary" : "secondary"},
              {"position", json::array({lab.position.x, lab.position.y})},
              {"generators", gens},
              {"incident_chords", inc},
              {"multiplicity", lab.multiplicity}};
}

inline json matrix_to_json(const EntanglementMatrix& e) {
  json labels = json::array();
  for (const MidpointLabel& lab : e.labeling.labels) labels.push_back(label_to_json(lab));
  json rows = json::array();
  for (int i = 0; i < e.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < e.size(); ++j) row.push_back(e.at(i, j));
    rows.push_back(row);
  }
  return json{{"labels", labels}, {"matrix", rows}};
}

// ---------------------------------------------------------------------------
// Classification table.

inline constexpr const char* kClassificationCsvHeader =
    "class,labeled_count,total_ebits,entanglement_class,canonical,representative_edges";

inline std::string classification_to_csv(const ClassificationTable& table) {
  std::ostringstream out;
  out << kClassificationCsvHeader << '\n';
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const ClassRecord& r = table.rows[i];
    out << (i + 1) << ',' << r.labeled_count << ',' << r.total_entanglement << ','
        << to_string(r.descriptor) << ',' << canonical_hex(r.canonical) << ','
        << edges_field(r.representative.edges) << '\n';
  }
  return out.str();
}

struct ClassificationCsvRow {
  long long index = 0;
  long long labeled_count = 0;
  long long total_ebits = 0;
  std::string descriptor;
  std::string canonical;
  std::vector<std::pair<int, int>> edges;

  friend bool operator==(const ClassificationCsvRow&, const ClassificationCsvRow&) = default;
};

inline std::vector<ClassificationCsvRow> classification_from_csv(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty() || lines[0] != kClassificationCsvHeader)
    throw input_error("classification CSV header mismatch");
  std::vector<ClassificationCsvRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto cells = split(lines[i], ',');
    if (cells.size() != 6) throw input_error("classification CSV row arity: '" + lines[i] + "'");
    ClassificationCsvRow row;
    row.index = parse_int(cells[0]);
    row.labeled_count = parse_int(cells[1]);
    row.total_ebits = parse_int(cells[2]);
    row.descriptor = cells[3];
    row.canonical = cells[4];
    row.edges = edges_from_field(cells[5]);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json classification_to_json(const ClassificationTable& table) {
  json rows = json::array();
  for (const ClassRecord& r : table.rows) {
    json edges = json::array();
    for (auto [a, b] : r.representative.edges) edges.push_back(json::array({a, b}));
    rows.push_back(json{{"canonical", canonical_hex(r.canonical)},
                        {"class", to_string(r.descriptor)},
                        {"labeled_count", r.labeled_count},
                        {"representative_edges", edges},
                        {"total_ebits", r.total_entanglement}});
  }
  return json{{"n", table.n}, {"rows", rows}};
}

inline ClassificationTable classification_from_json(const json& doc) {
  ClassificationTable table;
  table.n = doc.at("n").get<int>();
  for (const json& row : doc.at("rows")) {
    ClassRecord rec;
    rec.canonical = canonical_from_hex(row.at("canonical").get<std::string>());
    std::vector<std::pair<int, int>> edges;
    for (const json& e : row.at("representative_edges"))
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    rec.representative = make_graph(table.n, edges);
    rec.labeled_count = row.at("labeled_count").get<long long>();
    rec.total_entanglement = row.at("total_ebits").get<long long>();
    std::string d = row.at("class").get<std::string>();
    if (d == "Fully Separable") rec.descriptor = Descriptor::fully_separable;
    else if (d == "Bi-Separable") rec.descriptor = Descriptor::bi_separable;
    else if (d == "Entangled") rec.descriptor = Descriptor::entangled;
    else if (d == "Fully Entangled") rec.descriptor = Descriptor::fully_entangled;
    else throw input_error("unknown entanglement class '" + d + "'");
    table.rows.push_back(std::move(rec));
  }
  return table;
}

// ---------------------------------------------------------------------------
// Maximum-entanglement report.

inline constexpr const char* kReportCsvHeader = "n,case,formula_ebits,constructive_ebits,match";

inline std::string report_to_csv(const std::vector<CompareRow>& rows) {
  std::ostringstream out;
  out << kReportCsvHeader << '\n';
  for (const CompareRow& r : rows)
    out << r.n << ',' << to_string(r.case_tag) << ',' << r.formula << ',' << r.constructive
        << ',' << (r.match ? "true" : "false") << '\n';
  return out.str();
}

struct ReportCsvRow {
  int n = 0;
  std::string case_tag;
  long long formula = 0;
  long long constructive = 0;
  bool match = false;

  friend bool operator==(const ReportCsvRow&, const ReportCsvRow&) = default;
};

inline std::vector<ReportCsvRow> report_from_csv(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty() || lines[0] != kReportCsvHeader)
    throw input_error("report CSV header mismatch");
  std::vector<ReportCsvRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto cells = split(lines[i], ',');
    if (cells.size() != 5) throw input_error("report CSV row arity: '" + lines[i] + "'");
    ReportCsvRow row;
    row.n = static_cast<int>(parse_int(cells[0]));
    row.case_tag = cells[1];
    row.formula = parse_int(cells[2]);
    row.constructive = parse_int(cells[3]);
    if (cells[4] != "true" && cells[4] != "false")
      throw input_error("report CSV match flag must be true/false");
    row.match = cells[4] == "true";
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json report_to_json(const std::vector<CompareRow>& rows) {
  json out = json::array();
  for (const CompareRow& r : rows)
    out.push_back(json{{"case", to_string(r.case_tag)},
                       {"constructive_ebits", r.constructive},
                       {"formula_ebits", r.formula},
                       {"match", r.match},
                       {"n", r.n}});
  return json{{"rows", out}};
}

// ---------------------------------------------------------------------------
// Census output: one summary row plus the ring profile.

inline constexpr const char* kCensusSummaryHeader = "n,total_midpoints,rings,degree_histogram";
inline constexpr const char* kCensusRingHeader = "ring,radius,midpoints,degree";

inline std::string histogram_field(const std::map<int, int>& histogram) {
  std::string out;
  for (auto it = histogram.begin(); it != histogram.end(); ++it) {
    if (it != histogram.begin()) out += ';';
    out += std::to_string(it->first) + ":" + std::to_string(it->second);
  }
  return out;
}

inline std::map<int, int> histogram_from_field(const std::string& field) {
  std::map<int, int> histogram;
  if (field.empty()) return histogram;
  for (const std::string& part : split(field, ';')) {
    auto kv = split(part, ':');
    if (kv.size() != 2) throw input_error("bad histogram field '" + part + "'");
    histogram[static_cast<int>(parse_int(kv[0]))] = static_cast<int>(parse_int(kv[1]));
  }
  return histogram;
}

inline std::string census_to_csv(const CensusTableRow& row, const MidpointCensus& census) {
  std::ostringstream out;
  out << kCensusSummaryHeader << '\n'
      << row.n << ',' << row.total_midpoints << ',' << row.ring_count << ','
      << histogram_field(row.degree_histogram) << '\n'
      << '\n'
      << kCensusRingHeader << '\n';
  int index = 0;
  for (const Ring& ring : census.rings) {
    bool center = ring.radius <= census.tolerance;
    out << (center ? std::string("center") : std::to_string(++index)) << ','
        << format_double(center ? 0.0 : ring.radius) << ',' << ring.members.size() << ',';
    if (ring.degree_profile.size() == 1)
      out << ring.degree_profile.begin()->first;
    else
      out << "mixed";
    out << '\n';
  }
  return out.str();
}

struct CensusCsv {
  CensusTableRow summary;
  struct RingRow {
    std::string ring;  // "1", "2", ... or "center"
    double radius = 0.0;
    int midpoints = 0;
    std::string degree;

    friend bool operator==(const RingRow&, const RingRow&) = default;
  };
  std::vector<RingRow> rings;
};

inline CensusCsv census_from_csv(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.size() < 2 || lines[0] != kCensusSummaryHeader)
    throw input_error("census CSV header mismatch");
  CensusCsv out;
  auto cells = split(lines[1], ',');
  if (cells.size() != 4) throw input_error("census CSV summary arity");
  out.summary.n = static_cast<int>(parse_int(cells[0]));
  out.summary.total_midpoints = parse_int(cells[1]);
  out.summary.ring_count = static_cast<int>(parse_int(cells[2]));
  out.summary.degree_histogram = histogram_from_field(cells[3]);
  std::size_t i = 2;
  while (i < lines.size() && lines[i].empty()) ++i;
  if (i >= lines.size() || lines[i] != kCensusRingHeader)
    throw input_error("census CSV ring header missing");
  for (++i; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto rc = split(lines[i], ',');
    if (rc.size() != 4) throw input_error("census CSV ring arity: '" + lines[i] + "'");
    CensusCsv::RingRow ring;
    ring.ring = rc[0];
    ring.radius = std::stod(rc[1]);
    ring.midpoints = static_cast<int>(parse_int(rc[2]));
    ring.degree = rc[3];
    out.rings.push_back(std::move(ring));
  }
  return out;
}

inline json census_to_json(const CensusTableRow& row, const MidpointCensus& census) {
  json hist = json::object();
  for (auto [deg, count] : row.degree_histogram) hist[std::to_string(deg)] = count;
  json rings = json::array();
  int index = 0;
  for (const Ring& ring : census.rings) {
    bool center = ring.radius <= census.tolerance;
    json profile = json::object();
    for (auto [deg, count] : ring.degree_profile) profile[std::to_string(deg)] = count;
    rings.push_back(json{{"ring", center ? json("center") : json(++index)},
                         {"radius", center ? 0.0 : ring.radius},
                         {"midpoints", ring.members.size()},
                         {"degree_profile", profile}});
  }
  return json{{"n", row.n},
              {"total_midpoints", row.total_midpoints},
              {"rings", row.ring_count},
              {"degree_histogram", hist},
              {"ring_profile", rings}};
}

// ---------------------------------------------------------------------------
// Plot series (CSV pairs) and a minimal SVG line chart.

inline std::string series_to_csv(const std::vector<std::pair<int, long long>>& series) {
  std::ostringstream out;
  out << "n,emax_ebits\n";
  for (auto [n, v] : series) out << n << ',' << v << '\n';
  return out.str();
}

inline std::vector<std::pair<int, long long>> series_from_csv(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "n,emax_ebits")
    throw input_error("series CSV header mismatch");
  std::vector<std::pair<int, long long>> series;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto cells = split(lines[i], ',');
    if (cells.size() != 2) throw input_error("series CSV row arity: '" + lines[i] + "'");
    series.emplace_back(static_cast<int>(parse_int(cells[0])), parse_int(cells[1]));
  }
  return series;
}

inline std::string svg_line_chart(
    const std::vector<std::pair<std::string, std::vector<std::pair<int, long long>>>>& families) {
  const int width = 640, height = 440, margin = 50;
  int max_n = 1;
  long long max_v = 1;
  for (const auto& [name, series] : families)
    for (auto [n, v] : series) {
      max_n = std::max(max_n, n);
      max_v = std::max(max_v, v);
    }
  auto sx = [&](double n) { return margin + (width - 2 * margin) * n / max_n; };
  auto sy = [&](double v) { return height - margin - (height - 2 * margin) * v / max_v; };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
      << width - margin << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
      << height - margin << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
      << "\" font-size=\"12\" text-anchor=\"middle\">qubits n</text>\n";
  out << "<text x=\"14\" y=\"" << height / 2
      << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
      << height / 2 << ")\">E_max (ebits)</text>\n";
  int color_index = 0;
  int legend_y = margin;
  for (const auto& [name, series] : families) {
    const char* color = colors[color_index++ % 4];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (auto [n, v] : series)
      out << format_double(sx(n)) << ',' << format_double(sy(static_cast<double>(v))) << ' ';
    out << "\"/>\n";
    for (auto [n, v] : series)
      out << "<circle cx=\"" << format_double(sx(n)) << "\" cy=\""
          << format_double(sy(static_cast<double>(v))) << "\" r=\"2.5\" fill=\"" << color
          << "\"/>\n";
    out << "<text x=\"" << width - margin - 150 << "\" y=\"" << legend_y
        << "\" font-size=\"12\" fill=\"" << color << "\">" << name << "</text>\n";
    legend_y += 16;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace entmat
