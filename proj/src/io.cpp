#include "ordturan/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ordturan/catalog.hpp"

namespace ordturan::io {
namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw ParseError("expected an integer, got '" + s + "'");
  return v;
}

// "a=2" -> 2, "2" -> 2
int param_value(const std::string& s) {
  const auto eq = s.find('=');
  return to_int(eq == std::string::npos ? s : s.substr(eq + 1));
}

void need(const std::vector<std::string>& params, std::size_t count, const std::string& family) {
  if (params.size() != count) {
    throw ParseError(family + " takes " + std::to_string(count) + " parameter(s)");
  }
}

}  // namespace

std::string graph_to_json(const OrderedGraph& g) {
  std::string out = "{\"n\": " + std::to_string(g.n()) + ", \"edges\": [";
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (i > 0) out += ", ";
    out += "[" + std::to_string(g.edge(i).u) + ", " + std::to_string(g.edge(i).v) + "]";
  }
  out += "]}\n";
  return out;
}

OrderedGraph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("graph json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
      !j["n"].is_number_integer() || !j["edges"].is_array()) {
    throw ParseError("graph json needs integer 'n' and array 'edges'");
  }
  const int n = j["n"].get<int>();
  if (n < 0) throw ParseError("graph json: negative n");
  std::vector<Edge> edges;
  for (const auto& pair : j["edges"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw ParseError("graph json: each edge is a pair of integers");
    }
    Edge e{pair[0].get<int>(), pair[1].get<int>()};
    if (e.u >= e.v) throw ParseError("graph json: edge pairs must be ascending");
    if (!edges.empty() && !(edges.back() < e)) {
      throw ParseError("graph json: edges must be sorted and distinct");
    }
    edges.push_back(e);
  }
  try {
    return OrderedGraph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("graph json: ") + e.what());
  }
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string matching_to_text(const PointMatching& g, const MatchingHeader& h) {
  std::string out = "# ordturan point-matching\n";
  out += "# kind " + h.kind + "\n";
  out += "# d " + std::to_string(h.d) + "\n";
  out += "# n " + std::to_string(h.n) + "\n";
  out += "# eps " + format_real(h.eps) + "\n";
  out += "# seed " + std::to_string(h.seed) + "\n";
  if (!h.sampler.empty()) out += "# sampler " + h.sampler + "\n";
  out += "# edges " + std::to_string(g.size()) + "\n";
  out += "# columns x y depth block\n";
  for (const auto& e : g.edges()) {
    out += format_real(e.x) + " " + format_real(e.y) + " " + std::to_string(e.depth) + " " +
           std::to_string(e.block) + "\n";
  }
  return out;
}

PointMatching matching_from_text(const std::string& text, MatchingHeader* header) {
  MatchingHeader h;
  std::vector<PointEdge> edges;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    if (line[0] == '#') {
      std::string hash, key, value;
      fields >> hash >> key >> value;
      try {
        if (key == "kind") h.kind = value;
        else if (key == "d") h.d = std::stoi(value);
        else if (key == "n") h.n = std::stoul(value);
        else if (key == "eps") h.eps = std::stod(value);
        else if (key == "seed") h.seed = std::stoull(value);
        else if (key == "sampler") h.sampler = value;
      } catch (const std::exception&) {
        throw ParseError("matching header line " + std::to_string(lineno) + ": bad value");
      }
      continue;
    }
    PointEdge e;
    long long depth = 0, block = 0;
    if (!(fields >> e.x >> e.y >> depth >> block) || depth < 0 || block < 0) {
      throw ParseError("matching line " + std::to_string(lineno) + ": expected x y depth block");
    }
    e.depth = static_cast<int>(depth);
    e.block = static_cast<std::uint32_t>(block);
    edges.push_back(e);
  }
  if (header != nullptr) *header = h;
  try {
    return PointMatching(std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("matching: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

OrderedGraph build_family(const std::string& name, const std::vector<std::string>& params) {
  const auto fam = lower(name);
  if (fam == "p") {
    need(params, 1, "P");
    return catalog::build_P(param_value(params[0]));
  }
  if (fam == "q") {
    need(params, 2, "Q");
    return catalog::build_Q(param_value(params[0]), param_value(params[1]));
  }
  if (fam == "b") {
    need(params, 2, "B");
    return catalog::build_B(param_value(params[0]), param_value(params[1]));
  }
  if (fam == "m") {
    need(params, 1, "M");
    return catalog::build_M(param_value(params[0]));
  }
  if (fam == "hd") {
    need(params, 1, "Hd");
    return catalog::build_H_d(param_value(params[0]));
  }
  if (fam == "hstair") {
    need(params, 1, "Hstair");
    return catalog::build_H_stair(param_value(params[0]));
  }
  if (fam == "pattern") {
    std::vector<std::pair<int, int>> edges;
    int n = -1;
    for (const auto& p : params) {
      if (lower(p).rfind("n=", 0) == 0) {
        n = to_int(p.substr(2));
        continue;
      }
      const auto dash = p.find('-');
      if (dash == std::string::npos) throw ParseError("pattern edge '" + p + "' is not u-v");
      edges.emplace_back(to_int(p.substr(0, dash)), to_int(p.substr(dash + 1)));
    }
    return catalog::build_pattern(edges, n);
  }
  throw ParseError("unknown family '" + name + "'");
}

OrderedGraph parse_pattern_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return build_family(spec, {});
  return build_family(spec.substr(0, colon), split(spec.substr(colon + 1), ','));
}

WitnessSpec make_witness(const std::string& family, const std::vector<std::string>& params,
                         const ExactOptions& options) {
  const auto fam = lower(family);
  WitnessSpec w;
  w.options = options;
  if (fam == "b") {
    need(params, 1, "witness B");
    const int a = param_value(params[0]);
    w.name = "B[a=" + std::to_string(a) + "]";
    w.family = [a](int ell) { return catalog::build_B(a, a * ell + 1); };
    return w;
  }
  need(params, 0, "witness " + family);
  if (fam == "m") {
    w.name = "M";
    w.family = [](int k) { return catalog::build_M(k); };
  } else if (fam == "hd") {
    w.name = "Hd";
    w.family = [](int d) { return catalog::build_H_d(d); };
  } else if (fam == "p") {
    w.name = "P";
    w.family = [](int k) { return catalog::build_P(k); };
  } else if (fam == "hstair") {
    w.name = "Hstair";
    w.family = [](int t) { return catalog::build_H_stair(t); };
  } else {
    throw ParseError("unknown witness family '" + family + "'");
  }
  return w;
}

std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(part));
      continue;
    }
    const int lo = to_int(part.substr(0, dots));
    const int hi = to_int(part.substr(dots + 2));
    if (hi < lo) throw ParseError("empty index range '" + part + "'");
    for (int i = lo; i <= hi; ++i) out.push_back(i);
  }
  if (out.empty()) throw ParseError("no indices given");
  return out;
}

std::string edges_to_text(const std::vector<Edge>& edges) {
  std::string out = "[";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i > 0) out += ", ";
    out += "[" + std::to_string(edges[i].u) + ", " + std::to_string(edges[i].v) + "]";
  }
  return out + "]";
}

std::string solve_report_text(const SolveReport& r) {
  std::string out;
  out += "host_edges " + std::to_string(r.host_edges) + "\n";
  out += "optimum " + std::to_string(r.optimum) + "\n";
  out += "deleted " + edges_to_text(r.deleted) + "\n";
  out += "status " + to_string(r.status) + "\n";
  out += "deletion_lower_bound " + std::to_string(r.deletion_lower_bound) + "\n";
  out += "nodes " + std::to_string(r.nodes_explored) + "\n";
  out += "copies " + std::to_string(r.copies) + "\n";
  return out;
}

std::string bounds_csv_header() {
  return "pattern,n,e,chi_lt,ell,vec_pi,pi,rho_lower,lower_provenance,rho_upper,"
         "upper_provenance,valid\n";
}

std::string bounds_csv_row(const OrderedGraph& f, const DensityBounds& b) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  std::string out = quote(b.pattern_id) + "," + std::to_string(f.n()) + "," +
                    std::to_string(f.edge_count()) + "," + std::to_string(chi_interval(f)) +
                    "," + std::to_string(ell_monotone(f)) + "," + to_string(b.vec_pi) + "," +
                    (b.pi ? to_string(*b.pi) : std::string("-")) + "," +
                    to_string(b.rho_lower) + "," + quote(b.lower_provenance) + "," +
                    to_string(b.rho_upper) + "," + quote(b.upper_provenance) + "," +
                    (b.valid ? "yes" : "no") + "\n";
  return out;
}

}  // namespace ordturan::io
