#include "flagweak/export.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "flagweak/lattice.hpp"

namespace flagweak {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const HasseDiagram& hasse, Notation notation) {
  std::ostringstream os;
  os << "digraph flag_weak_order {\n";
  os << "  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int i = 0; i < hasse.size(); ++i) {
    const auto label = format_element(hasse.element(i), notation) + "\\nfinv=" + std::to_string(hasse.finv(i));
    os << "  n" << i << " [label=" << quoted(label) << "];\n";
  }
  for (const auto& e : hasse.edges()) {
    os << "  n" << e.from << " -> n" << e.to << " [color=" << (e.label.is_a() ? "red" : "black")
       << ", label=" << quoted(e.label.to_string()) << ", arrowhead=none];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_json(const HasseDiagram& hasse, Notation notation, int indent) {
  nlohmann::ordered_json j;
  j["r"] = hasse.context().r();
  j["n"] = hasse.context().n();
  j["nodes"] = nlohmann::ordered_json::array();
  for (int i = 0; i < hasse.size(); ++i)
    j["nodes"].push_back({{"id", i}, {"window", format_element(hasse.element(i), notation)}, {"finv", hasse.finv(i)}});
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : hasse.edges())
    j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"gen", e.label.to_string()}});
  return j.dump(indent) + "\n";
}

std::string mobius_csv(const HasseDiagram& hasse, Notation notation) {
  const Reachability reach(hasse);
  std::ostringstream os;
  os << "from,to,mobius,class\n";
  for (int a = 0; a < hasse.size(); ++a) {
    const auto& g = hasse.element(a);
    for (int b = a; b < hasse.size(); ++b) {
      if (!reach.leq(a, b)) continue;
      const auto& h = hasse.element(b);
      os << quoted(format_element(g, notation)) << ',' << quoted(format_element(h, notation)) << ','
         << mobius(g, h) << ',' << classify_homotopy(g, h).to_string() << '\n';
    }
  }
  return os.str();
}

std::string to_dot(const ChainGraph& graph) {
  std::ostringstream os;
  os << "graph chains {\n  node [shape=box];\n";
  for (std::size_t v = 0; v < graph.vertices.size(); ++v)
    os << "  c" << v << " [label=" << quoted(graph.vertices[v].to_string()) << "];\n";
  for (const auto& e : graph.edges)
    os << "  c" << e.u << " -- c" << e.v << " [label=" << quoted(to_string(e.kind)) << "];\n";
  os << "}\n";
  return os.str();
}

DiagramShape shape_of(const HasseDiagram& hasse, Notation notation) {
  DiagramShape s{hasse.context().r(), hasse.context().n(), {}, {}};
  for (const auto& g : hasse.elements()) s.nodes.insert(format_element(g, notation));
  for (const auto& e : hasse.edges())
    s.edges.emplace(format_element(hasse.element(e.from), notation), format_element(hasse.element(e.to), notation),
                    e.label.is_a() ? 'a' : 'b');
  return s;
}

DiagramShape load_golden(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file " + path.string());
  const auto j = nlohmann::json::parse(in);
  DiagramShape s;
  s.r = j.at("r").get<int>();
  s.n = j.at("n").get<int>();
  for (const auto& node : j.at("nodes")) s.nodes.insert(node.get<std::string>());
  for (const auto& e : j.at("edges")) {
    const auto kind = e.at("kind").get<std::string>();
    if (kind != "a" && kind != "b") throw std::runtime_error("golden edge kind must be a or b");
    s.edges.emplace(e.at("from").get<std::string>(), e.at("to").get<std::string>(), kind[0]);
  }
  return s;
}

std::vector<std::string> compare_shapes(const DiagramShape& expected, const DiagramShape& actual) {
  std::vector<std::string> diffs;
  if (expected.r != actual.r || expected.n != actual.n)
    diffs.push_back("group differs: expected G(" + std::to_string(expected.r) + "," + std::to_string(expected.n) +
                    ")");
  for (const auto& v : expected.nodes)
    if (!actual.nodes.count(v)) diffs.push_back("missing node " + v);
  for (const auto& v : actual.nodes)
    if (!expected.nodes.count(v)) diffs.push_back("extra node " + v);
  auto edge_text = [](const auto& e) {
    return std::get<0>(e) + " -> " + std::get<1>(e) + " (" + std::get<2>(e) + ")";
  };
  for (const auto& e : expected.edges)
    if (!actual.edges.count(e)) diffs.push_back("missing edge " + edge_text(e));
  for (const auto& e : actual.edges)
    if (!expected.edges.count(e)) diffs.push_back("extra edge " + edge_text(e));
  return diffs;
}

}  // namespace flagweak
