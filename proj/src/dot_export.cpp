#include "dot_export.hpp"

namespace netstab {

std::vector<DotFile> export_dot(const ClassifyReport& report) {
  PlayerSet ps(report.n);
  std::size_t digits = std::to_string((std::size_t{1} << ps.link_count()) - 1)
                           .size();
  std::vector<DotFile> out;
  for (const auto& [g, flags] : report.rows) {
    std::string index = std::to_string(g.bits);
    index.insert(0, digits - index.size(), '0');

    std::string label = network_label(g) + ":";
    bool any = false;
    for (std::size_t c = 0; c < report.concepts.size(); ++c) {
      if (!flags[c]) continue;
      label += std::string(any ? "," : " ") + report.concepts[c];
      any = true;
    }
    if (!any) label += " -";

    std::string dot = "graph net" + std::to_string(g.bits) + " {\n";
    dot += "  label=\"" + label + "\";\n";
    dot += "  node [shape=circle];\n";
    for (int i = 1; i <= report.n; ++i) {
      dot += "  " + std::to_string(i) + ";\n";
    }
    for (int idx = 0; idx < ps.link_count(); ++idx) {
      if (!g.contains(idx)) continue;
      Link l = ps.link_at(idx);
      dot += "  " + std::to_string(l.i) + " -- " + std::to_string(l.j) +
             ";\n";
    }
    dot += "}\n";
    out.push_back(DotFile{"net_" + index + ".dot", std::move(dot)});
  }
  return out;
}

}  // namespace netstab
