#ifndef NETSTAB_DOT_EXPORT_HPP
#define NETSTAB_DOT_EXPORT_HPP

#include <string>
#include <vector>

#include "report.hpp"

namespace netstab {

struct DotFile {
  std::string name;
  std::string content;
};

// One DOT graph per network: nodes 1..n, edges in canonical link order,
// graph label carrying the concept flags that hold for the network.
std::vector<DotFile> export_dot(const ClassifyReport& report);

}  // namespace netstab

#endif
