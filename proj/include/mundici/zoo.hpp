#pragma once

// Built-in test structures: the chains L1..L6, the product L2xL3, the Chang
// algebra and the full rational interval on the MV side; (Z, n) for n = 1..4,
// Z^2 with unit (1,1), the lexicographic plane with unit (1,0) and Q with
// unit 1 on the group side. run_zoo exercises every library check over them.

#include <vector>

#include "mundici/json_io.hpp"
#include "mundici/logic.hpp"

namespace mundici {

struct ZooEntry {
  std::string key;  // CLI name, e.g. "L3" or "Z2"
  Model model;
};

std::vector<ZooEntry> zoo_algebras();
std::vector<ZooEntry> zoo_groups();

// Sample sheaves used by the sheaf checks and the CLI defaults.
MvSheaf zoo_mv_sheaf_sierpinski();
MvSheaf zoo_mv_sheaf_chain3();
LSheaf zoo_l_sheaf_sierpinski();
LSheaf zoo_l_sheaf_chain3();

std::vector<Report> run_zoo(const CheckOptions& opt = {});

}  // namespace mundici
