#pragma once

// JSON descriptions of carriers and sheaves. Schemas are documented in the
// README; parsing throws BadInput with a position-free message on any
// malformed description.

#include <string>

#include "mundici/sheaf.hpp"

namespace mundici {

MvPtr mv_algebra_from_json(const std::string& text);
LPtr l_group_from_json(const std::string& text);

// A sheaf file holds either MV stalks or group stalks, never a mix.
struct SheafFile {
  bool is_mv = false;
  MvSheaf mv;
  LSheaf lu;
};
SheafFile sheaf_from_json(const std::string& text);

std::string mv_algebra_to_json(const MvPtr& a);  // round-trips the documented kinds
std::string l_group_to_json(const LPtr& g);

std::string read_file(const std::string& path);  // BadInput on I/O failure

}  // namespace mundici
