#pragma once

#include <string>
#include <string_view>

#include "vscif/core.hpp"

namespace vscif {

// Instance files:
//   {"items":[...],"classes":[{"capacity":c,"cost":k},...],"cut_limit":d,
//    "cost_model":"linear"|"monotone","known_optimum":v|null}
// Packing files:
//   {"bins":[{"class_index":i,"fragments":[{"parent":p,"piece":q,"size":s},...]},...]}
// Keys are written in exactly this order. Readers accept `//` and `/* */`
// comments so generated files may carry a provenance header line.

std::string instance_to_json(const Instance& instance);
Instance instance_from_json(std::string_view text);

std::string packing_to_json(const Packing& packing);
Packing packing_from_json(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace vscif
