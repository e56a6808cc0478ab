#pragma once

#include <cstdint>
#include <string>

#include "wirecode/embed.hpp"
#include "wirecode/syndrome.hpp"
#include "wirecode/verify.hpp"

namespace wirecode {

// format: "wirecode/1"
std::string wire_to_json(const WireCode& wire);
WireCode wire_from_json(const std::string& text);

// format: "placed/1"
std::string placed_to_json(const PlacedWireCode& placed);
PlacedWireCode placed_from_json(const std::string& text);

// format: "embedplan/1"
std::string plan_to_json(const EmbeddingPlan& plan);
EmbeddingPlan plan_from_json(const std::string& text);

std::string schedule_to_json(const Schedule& sched);
std::string simulation_to_json(const SimulationResult& result, uint64_t seed, const std::string& error);
std::string report_to_json(const VerificationReport& report);

// Qubits are drawn as circles (copy register in peach, following the figure
// convention), checks as boxes. Grid placements carry pinned positions.
std::string placed_to_dot(const PlacedWireCode& placed);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace wirecode
