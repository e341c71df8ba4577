#pragma once

// File formats: JSON state files, whitespace-separated points files, CSV
// Husimi grids and JSON-lines scan records. Parse errors throw InputError.

#include <optional>
#include <string>

#include "aclab/anticoherence.hpp"
#include "aclab/majorana.hpp"
#include "aclab/search.hpp"
#include "aclab/sphere.hpp"
#include "aclab/symstate.hpp"

namespace aclab {

struct StateFile {
  SymmetricState state;
  std::optional<ExactState> exact;  // present when the file carried exact entries
};

/// {"n_qubits": N, "dicke": [[re, im], ...], "exact": [{num, den, sqrt, phase_num, phase_den}, ...]}
/// Either list may be omitted, not both; when both are given they must agree to 1e-9.
StateFile parse_state(const std::string& text);
StateFile read_state(const std::string& path);

std::string state_to_json(const SymmetricState& state, const ExactState* exact = nullptr);

/// One "theta phi mult" line per distinct point; '#' starts a comment.
MajoranaConfig parse_points(const std::string& text);
MajoranaConfig read_points(const std::string& path);
std::string points_to_text(const MajoranaConfig& config);

std::string husimi_csv(const HusimiGrid& grid);

/// {"t", "N", "n", "n_S", "n_N", "feasible", "x": ["p/q", ...]}; shape fields are null when infeasible.
std::string scan_record_json(const ScanRecord& record);

std::string report_json(const AnticoherenceReport& report);

/// %.17g
std::string format_double(double value);

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace aclab
