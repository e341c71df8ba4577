#include "aclab/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "aclab/errors.hpp"
#include "json.hpp"

namespace aclab {

namespace {

using nlohmann::json;

BigInt json_integer(const json& v, const char* field) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? BigInt(std::to_string(v.get<unsigned long long>()))
                                  : BigInt(std::to_string(v.get<long long>()));
  }
  if (v.is_string()) {
    try {
      return BigInt(v.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw InputError(std::string("exact entry field '") + field + "' must be an integer or a decimal string");
}

ExactAmplitude parse_exact_entry(const json& e) {
  if (!e.is_object() || !e.contains("num") || !e.contains("den")) {
    throw InputError("exact entries need 'num' and 'den'");
  }
  const BigInt den = json_integer(e["den"], "den");
  if (sgn(den) == 0) throw InputError("exact entry has zero denominator");
  Rational value(json_integer(e["num"], "num"), den);
  value.canonicalize();
  const bool is_sqrt = e.value("sqrt", false);
  Rational phase = 0;
  if (e.contains("phase_num")) {
    const BigInt pden = e.contains("phase_den") ? json_integer(e["phase_den"], "phase_den") : BigInt(1);
    if (sgn(pden) == 0) throw InputError("exact entry has zero phase denominator");
    phase = Rational(json_integer(e["phase_num"], "phase_num"), pden);
    phase.canonicalize();
  }
  ExactAmplitude amp;
  if (is_sqrt) {
    if (sgn(value) < 0) throw InputError("sqrt of a negative number in exact entry");
    amp.prob = value;
  } else {
    amp.prob = value * value;
    if (sgn(value) < 0) phase += 1;
  }
  // Reduce the phase into [0, 2).
  const Rational two = 2;
  BigInt turns = phase.get_num() / (2 * phase.get_den());
  phase -= two * Rational(turns);
  if (sgn(phase) < 0) phase += two;
  phase.canonicalize();
  amp.phase = phase;
  return amp;
}

}  // namespace

std::string format_double(double value) {
  if (value == 0.0) return "0";  // drops the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

StateFile parse_state(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("state file must be a JSON object");
  try {
    std::optional<int> n_qubits;
    if (doc.contains("n_qubits")) {
      if (!doc["n_qubits"].is_number_integer() || doc["n_qubits"].get<long long>() < 0) {
        throw InputError("n_qubits must be a nonnegative integer");
      }
      n_qubits = doc["n_qubits"].get<int>();
    }
    std::optional<std::vector<Complex>> dicke;
    if (doc.contains("dicke")) {
      if (!doc["dicke"].is_array()) throw InputError("'dicke' must be a list of [re, im] pairs");
      std::vector<Complex> d;
      for (const auto& entry : doc["dicke"]) {
        if (entry.is_number()) {
          d.emplace_back(entry.get<double>(), 0.0);
        } else if (entry.is_array() && entry.size() == 2 && entry[0].is_number() && entry[1].is_number()) {
          d.emplace_back(entry[0].get<double>(), entry[1].get<double>());
        } else {
          throw InputError("'dicke' entries must be [re, im] pairs");
        }
        if (!std::isfinite(d.back().real()) || !std::isfinite(d.back().imag())) {
          throw InputError("'dicke' entries must be finite");
        }
      }
      dicke = std::move(d);
    }
    std::optional<ExactState> exact;
    if (doc.contains("exact")) {
      if (!doc["exact"].is_array()) throw InputError("'exact' must be a list");
      ExactState e;
      for (const auto& entry : doc["exact"]) e.push_back(parse_exact_entry(entry));
      exact = normalize_exact(std::move(e));
    }
    if (!dicke && !exact) throw InputError("state file needs 'dicke' or 'exact'");
    const std::size_t len = dicke ? dicke->size() : exact->size();
    if (len == 0) throw InputError("state file has no amplitudes");
    if (dicke && exact && dicke->size() != exact->size()) throw InputError("'dicke' and 'exact' lengths differ");
    if (n_qubits && static_cast<std::size_t>(*n_qubits) + 1 != len) {
      throw InputError("list length must be n_qubits + 1");
    }
    if (exact) {
      SymmetricState state = to_state(*exact);
      if (dicke) {
        const SymmetricState given(*dicke);
        // Same ray up to a global phase.
        Complex overlap = 0;
        for (int k = 0; k <= state.n_qubits(); ++k) overlap += std::conj(state[k]) * given[k];
        if (std::abs(std::abs(overlap) - 1.0) > 1e-9) throw InputError("'dicke' and 'exact' describe different states");
      }
      return StateFile{std::move(state), std::move(exact)};
    }
    return StateFile{SymmetricState(std::move(*dicke)), std::nullopt};
  } catch (const json::exception& e) {
    throw InputError(std::string("bad state file: ") + e.what());
  } catch (const ZeroStateError&) {
    throw InputError("state file has no nonzero amplitude");
  }
}

StateFile read_state(const std::string& path) { return parse_state(read_text(path)); }

std::string state_to_json(const SymmetricState& state, const ExactState* exact) {
  std::ostringstream out;
  out << "{\n  \"n_qubits\": " << state.n_qubits() << ",\n  \"dicke\": [";
  for (int k = 0; k <= state.n_qubits(); ++k) {
    out << (k == 0 ? "" : ", ") << '[' << format_double(state[k].real()) << ", " << format_double(state[k].imag()) << ']';
  }
  out << ']';
  if (exact != nullptr) {
    out << ",\n  \"exact\": [";
    for (std::size_t k = 0; k < exact->size(); ++k) {
      const auto& a = (*exact)[k];
      out << (k == 0 ? "\n    " : ",\n    ") << "{\"num\": \"" << a.prob.get_num().get_str() << "\", \"den\": \""
          << a.prob.get_den().get_str() << "\", \"sqrt\": true, \"phase_num\": " << a.phase.get_num().get_str()
          << ", \"phase_den\": " << a.phase.get_den().get_str() << '}';
    }
    out << "\n  ]";
  }
  out << "\n}\n";
  return out.str();
}

MajoranaConfig parse_points(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Direction> points;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    double theta = 0, phi = 0;
    if (!(fields >> theta)) {
      std::string rest;
      if (std::istringstream(line) >> rest) throw InputError("points line " + std::to_string(line_no) + ": bad theta");
      continue;
    }
    if (!(fields >> phi)) throw InputError("points line " + std::to_string(line_no) + ": missing phi");
    long mult = 1;
    if (!(fields >> mult)) {
      fields.clear();
      mult = 1;
    }
    std::string extra;
    if (fields >> extra) throw InputError("points line " + std::to_string(line_no) + ": trailing text");
    if (mult < 1) throw InputError("points line " + std::to_string(line_no) + ": multiplicity must be >= 1");
    if (!std::isfinite(theta) || !std::isfinite(phi) || theta < -1e-12 || theta > std::numbers::pi + 1e-12) {
      throw InputError("points line " + std::to_string(line_no) + ": theta must lie in [0, pi]");
    }
    for (long i = 0; i < mult; ++i) points.push_back(Direction{std::clamp(theta, 0.0, std::numbers::pi), phi});
  }
  if (points.empty()) throw InputError("points file has no points");
  return config_from_directions(points, 1e-12);
}

MajoranaConfig read_points(const std::string& path) { return parse_points(read_text(path)); }

std::string points_to_text(const MajoranaConfig& config) {
  std::ostringstream out;
  if (config.n_north > 0) out << "0 0 " << config.n_north << '\n';
  // Identical printed roots are merged.
  std::vector<std::pair<std::string, int>> lines;
  for (const auto& z : config.roots) {
    const Direction d = root_to_direction(z);
    std::string key = format_double(d.theta) + ' ' + format_double(d.phi);
    if (!lines.empty() && lines.back().first == key) {
      ++lines.back().second;
    } else {
      lines.emplace_back(std::move(key), 1);
    }
  }
  for (const auto& [key, mult] : lines) out << key << ' ' << mult << '\n';
  if (config.n_south > 0) out << format_double(std::numbers::pi) << " 0 " << config.n_south << '\n';
  return out.str();
}

std::string husimi_csv(const HusimiGrid& grid) {
  std::ostringstream out;
  out << "theta,phi,Q\n";
  for (std::size_t i = 0; i < grid.thetas.size(); ++i) {
    for (std::size_t j = 0; j < grid.phis.size(); ++j) {
      out << format_double(grid.thetas[i]) << ',' << format_double(grid.phis[j]) << ',' << format_double(grid.value(i, j)) << '\n';
    }
  }
  return out.str();
}

std::string scan_record_json(const ScanRecord& r) {
  std::ostringstream out;
  out << "{\"t\": " << r.t << ", \"N\": " << r.n_qubits;
  if (r.feasible) {
    out << ", \"n\": " << r.n << ", \"n_S\": " << r.n_south << ", \"n_N\": " << r.n_north;
  } else {
    out << ", \"n\": null, \"n_S\": null, \"n_N\": null";
  }
  out << ", \"feasible\": " << (r.feasible ? "true" : "false") << ", \"x\": [";
  for (std::size_t i = 0; i < r.x.size(); ++i) out << (i == 0 ? "" : ", ") << '"' << to_string(r.x[i]) << '"';
  out << "]}";
  return out.str();
}

std::string report_json(const AnticoherenceReport& report) {
  std::ostringstream out;
  out << "{\"n_qubits\": " << report.n_qubits << ", \"order\": " << report.order << ", \"methods\": {";
  for (std::size_t i = 0; i < kAllMethods.size(); ++i) {
    out << (i == 0 ? "" : ", ") << '"' << to_string(kAllMethods[i]) << "\": {\"order\": " << report.per_method[i]
        << ", \"residual_next\": " << format_double(report.residual_next[i]) << '}';
  }
  out << "}}";
  return out.str();
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("write to '" + path + "' failed");
}

}  // namespace aclab
