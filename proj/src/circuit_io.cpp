#include "qamp/circuit_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qamp {

namespace {

using nlohmann::ordered_json;

GateKind gate_kind_from_name(const std::string& name) {
  static const std::pair<const char*, GateKind> table[] = {
      {"h", GateKind::H},       {"x", GateKind::X},     {"y", GateKind::Y},
      {"z", GateKind::Z},       {"s", GateKind::S},     {"t", GateKind::T},
      {"p", GateKind::Phase},   {"rx", GateKind::RotX}, {"ry", GateKind::RotY},
      {"rz", GateKind::RotZ},   {"cx", GateKind::CX},   {"cz", GateKind::CZ},
      {"swap", GateKind::Swap}, {"unitary", GateKind::Unitary}};
  for (const auto& [n, kind] : table)
    if (name == n) return kind;
  throw ValidationError("unknown gate name '" + name + "'");
}

bool kind_takes_angle(GateKind kind) {
  return kind == GateKind::Phase || kind == GateKind::RotX || kind == GateKind::RotY ||
         kind == GateKind::RotZ;
}

int require_int(const ordered_json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) throw ValidationError(path + "." + key + ": missing");
  if (!j[key].is_number_integer()) throw ValidationError(path + "." + key + ": expected an integer");
  return j[key].get<int>();
}

std::vector<int> read_int_array(const ordered_json& j, const std::string& key,
                                const std::string& path, bool required) {
  std::vector<int> out;
  if (!j.contains(key)) {
    if (required) throw ValidationError(path + "." + key + ": missing");
    return out;
  }
  if (!j[key].is_array()) throw ValidationError(path + "." + key + ": expected an array");
  for (std::size_t i = 0; i < j[key].size(); ++i) {
    if (!j[key][i].is_number_integer())
      throw ValidationError(path + "." + key + "[" + std::to_string(i) + "]: expected an integer");
    out.push_back(j[key][i].get<int>());
  }
  return out;
}

Cplx read_complex(const ordered_json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ValidationError(path + ": expected a [re, im] pair");
  return Cplx(j[0].get<double>(), j[1].get<double>());
}

Gate<> parse_gate(const ordered_json& j, const std::string& path) {
  if (!j.is_object()) throw ValidationError(path + ": expected an object");
  if (!j.contains("name") || !j["name"].is_string())
    throw ValidationError(path + ".name: missing or not a string");
  const GateKind kind = gate_kind_from_name(j["name"].get<std::string>());

  Gate<> gate;
  gate.kind = kind;
  gate.targets = read_int_array(j, "targets", path, /*required=*/true);
  gate.controls = read_int_array(j, "controls", path, /*required=*/false);

  if (kind_takes_angle(kind)) {
    if (!j.contains("params") || !j["params"].is_array() || j["params"].size() != 1 ||
        !j["params"][0].is_number())
      throw ValidationError(path + ".params: rotation and phase gates take exactly one angle");
    gate.angle = j["params"][0].get<double>();
  } else if (j.contains("params") && !j["params"].empty()) {
    throw ValidationError(path + ".params: gate takes no parameters");
  }

  if (kind == GateKind::Unitary) {
    if (!j.contains("matrix") || !j["matrix"].is_array())
      throw ValidationError(path + ".matrix: explicit gates need a matrix");
    const std::size_t rows = j["matrix"].size();
    if (rows != 2 && rows != 4)
      throw ValidationError(path + ".matrix: must be 2x2 or 4x4");
    CMatrix m(rows, rows);
    for (std::size_t r = 0; r < rows; ++r) {
      const auto& row = j["matrix"][r];
      if (!row.is_array() || row.size() != rows)
        throw ValidationError(path + ".matrix[" + std::to_string(r) + "]: wrong row length");
      for (std::size_t c = 0; c < rows; ++c)
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            read_complex(row[c], path + ".matrix[" + std::to_string(r) + "][" +
                                     std::to_string(c) + "]");
    }
    if (unitarity_defect<double>(m) > 1e-12)
      throw ValidationError(path + ".matrix: not unitary within 1e-12");
    gate.matrix = std::move(m);
  } else if (j.contains("matrix")) {
    throw ValidationError(path + ".matrix: only explicit 'unitary' gates carry a matrix");
  }
  return gate;
}

ordered_json gate_to_json(const Gate<>& g) {
  ordered_json j;
  j["name"] = gate_kind_name(g.kind);
  j["targets"] = g.targets;
  if (!g.controls.empty()) j["controls"] = g.controls;
  if (kind_takes_angle(g.kind)) j["params"] = {g.angle};
  if (g.kind == GateKind::Unitary) {
    ordered_json m = ordered_json::array();
    for (Eigen::Index r = 0; r < g.matrix.rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (Eigen::Index c = 0; c < g.matrix.cols(); ++c)
        row.push_back({g.matrix(r, c).real(), g.matrix(r, c).imag()});
      m.push_back(std::move(row));
    }
    j["matrix"] = std::move(m);
  }
  return j;
}

}  // namespace

ParseOutcome try_parse_circuit(const std::string& text) {
  ParseOutcome outcome;
  ordered_json doc = ordered_json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    outcome.errors.push_back("document: not valid JSON");
    return outcome;
  }
  if (!doc.is_object()) {
    outcome.errors.push_back("document: expected a JSON object");
    return outcome;
  }

  VerifierCircuit circuit;
  try {
    circuit.num_witness_qubits = require_int(doc, "num_witness_qubits", "document");
    circuit.num_ancilla_qubits = require_int(doc, "num_ancilla_qubits", "document");
    circuit.output_qubit = require_int(doc, "output_qubit", "document");
  } catch (const ValidationError& e) {
    outcome.errors.push_back(e.what());
    return outcome;
  }

  if (doc.contains("gates")) {
    if (!doc["gates"].is_array()) {
      outcome.errors.push_back("document.gates: expected an array");
    } else {
      for (std::size_t i = 0; i < doc["gates"].size(); ++i) {
        try {
          circuit.gates.push_back(parse_gate(doc["gates"][i], "gates[" + std::to_string(i) + "]"));
        } catch (const ValidationError& e) {
          outcome.errors.push_back(e.what());
        }
      }
    }
  }

  if (outcome.errors.empty()) {
    const auto report = validate(circuit);
    outcome.errors = report.errors;
  }
  if (outcome.errors.empty()) outcome.circuit = std::move(circuit);
  return outcome;
}

VerifierCircuit parse_circuit(const std::string& text) {
  auto outcome = try_parse_circuit(text);
  if (!outcome.circuit) {
    std::string joined = "circuit document rejected:";
    for (const auto& e : outcome.errors) joined += "\n  " + e;
    throw ValidationError(joined);
  }
  return std::move(*outcome.circuit);
}

std::string serialize_circuit(const VerifierCircuit& circuit) {
  ordered_json doc;
  doc["num_witness_qubits"] = circuit.num_witness_qubits;
  doc["num_ancilla_qubits"] = circuit.num_ancilla_qubits;
  doc["output_qubit"] = circuit.output_qubit;
  doc["gates"] = ordered_json::array();
  for (const auto& g : circuit.gates) doc["gates"].push_back(gate_to_json(g));
  return doc.dump(2) + "\n";
}

WitnessFile parse_witness(const std::string& text) {
  ordered_json doc = ordered_json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object())
    throw ValidationError("witness document: not a JSON object");
  const int n = require_int(doc, "num_qubits", "witness");
  if (n < 1 || n > kMaxStateQubits) throw ValidationError("witness.num_qubits: out of range");
  if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array())
    throw ValidationError("witness.amplitudes: missing array");
  const std::uint64_t dim = dim_of(n);
  if (doc["amplitudes"].size() != dim)
    throw ValidationError("witness.amplitudes: expected " + std::to_string(dim) + " entries");

  CVector amps(static_cast<Eigen::Index>(dim));
  for (std::uint64_t i = 0; i < dim; ++i)
    amps(static_cast<Eigen::Index>(i)) =
        read_complex(doc["amplitudes"][i], "witness.amplitudes[" + std::to_string(i) + "]");

  WitnessFile out;
  out.state = StateVector<>::from_amplitudes(n, std::move(amps));
  const double norm2 = out.state.squared_norm();
  if (norm2 <= 0.0) throw ValidationError("witness.amplitudes: zero vector");
  out.norm_error = std::abs(std::sqrt(norm2) - 1.0);
  if (out.norm_error > 1e-6) out.renormalized = true;
  out.state.renormalize();
  return out;
}

std::string serialize_witness(const StateVector<>& state) {
  ordered_json doc;
  doc["num_qubits"] = state.num_qubits();
  ordered_json amps = ordered_json::array();
  for (std::uint64_t i = 0; i < state.dimension(); ++i)
    amps.push_back({state.amp(i).real(), state.amp(i).imag()});
  doc["amplitudes"] = std::move(amps);
  return doc.dump(2) + "\n";
}

namespace {

ordered_json vector_to_json(const StateVector<>& s) {
  ordered_json out = ordered_json::array();
  for (std::uint64_t i = 0; i < s.dimension(); ++i)
    out.push_back({s.amp(i).real(), s.amp(i).imag()});
  return out;
}

}  // namespace

std::string decomposition_to_json(const JordanDecomposition& decomp) {
  ordered_json doc;
  doc["total_dimension"] = decomp.dimension;
  doc["subspaces"] = ordered_json::array();
  for (const auto& plane : decomp.planes) {
    ordered_json j;
    j["kind"] = "two_dim";
    j["p"] = plane.p;
    j["phi"] = plane.phi;
    j["v"] = vector_to_json(plane.v);
    j["v_perp"] = vector_to_json(plane.v_perp);
    j["w"] = vector_to_json(plane.w);
    j["w_perp"] = vector_to_json(plane.w_perp);
    doc["subspaces"].push_back(std::move(j));
  }
  for (const auto& line : decomp.lines) {
    ordered_json j;
    j["kind"] = "one_dim";
    j["accept_eigenvalue"] = line.accept_ev;
    j["ancilla_zero_eigenvalue"] = line.anczero_ev;
    j["vector"] = vector_to_json(line.vec);
    doc["subspaces"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file '" + path + "'");
  out << contents;
}

}  // namespace qamp
