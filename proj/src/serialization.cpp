#include "qsslab/serialization.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "qsslab/errors.hpp"

namespace qsslab::io {

using nlohmann::json;
using nlohmann::ordered_json;

OutputFormat parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "table") return OutputFormat::Table;
  if (name == "csv") return OutputFormat::Csv;
  throw DomainError("unknown output format '" + std::string(name) + "'");
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

std::string write_state(const PureState& psi) {
  ordered_json doc;
  doc["format"] = kStateFormatVersion;
  doc["num_qubits"] = psi.num_qubits();
  ordered_json amps = ordered_json::array();
  for (const Complex& z : psi.amplitudes()) amps.push_back({z.real(), z.imag()});
  doc["amplitudes"] = std::move(amps);
  return doc.dump(2) + "\n";
}

PureState read_state(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("state file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("state file must be a JSON object");
  if (!doc.contains("format") || !doc["format"].is_number_integer() ||
      doc["format"].get<int>() != kStateFormatVersion) {
    throw FormatError("state file must declare \"format\": 1");
  }
  if (!doc.contains("num_qubits") || !doc["num_qubits"].is_number_integer()) {
    throw FormatError("state file lacks integer \"num_qubits\"");
  }
  if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
    throw FormatError("state file lacks \"amplitudes\" array");
  }
  std::vector<Complex> amps;
  for (const json& pair : doc["amplitudes"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw FormatError("each amplitude must be a [real, imaginary] pair");
    }
    amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return PureState(doc["num_qubits"].get<int>(), std::move(amps));
}

namespace {

std::string members_field(const ShareSubset& s, char sep) {
  std::string out;
  for (int m : s.members()) {
    if (!out.empty()) out += sep;
    out += std::to_string(m);
  }
  return out;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string optional_int(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string("none");
}

}  // namespace

std::string render(const AccessReport& report, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Json: {
      ordered_json doc;
      doc["prior"] = {{"q0", report.prior.q0()}, {"q1", report.prior.q1()}};
      doc["threshold"] = report.threshold ? ordered_json(*report.threshold) : ordered_json(nullptr);
      doc["is_threshold_3_of_5"] = report.is_threshold(3);
      ordered_json rows = ordered_json::array();
      for (const auto& v : report.verdicts) {
        rows.push_back({{"members", v.subset.members()},
                        {"holevo_bits", v.holevo_bits},
                        {"trace_dist", v.trace_dist},
                        {"classification", std::string(to_string(v.classification))}});
      }
      doc["subsets"] = std::move(rows);
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Table: {
      out << "prior q0=" << format_number(report.prior.q0())
          << " q1=" << format_number(report.prior.q1()) << '\n';
      out << pad("members", 14) << pad("holevo_bits", 24) << pad("trace_dist", 24)
          << "classification\n";
      for (const auto& v : report.verdicts) {
        out << pad(v.subset.to_string(), 14) << pad(format_number(v.holevo_bits), 24)
            << pad(format_number(v.trace_dist), 24) << to_string(v.classification) << '\n';
      }
      out << "threshold: " << optional_int(report.threshold)
          << (report.is_threshold(3) ? " (exact (3,5) threshold structure)" : "") << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "members,holevo_bits,trace_dist,classification\n";
      for (const auto& v : report.verdicts) {
        out << members_field(v.subset, ' ') << ',' << format_number(v.holevo_bits) << ','
            << format_number(v.trace_dist) << ',' << to_string(v.classification) << '\n';
      }
      break;
  }
  return out.str();
}

std::string render(const code5::DistanceReport& report, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Json: {
      ordered_json doc;
      doc["max_weight"] = report.max_weight;
      doc["distance"] = report.distance ? ordered_json(*report.distance) : ordered_json(nullptr);
      doc["norm0"] = report.norm0;
      doc["norm1"] = report.norm1;
      doc["overlap"] = {report.overlap.real(), report.overlap.imag()};
      ordered_json rows = ordered_json::array();
      for (const auto& w : report.weights) {
        rows.push_back({{"weight", w.weight},
                        {"operators", w.operators_checked},
                        {"max_off_diagonal", w.max_off_diagonal},
                        {"max_diagonal_difference", w.max_diagonal_difference},
                        {"violations", w.violations},
                        {"first_violation", w.first_violation ? ordered_json(*w.first_violation)
                                                              : ordered_json(nullptr)}});
      }
      doc["weights"] = std::move(rows);
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Table:
      out << pad("weight", 8) << pad("operators", 11) << pad("max_off_diagonal", 24)
          << pad("max_diagonal_diff", 24) << pad("violations", 12) << "first_violation\n";
      for (const auto& w : report.weights) {
        out << pad(std::to_string(w.weight), 8) << pad(std::to_string(w.operators_checked), 11)
            << pad(format_number(w.max_off_diagonal), 24)
            << pad(format_number(w.max_diagonal_difference), 24)
            << pad(std::to_string(w.violations), 12) << w.first_violation.value_or("-") << '\n';
      }
      out << "<psi0|psi0>=" << format_number(report.norm0)
          << " <psi1|psi1>=" << format_number(report.norm1)
          << " |<psi0|psi1>|=" << format_number(std::abs(report.overlap)) << '\n';
      out << "distance: "
          << (report.distance ? std::to_string(*report.distance)
                              : "> " + std::to_string(report.max_weight))
          << '\n';
      break;
    case OutputFormat::Csv:
      out << "weight,operators,max_off_diagonal,max_diagonal_difference,violations,"
             "first_violation\n";
      for (const auto& w : report.weights) {
        out << w.weight << ',' << w.operators_checked << ',' << format_number(w.max_off_diagonal)
            << ',' << format_number(w.max_diagonal_difference) << ',' << w.violations << ','
            << w.first_violation.value_or("") << '\n';
      }
      break;
  }
  return out.str();
}

std::string render(const classical::SearchReport& report, OutputFormat format) {
  std::ostringstream out;
  const std::string verdict = report.found ? "found" : "none";
  switch (format) {
    case OutputFormat::Json: {
      ordered_json doc;
      doc["scope"] = "linear schemes over GF(2), 1-bit secret, 1-bit shares";
      doc["n"] = report.n;
      doc["k"] = report.k;
      doc["max_randomness"] = report.max_randomness;
      doc["verdict"] = verdict;
      doc["nodes_visited"] = report.nodes_visited;
      doc["schemes_enumerated"] = report.schemes_enumerated;
      doc["pruned"] = report.pruned;
      doc["witnesses"] = report.witnesses;
      if (report.witness) {
        doc["witness"] = {{"randomness_bits", report.witness->randomness_bits()},
                          {"vectors", report.witness->vectors()}};
      } else {
        doc["witness"] = nullptr;
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Table:
      out << "linear (" << report.k << "," << report.n << ") threshold schemes over GF(2), "
          << "1-bit shares, randomness <= " << report.max_randomness << " bits\n";
      out << pad("verdict", 20) << verdict << '\n';
      out << pad("nodes_visited", 20) << report.nodes_visited << '\n';
      out << pad("schemes_enumerated", 20) << report.schemes_enumerated << '\n';
      out << pad("pruned", 20) << report.pruned << '\n';
      out << pad("witnesses", 20) << report.witnesses << '\n';
      if (report.witness) {
        out << pad("witness", 20) << "m=" << report.witness->randomness_bits() << " vectors=";
        for (std::uint32_t v : report.witness->vectors()) out << v << ' ';
        out << '\n';
      }
      break;
    case OutputFormat::Csv:
      out << "n,k,max_randomness,verdict,nodes_visited,schemes_enumerated,pruned,witnesses\n";
      out << report.n << ',' << report.k << ',' << report.max_randomness << ',' << verdict << ','
          << report.nodes_visited << ',' << report.schemes_enumerated << ',' << report.pruned
          << ',' << report.witnesses << '\n';
      break;
  }
  return out.str();
}

std::string render(const classical::BoundReport& report, const classical::ThresholdParams& params,
                   OutputFormat format) {
  std::ostringstream out;
  const std::string verdict = report.satisfied ? "satisfied" : "violated";
  switch (format) {
    case OutputFormat::Json: {
      ordered_json doc;
      doc["n"] = params.n;
      doc["k"] = params.k;
      doc["share_sizes"] = params.share_sizes;
      doc["mean_share_size"] = report.mean_share_size;
      doc["bound"] = report.bound;
      doc["verdict"] = verdict;
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Table:
      out << "mean share size " << format_number(report.mean_share_size) << " vs n-k+2 = "
          << report.bound << ": " << verdict << '\n';
      break;
    case OutputFormat::Csv:
      out << "n,k,mean_share_size,bound,verdict\n"
          << params.n << ',' << params.k << ',' << format_number(report.mean_share_size) << ','
          << report.bound << ',' << verdict << '\n';
      break;
  }
  return out.str();
}

}  // namespace qsslab::io
