#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qsslab/access_analysis.hpp"
#include "qsslab/classical_bound.hpp"
#include "qsslab/code5.hpp"
#include "qsslab/quantum_core.hpp"

namespace qsslab::io {

inline constexpr int kStateFormatVersion = 1;

/// Malformed or unsupported input document.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

enum class OutputFormat { Json, Table, Csv };

OutputFormat parse_output_format(std::string_view name);

/// {"format": 1, "num_qubits": n, "amplitudes": [[re, im], ...]} with
/// big-endian basis order. Numbers use the shortest representation that
/// round-trips exactly.
std::string write_state(const PureState& psi);

/// Inverse of write_state. Throws FormatError on malformed documents and
/// DomainError when the amplitudes are not a unit vector.
PureState read_state(std::string_view document);

/// Fixed-precision decimal used by table and CSV output (15 significant digits).
std::string format_number(double value);

std::string render(const AccessReport& report, OutputFormat format);
std::string render(const code5::DistanceReport& report, OutputFormat format);
std::string render(const classical::SearchReport& report, OutputFormat format);
std::string render(const classical::BoundReport& report, const classical::ThresholdParams& params,
                   OutputFormat format);

}  // namespace qsslab::io
